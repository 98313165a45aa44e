#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "trisat/graph.hpp"

namespace trisat {

enum class GraphFormat { json, edges };

/// Malformed serialized graph; what() names the position of the problem.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GraphFormat parse_format(std::string_view name);

/// JSON: {"parts":[n1,n2,n3],"edges":[[i,a,j,b],...]}.
/// Edge list: "tripartite n1 n2 n3" then one "i a j b" line per edge.
/// Both list edges in canonical order.
std::string serialize(const TripartiteGraph& g, GraphFormat format);

/// Accepts either format (detected from the first non-blank character).
TripartiteGraph deserialize(std::string_view text);

TripartiteGraph read_graph_file(const std::string& path);
void write_graph_file(const TripartiteGraph& g, const std::string& path, GraphFormat format);

} // namespace trisat
