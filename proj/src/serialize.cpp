#include "trisat/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace trisat {

using nlohmann::json;

GraphFormat parse_format(std::string_view name)
{
    if (name == "json")
        return GraphFormat::json;
    if (name == "edges")
        return GraphFormat::edges;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string serialize(const TripartiteGraph& g, GraphFormat format)
{
    const auto& n = g.part_sizes();
    auto edges = g.edges();
    if (format == GraphFormat::json) {
        nlohmann::ordered_json edge_list = nlohmann::ordered_json::array();
        for (const Edge& e : edges)
            edge_list.push_back({e.u.part, e.u.index, e.v.part, e.v.index});
        nlohmann::ordered_json doc = {{"parts", {n[0], n[1], n[2]}}, {"edges", std::move(edge_list)}};
        return doc.dump() + "\n";
    }
    std::ostringstream out;
    out << "tripartite " << n[0] << ' ' << n[1] << ' ' << n[2] << '\n';
    for (const Edge& e : edges)
        out << e.u.part << ' ' << e.u.index << ' ' << e.v.part << ' ' << e.v.index << '\n';
    return out.str();
}

namespace {

void add_parsed_edge(GraphBuilder& builder, int i, int a, int j, int b, const std::string& where)
{
    const auto& g = builder.view();
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw ParseError(where + ": part index out of range");
    if (i >= j)
        throw ParseError(where + ": edge parts must satisfy i < j");
    if (!g.contains_vertex({i, a}) || !g.contains_vertex({j, b}))
        throw ParseError(where + ": vertex index out of range");
    if (g.has_edge({i, a}, {j, b}))
        throw ParseError(where + ": duplicate edge");
    builder.add_edge({i, a}, {j, b});
}

PartSizes checked_parts(const std::array<long long, 3>& raw, const std::string& where)
{
    PartSizes sizes{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (raw[k] < 1 || raw[k] > 1'000'000)
            throw ParseError(where + ": part sizes must be positive integers");
        sizes[k] = static_cast<int>(raw[k]);
    }
    return sizes;
}

TripartiteGraph parse_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("json byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object())
        throw ParseError("json: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "parts" && key != "edges")
            throw ParseError("json: unknown field '" + key + "'");
    if (!doc.contains("parts") || !doc["parts"].is_array() || doc["parts"].size() != 3)
        throw ParseError("json: 'parts' must be an array of three integers");
    std::array<long long, 3> raw{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (!doc["parts"][k].is_number_integer())
            throw ParseError("json: parts[" + std::to_string(k) + "] is not an integer");
        raw[k] = doc["parts"][k].get<long long>();
    }
    GraphBuilder builder(checked_parts(raw, "json: parts"));
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("json: 'edges' must be an array");
    const auto& edges = doc["edges"];
    for (std::size_t k = 0; k < edges.size(); ++k) {
        std::string where = "json: edges[" + std::to_string(k) + "]";
        const auto& e = edges[k];
        if (!e.is_array() || e.size() != 4)
            throw ParseError(where + ": expected [i,a,j,b]");
        std::array<int, 4> v{};
        for (std::size_t c = 0; c < 4; ++c) {
            if (!e[c].is_number_integer())
                throw ParseError(where + ": non-integer entry");
            auto x = e[c].get<long long>();
            if (x < -1'000'000 || x > 1'000'000)
                throw ParseError(where + ": entry out of range");
            v[c] = static_cast<int>(x);
        }
        add_parsed_edge(builder, v[0], v[1], v[2], v[3], where);
    }
    return std::move(builder).build();
}

// Splits a line into whitespace-separated tokens, recording 1-based columns.
std::vector<std::pair<std::string_view, std::size_t>> tokens(std::string_view line)
{
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r'))
            ++k;
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r')
            ++k;
        if (k > start)
            out.emplace_back(line.substr(start, k - start), start + 1);
    }
    return out;
}

long long to_int(std::string_view tok, const std::string& where)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(where + ": expected an integer, got '" + std::string(tok) + "'");
    return v;
}

TripartiteGraph parse_edges(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (text.back() != '\n')
        throw ParseError("line " + std::to_string(lines.size()) + ": missing final newline (truncated input?)");
    std::size_t first = 0;
    while (first < lines.size() && tokens(lines[first]).empty())
        ++first;
    if (first == lines.size())
        throw ParseError("line 1: missing 'tripartite n1 n2 n3' header");
    auto at = [](std::size_t line, std::size_t col) {
        return "line " + std::to_string(line + 1) + ", column " + std::to_string(col);
    };
    auto head = tokens(lines[first]);
    if (head.size() != 4 || head[0].first != "tripartite")
        throw ParseError(at(first, 1) + ": expected 'tripartite n1 n2 n3'");
    std::array<long long, 3> raw{};
    for (std::size_t k = 0; k < 3; ++k)
        raw[k] = to_int(head[k + 1].first, at(first, head[k + 1].second));
    GraphBuilder builder(checked_parts(raw, at(first, head[1].second)));
    for (std::size_t ln = first + 1; ln < lines.size(); ++ln) {
        auto tok = tokens(lines[ln]);
        if (tok.empty())
            continue;
        if (tok.size() != 4)
            throw ParseError(at(ln, tok.front().second) + ": expected 'i a j b', got " +
                             std::to_string(tok.size()) + " fields");
        std::array<int, 4> v{};
        for (std::size_t c = 0; c < 4; ++c) {
            auto x = to_int(tok[c].first, at(ln, tok[c].second));
            if (x < -1'000'000 || x > 1'000'000)
                throw ParseError(at(ln, tok[c].second) + ": value out of range");
            v[c] = static_cast<int>(x);
        }
        add_parsed_edge(builder, v[0], v[1], v[2], v[3], at(ln, tok[0].second));
    }
    return std::move(builder).build();
}

} // namespace

TripartiteGraph deserialize(std::string_view text)
{
    std::size_t k = text.find_first_not_of(" \t\r\n");
    if (k == std::string_view::npos)
        throw ParseError("byte 0: empty input");
    if (text[k] == '{')
        return parse_json(text);
    return parse_edges(text);
}

TripartiteGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return deserialize(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_graph_file(const TripartiteGraph& g, const std::string& path, GraphFormat format)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << serialize(g, format);
}

} // namespace trisat
