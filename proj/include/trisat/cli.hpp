#pragma once

#include <iosfwd>

namespace trisat {

/// The trisat command line: construct, verify, sat, formula, table.
/// Exit codes: 0 success (saturated for verify), 1 not saturated, 2 usage or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace trisat
