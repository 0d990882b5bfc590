#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace supmod {

/// Points a, a + step, ... up to b (inclusive within rounding) of an
/// `a:b:step` spec, each rounded to 1e-12.
std::vector<double> parse_grid(std::string_view spec);

/// Runs the command line (without the program name). Returns the exit code:
/// 0 success, 1 a verification failure, 2 a usage or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supmod
