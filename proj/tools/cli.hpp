#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jsobolev::cli {

/// Exit codes: 0 success, 1 numerical or I/O failure, 2 usage/validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "16,32,64", "16:1024:*2" (geometric), "1:10" / "2:20:2" (arithmetic), or
/// "16,32,...,1024" where the two leading terms fix a geometric or
/// arithmetic step. Result is strictly increasing and non-negative.
std::vector<int> parse_degrees(const std::string& text);

/// "1.4,2,3" or "lo:hi:step". Grid values are rounded to 12 significant
/// digits so that 1.4:3.0:0.1 yields 1.7 rather than 1.7000000000000002.
std::vector<double> parse_reals(const std::string& text);

/// Shortest decimal that round-trips.
std::string shortest(double value);

}  // namespace jsobolev::cli
