#pragma once
// Command-line front end. Exit codes: 0 success, 1 usage error, 2 domain error.

#include <iosfwd>
#include <string>
#include <vector>

namespace rfh::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);  // args excludes argv[0]

// 12 significant digits, "-0" folded to "0".
std::string format_number(double v);
// Multiples p/q of pi with q <= 12 print as "pi", "-pi/2", "3pi/4"; anything else as a number.
std::string format_angle(double v);

}  // namespace rfh::cli
