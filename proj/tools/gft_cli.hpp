#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gft/series.hpp>

namespace gft::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalidInput = 2;

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 12 significant digits.
std::string format_number(double x);
double round12(double x);

// "1", "-i", "0.5+0.25i", "2e-3-1i", ...
Complex parse_complex(std::string_view text);

}  // namespace gft::cli
