#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ratiovec::cli {

// Exit codes: 0 success / verdict-true, 1 verdict-false, 2 input error,
// 3 numerical failure.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Parses a scalar expression: numbers, fractions like 3/2, sqrt(...), pi,
/// parentheses, and the usual + - * / with unary minus.
double parse_number_expr(const std::string& text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ratiovec::cli
