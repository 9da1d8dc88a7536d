#pragma once

#include <string>
#include <string_view>

#include "locrep/exact/ratfunc.hpp"

namespace locrep::cli {

// Rational function in X over the integers: literals, X, + - * / ^ and
// parentheses. ^ binds tighter than unary minus, which binds tighter than
// * and /. Exponents are nonnegative integer literals. Throws ParseError
// with the byte offset of the problem.
RatFunc parse_ratfunc(std::string_view text);
Rat parse_rational(std::string_view text);

// Text that parse_ratfunc maps back to f.
std::string format_ratfunc(const RatFunc& f);

}  // namespace locrep::cli
