#pragma once

#include <string>
#include <string_view>

#include "psos/ratpoly.hpp"

namespace psos {

/// Parses either a JSON array of coefficient strings in ascending degree
/// (["1", "0", "1"]) or a human form such as "4/4225*x^2 + 1/4225*x + 4/4225".
/// Throws ParseError with the offending position.
RatPoly parse_poly(std::string_view text);

/// Human form, highest degree first: "1/2*x + 1/3", "x^2 + 3", "0".
std::string format_poly(const RatPoly& f);

}  // namespace psos
