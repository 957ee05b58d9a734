#pragma once

#include <string_view>

#include "mudef/dunkl/gauss_poly.hpp"

namespace mudef::dunkl {

/// Parses literals such as "(1 + 2x^3) * gauss", "(0.5-2i) x gauss" or "mu*x*gauss".
/// Grammar: sums and products of numbers (integers, decimals), "i", "mu",
/// "x^n", parenthesized sums and the factor "gauss"; "/" divides by a
/// nonzero number. Juxtaposition multiplies. Omitting "gauss" is allowed:
/// every element of the class carries the Gaussian. Throws std::invalid_argument.
GaussPoly parse_gauss_poly(std::string_view text);

BigRational parse_rational(std::string_view text);

}  // namespace mudef::dunkl
