#pragma once

#include <string>
#include <string_view>

#include <mlucas/arith/dyadic.hpp>
#include <mlucas/arith/gaussian.hpp>
#include <mlucas/arith/poly.hpp>

namespace mlucas::arith
{

// Canonical text forms:
//   Dyadic          "p/2^k", or "p" when k == 0
//   GaussianDyadic  "a+bi" ("3+2i", "2+3/2^1i", "-5/2^2i", "i", "0")
//   Poly            ascending terms joined by " + " / " - ",
//                   e.g. "-4 + 3ix + 9x^2", "2 + 3/2^1i*x", "(1+i)x^2"
std::string to_string(const Dyadic &v);
std::string to_string(const GaussianDyadic &v);
std::string to_string(const Poly &p);

// Inverses of the scalar renderings above. Throw std::invalid_argument.
Dyadic parse_dyadic(std::string_view text);
GaussianDyadic parse_gaussian(std::string_view text);

} // namespace mlucas::arith
