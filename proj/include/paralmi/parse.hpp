#pragma once

#include <string>

#include "paralmi/polynomial.hpp"
#include "paralmi/variables.hpp"

namespace paralmi {

// Polynomial text grammar: signed decimal integers and fractions a/b,
// variables x1..xn / y1..yt, operators + - * ^, parentheses. Implicit
// multiplication is not accepted.
MultiPoly parse_poly(const std::string& text, const VarSpace& space);

// Canonical printing: terms in decreasing canonical grevlex order,
// coefficients as reduced fractions; round-trips through parse_poly.
std::string print_poly(const MultiPoly& p);

// Exact rational from "a", "a/b" or a decimal literal like "-0.25".
Rational parse_rational(const std::string& text);

}  // namespace paralmi
