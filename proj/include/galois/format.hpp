#pragma once

// Human-readable rendering in the same grammar the parser accepts:
// "*" between coefficient and variable, "^" for powers, a/b rationals.

#include <string>

#include "galois/field.hpp"
#include "galois/polynomial.hpp"

namespace galois {

/// E.g. "a^2*b - 1/2*a + 3", using the tower's generator names.
std::string to_string(const FieldElement& x);
/// E.g. "x^3 + (a + 1)*x - 2".
std::string to_string(const Polynomial& f, const std::string& variable = "x");

}  // namespace galois
