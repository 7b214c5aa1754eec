#pragma once

// Text input for polynomials and field elements.
//
//   expr   := term (("+" | "-") term)*
//   term   := unary (("*" | "/") unary)*
//   unary  := ("-" | "+") unary | power
//   power  := atom ("^" integer)?
//   atom   := integer | identifier | "(" expr ")"
//
// Identifiers are the variable x (polynomials only) and the generator names
// of the field. Division is only by nonzero constants, so "3/4" is a
// rational literal and "(a + 1)/2" is allowed. Whitespace is ignored.

#include <cstddef>
#include <string>
#include <string_view>

#include "galois/errors.hpp"
#include "galois/field.hpp"
#include "galois/polynomial.hpp"

namespace galois {

/// A DomainError carrying the 0-based character offset of the problem.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : DomainError(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Polynomial parse_polynomial(std::string_view text, const Field& field);
FieldElement parse_element(std::string_view text, const Field& field);

}  // namespace galois
