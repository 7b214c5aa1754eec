#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over any Field of a tower.
 *
 * Coefficients are stored in ascending order of degree; the zero polynomial
 * is the empty sequence and the top coefficient of any other polynomial is
 * nonzero. Every operation requires both operands to live over the same
 * Field and throws DomainError otherwise.
 */

#include <utility>
#include <vector>

#include "galois/field.hpp"

namespace galois {

class Polynomial {
 public:
  /// The zero polynomial over `field`.
  explicit Polynomial(Field field) : field_(std::move(field)) {}
  /// Coefficients in ascending order; trailing zeros are trimmed.
  Polynomial(Field field, std::vector<FieldElement> coefficients);
  /// Convenience for base-field coefficients.
  Polynomial(Field field, const std::vector<Scalar>& coefficients);

  static Polynomial constant(const FieldElement& c);
  static Polynomial monomial(const FieldElement& c, std::size_t degree);
  /// The polynomial X.
  static Polynomial x(const Field& field);
  /// X - r.
  static Polynomial linear(const FieldElement& root);

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  FieldElement coefficient(std::size_t i) const;
  /// Throws DomainError on the zero polynomial.
  const FieldElement& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  /// Substitutes `inner` for X.
  Polynomial compose(const Polynomial& inner) const;
  /// Maps every coefficient into an extension field.
  Polynomial embed(const Field& target) const;
  /// Moves every coefficient down to `lower`; DomainError if some does not lie there.
  Polynomial descend(const Field& lower) const;
  /// True when every coefficient lies in `lower`.
  bool has_coefficients_in(const Field& lower) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const FieldElement& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical order: degree first, then coefficients from the top down.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b);

 private:
  void check_same(const Polynomial& o) const;
  void trim();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = q g + r with deg r < deg g. DomainError when g is zero.
DivRem poly_divrem(const Polynomial& f, const Polynomial& g);
Polynomial poly_rem(const Polynomial& f, const Polynomial& g);
/// Exact quotient; InternalError when the division leaves a remainder.
Polynomial poly_exact_div(const Polynomial& f, const Polynomial& g);

/// Monic gcd by Euclid's algorithm. DomainError when both inputs are zero.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial s;    // s f + t g = gcd
  Polynomial t;
};
ExtendedGcd poly_xgcd(const Polynomial& f, const Polynomial& g);

/// gcd(f, f') is constant. In characteristic p a nonconstant f with f' = 0
/// is reported as not squarefree. DomainError on the zero polynomial.
bool is_squarefree(const Polynomial& f);

/// Horner evaluation. DomainError when `a` is not in the coefficient field.
FieldElement evaluate(const Polynomial& f, const FieldElement& a);

/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f, with
/// multiplicity. Computed by the Euclidean recurrence. DomainError on zero input.
FieldElement resultant(const Polynomial& f, const Polynomial& g);

/// base^e mod m.
Polynomial pow_mod(const Polynomial& base, const Integer& exponent, const Polynomial& modulus);

/// The modulus of the field's top level, as a polynomial over its parent.
Polynomial modulus_polynomial(const Field& field);

}  // namespace galois
