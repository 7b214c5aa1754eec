#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact scalars: arbitrary-precision integers, reduced rationals and
 * residues modulo a prime.
 *
 * Integer and Rational are thin value wrappers over GMP. PrimeScalar carries
 * its modulus, so two residues can always be combined without a context
 * object; mixing moduli is a DomainError. Scalar is the closed sum of the two
 * base-field kinds and is the coordinate type of every field element.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace galois {

class Integer {
 public:
  Integer() = default;
  Integer(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Integer(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& value) : value_(value) {}

  /// Parses an optionally signed decimal literal.
  static Integer parse(std::string_view text);

  const mpz_class& mpz() const { return value_; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const { return value_.fits_slong_p(); }
  std::int64_t to_int64() const;
  std::string to_string() const { return value_.get_str(); }
  std::size_t bit_length() const;
  bool bit(std::size_t i) const { return mpz_tstbit(value_.get_mpz_t(), i) != 0; }

  Integer operator-() const { return Integer(mpz_class(-value_)); }
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  /// Quotient rounded toward zero. Throws DomainError on zero divisor.
  friend Integer operator/(const Integer& a, const Integer& b);
  /// Remainder with the sign of the dividend.
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
Integer pow(const Integer& base, unsigned long exponent);
/// Floor-style residue in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
std::ostream& operator<<(std::ostream& os, const Integer& v);

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value.mpz()) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& value);

  /// Accepts "n" or "n/d".
  static Rational parse(std::string_view text);

  Integer numerator() const { return Integer(value_.get_num()); }
  Integer denominator() const { return Integer(value_.get_den()); }
  const mpq_class& mpq() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational inverse() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// Reduced form of n/d. Throws DomainError when d is zero.
Rational rat_normalize(const Integer& n, const Integer& d);

/// Residue modulo a prime p < 2^63. The modulus is not re-checked on every
/// operation; PrimeScalar values are produced through BaseField, which
/// verifies primality once.
class PrimeScalar {
 public:
  PrimeScalar(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  PrimeScalar operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }
  PrimeScalar& operator+=(const PrimeScalar& o);
  PrimeScalar& operator-=(const PrimeScalar& o);
  PrimeScalar& operator*=(const PrimeScalar& o);

  friend PrimeScalar operator+(PrimeScalar a, const PrimeScalar& b) { return a += b; }
  friend PrimeScalar operator-(PrimeScalar a, const PrimeScalar& b) { return a -= b; }
  friend PrimeScalar operator*(PrimeScalar a, const PrimeScalar& b) { return a *= b; }
  friend bool operator==(const PrimeScalar& a, const PrimeScalar& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  void check_same(const PrimeScalar& o) const;

  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// Multiplicative inverse modulo p. Throws DomainError on zero.
PrimeScalar ff_inverse(const PrimeScalar& a);
PrimeScalar pow(PrimeScalar base, std::uint64_t exponent);

/// Deterministic for n < 2^64 (Miller-Rabin with the first twelve prime
/// bases); BPSW via GMP above that.
bool is_prime(const Integer& n);

/// Coordinate of a field element: a rational or a residue.
class Scalar {
 public:
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(PrimeScalar v) : value_(v) {}          // NOLINT(google-explicit-constructor)

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const;
  const PrimeScalar& residue() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar zero_like() const;
  Scalar one_like() const;
  /// Same domain as this, holding the integer n.
  Scalar from_int(std::int64_t n) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  /// Canonical total order within one domain: rationals by value, residues
  /// by representative in [0, p).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Rational, PrimeScalar> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& v);

/// The bottom of every tower: Q or F_p.
class BaseField {
 public:
  static BaseField rationals() { return BaseField(0); }
  /// Throws DomainError unless p is prime; CapabilityError for p >= 2^63.
  static BaseField prime(const Integer& p);
  /// "Q" or "F<p>".
  static BaseField parse(std::string_view spec);

  bool is_rationals() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t n) const;
  Scalar from_integer(const Integer& n) const;
  /// Throws DomainError if the denominator vanishes modulo p.
  Scalar from_rational(const Rational& r) const;
  bool contains(const Scalar& s) const;

  friend bool operator==(const BaseField& a, const BaseField& b) { return a.p_ == b.p_; }

 private:
  explicit BaseField(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

}  // namespace galois
