#include "galois/exact_arith.hpp"

#include <array>
#include <ostream>

#include "galois/errors.hpp"

namespace galois {

// ---------------------------------------------------------------- Integer

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw DomainError("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw CapabilityError("integer " + to_string() + " exceeds 64 bits");
  return value_.get_si();
}

std::size_t Integer::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Integer& Integer::operator+=(const Integer& o) {
  value_ += o.value_;
  return *this;
}
Integer& Integer::operator-=(const Integer& o) {
  value_ -= o.value_;
  return *this;
}
Integer& Integer::operator*=(const Integer& o) {
  value_ *= o.value_;
  return *this;
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Integer(q);
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Integer(r);
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(g);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer pow(const Integer& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Integer(r);
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m.is_zero()) throw DomainError("integer division by zero");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t());
  return Integer(r);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return rat_normalize(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("rational division by zero");
  return Rational(mpq_class(1) / value_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational rat_normalize(const Integer& n, const Integer& d) {
  if (d.is_zero()) throw DomainError("zero denominator");
  mpq_class q(n.mpz(), d.mpz());
  q.canonicalize();
  return Rational(q);
}

// ---------------------------------------------------------------- PrimeScalar

void PrimeScalar::check_same(const PrimeScalar& o) const {
  if (modulus_ != o.modulus_) {
    throw DomainError("residues modulo " + std::to_string(modulus_) + " and " +
                      std::to_string(o.modulus_) + " cannot be combined");
  }
}

PrimeScalar& PrimeScalar::operator+=(const PrimeScalar& o) {
  check_same(o);
  value_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(value_) + o.value_) % modulus_);
  return *this;
}

PrimeScalar& PrimeScalar::operator-=(const PrimeScalar& o) {
  check_same(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : modulus_ - (o.value_ - value_);
  return *this;
}

PrimeScalar& PrimeScalar::operator*=(const PrimeScalar& o) {
  check_same(o);
  value_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(value_) * o.value_) % modulus_);
  return *this;
}

PrimeScalar ff_inverse(const PrimeScalar& a) {
  if (a.is_zero()) throw DomainError("inverse of zero modulo " + std::to_string(a.modulus()));
  // Extended Euclid on (a, p) with signed 128-bit bookkeeping.
  __int128 r0 = a.modulus(), r1 = a.value();
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw DomainError("residue is not invertible; modulus is not prime");
  __int128 m = a.modulus();
  t0 %= m;
  if (t0 < 0) t0 += m;
  return {static_cast<std::uint64_t>(t0), a.modulus()};
}

PrimeScalar pow(PrimeScalar base, std::uint64_t exponent) {
  PrimeScalar result(1, base.modulus());
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

// ---------------------------------------------------------------- primality

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

bool miller_rabin_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n.sign() < 0) throw DomainError("primality test of a negative integer");
  if (n.mpz().fits_ulong_p()) return miller_rabin_u64(n.mpz().get_ui());
  return mpz_probab_prime_p(n.mpz().get_mpz_t(), 30) != 0;
}

// ---------------------------------------------------------------- Scalar

const Rational& Scalar::rational() const {
  if (!is_rational()) throw DomainError("expected a rational scalar");
  return std::get<Rational>(value_);
}

const PrimeScalar& Scalar::residue() const {
  if (is_rational()) throw DomainError("expected a residue scalar");
  return std::get<PrimeScalar>(value_);
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == Rational(1);
  return residue().value() == 1 % residue().modulus();
}

Scalar Scalar::zero_like() const { return from_int(0); }
Scalar Scalar::one_like() const { return from_int(1); }

Scalar Scalar::from_int(std::int64_t n) const {
  if (is_rational()) return Rational(static_cast<long>(n));
  std::uint64_t p = residue().modulus();
  auto r = static_cast<std::int64_t>(n % static_cast<__int128>(p));
  if (r < 0) r += static_cast<std::int64_t>(p);
  return PrimeScalar(static_cast<std::uint64_t>(r), p);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

namespace {

[[noreturn]] void mixed_domains() { throw DomainError("cannot combine a rational with a residue"); }

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() != o.is_rational()) mixed_domains();
  if (is_rational()) {
    std::get<Rational>(value_) += o.rational();
  } else {
    std::get<PrimeScalar>(value_) += o.residue();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rational() != o.is_rational()) mixed_domains();
  if (is_rational()) {
    std::get<Rational>(value_) -= o.rational();
  } else {
    std::get<PrimeScalar>(value_) -= o.residue();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() != o.is_rational()) mixed_domains();
  if (is_rational()) {
    std::get<Rational>(value_) *= o.rational();
  } else {
    std::get<PrimeScalar>(value_) *= o.residue();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_rational()) return rational().inverse();
  return ff_inverse(residue());
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) mixed_domains();
  if (a.is_rational()) return a.rational() <=> b.rational();
  return a.residue().value() <=> b.residue().value();
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().to_string();
  return std::to_string(residue().value());
}

std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.to_string(); }

// ---------------------------------------------------------------- BaseField

BaseField BaseField::prime(const Integer& p) {
  if (p.sign() <= 0 || !is_prime(p)) throw DomainError("modulus " + p.to_string() + " is not prime");
  if (p.bit_length() > 63) throw CapabilityError("prime modulus above 2^63 is not supported");
  return BaseField(static_cast<std::uint64_t>(p.to_int64()));
}

BaseField BaseField::parse(std::string_view spec) {
  if (spec == "Q") return rationals();
  if (spec.size() >= 2 && spec[0] == 'F') {
    Integer p;
    try {
      p = Integer::parse(spec.substr(1));
    } catch (const DomainError&) {
      throw DomainError("malformed base field '" + std::string(spec) + "'; expected Q or F<p>");
    }
    return prime(p);
  }
  throw DomainError("malformed base field '" + std::string(spec) + "'; expected Q or F<p>");
}

std::string BaseField::name() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

Scalar BaseField::from_int(std::int64_t n) const {
  if (is_rationals()) return Rational(static_cast<long>(n));
  auto r = static_cast<std::int64_t>(n % static_cast<__int128>(p_));
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return PrimeScalar(static_cast<std::uint64_t>(r), p_);
}

Scalar BaseField::from_integer(const Integer& n) const {
  if (is_rationals()) return Rational(n);
  Integer r = mod_floor(n, Integer(static_cast<long>(p_)));
  return PrimeScalar(static_cast<std::uint64_t>(r.to_int64()), p_);
}

Scalar BaseField::from_rational(const Rational& r) const {
  if (is_rationals()) return r;
  Scalar den = from_integer(r.denominator());
  if (den.is_zero()) {
    throw DomainError("coefficient " + r.to_string() + " is not in " + name() +
                      " (denominator divisible by the characteristic)");
  }
  return from_integer(r.numerator()) / den;
}

bool BaseField::contains(const Scalar& s) const {
  if (is_rationals()) return s.is_rational();
  return !s.is_rational() && s.residue().modulus() == p_;
}

}  // namespace galois
