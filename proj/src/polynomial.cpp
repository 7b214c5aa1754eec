#include "galois/polynomial.hpp"

#include "galois/errors.hpp"

namespace galois {

Polynomial::Polynomial(Field field, std::vector<FieldElement> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw DomainError("polynomial coefficient lies in a different field");
  }
  trim();
}

Polynomial::Polynomial(Field field, const std::vector<Scalar>& coefficients) : field_(std::move(field)) {
  coeffs_.reserve(coefficients.size());
  for (const auto& s : coefficients) coeffs_.push_back(field_.from_scalar(s));
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return {c.field(), std::vector<FieldElement>{c}}; }

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t degree) {
  std::vector<FieldElement> coeffs(degree + 1, c.field().zero());
  coeffs[degree] = c;
  return {c.field(), std::move(coeffs)};
}

Polynomial Polynomial::x(const Field& field) { return monomial(field.one(), 1); }

Polynomial Polynomial::linear(const FieldElement& root) {
  return {root.field(), std::vector<FieldElement>{-root, root.field().one()}};
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_same(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw DomainError("polynomials have different coefficient fields");
}

FieldElement Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

const FieldElement& Polynomial::leading() const {
  if (is_zero()) throw DomainError("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw DomainError("the zero polynomial cannot be made monic");
  if (is_monic()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * field_.from_int(static_cast<std::int64_t>(i)));
  return {field_, std::move(d)};
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  check_same(inner);
  Polynomial result(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    result *= inner;
    result += constant(coeffs_[i]);
  }
  return result;
}

Polynomial Polynomial::embed(const Field& target) const {
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(a.embed(target));
  return {target, std::move(c)};
}

Polynomial Polynomial::descend(const Field& lower) const {
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(a.descend(lower));
  return {lower, std::move(c)};
}

bool Polynomial::has_coefficients_in(const Field& lower) const {
  if (!field_.extends(lower)) return false;
  const std::size_t d = lower.dimension();
  for (const auto& a : coeffs_) {
    auto coords = a.coordinates();
    for (std::size_t i = d; i < coords.size(); ++i) {
      if (!coords[i].is_zero()) return false;
    }
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_same(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldElement> prod(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (!(c.field() == field_)) throw DomainError("scalar lies in a different field than the polynomial");
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (canonical_less(a.coeffs_[i], b.coeffs_[i])) return true;
    if (canonical_less(b.coeffs_[i], a.coeffs_[i])) return false;
  }
  return false;
}

// ---------------------------------------------------------------- division

DivRem poly_divrem(const Polynomial& f, const Polynomial& g) {
  if (!(f.field() == g.field())) throw DomainError("polynomials have different coefficient fields");
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  const Field& field = f.field();
  if (f.degree() < g.degree()) return {Polynomial(field), f};

  std::vector<FieldElement> rem = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  const FieldElement lead_inv = g.leading().inverse();
  std::vector<FieldElement> quot(rem.size() - dg, field.zero());
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i].is_zero()) continue;
    FieldElement q = rem[i] * lead_inv;
    for (std::size_t j = 0; j < dg; ++j) {
      if (!gc[j].is_zero()) rem[i - dg + j] -= q * gc[j];
    }
    rem[i] = field.zero();
    quot[i - dg] = std::move(q);
  }
  rem.resize(dg, field.zero());
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial poly_rem(const Polynomial& f, const Polynomial& g) { return poly_divrem(f, g).remainder; }

Polynomial poly_exact_div(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = poly_divrem(f, g);
  if (!r.is_zero()) throw InternalError("expected exact polynomial division");
  return q;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd poly_xgcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  const Field& field = f.field();
  Polynomial r0 = f, r1 = g;
  Polynomial s0 = Polynomial::constant(field.one()), s1(field);
  Polynomial t0(field), t1 = Polynomial::constant(field.one());
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("squarefree test of the zero polynomial");
  if (f.degree() == 0) return true;
  Polynomial d = f.derivative();
  if (d.is_zero()) return false;
  return poly_gcd(f, d).degree() == 0;
}

FieldElement evaluate(const Polynomial& f, const FieldElement& a) {
  if (!(a.field() == f.field())) throw DomainError("evaluation point lies in a different field");
  FieldElement acc = f.field().zero();
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= a;
    acc += c[i];
  }
  return acc;
}

FieldElement resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
  if (!(f.field() == g.field())) throw DomainError("polynomials have different coefficient fields");
  // Res(f, g) = lc(f)^(deg g - deg r) Res(f, r) for r = g mod f, and
  // Res(f, g) = (-1)^(deg f deg g) Res(g, f).
  FieldElement scale = f.field().one();
  Polynomial a = f, b = g;
  while (true) {
    const auto da = static_cast<std::uint64_t>(a.degree());
    const auto db = static_cast<std::uint64_t>(b.degree());
    if (da == 0) return scale * a.leading().pow(db);
    if (db == 0) return scale * b.leading().pow(da);
    if (db < da) {
      if ((da * db) % 2 == 1) scale = -scale;
      std::swap(a, b);
      continue;
    }
    Polynomial r = poly_rem(b, a);
    if (r.is_zero()) return f.field().zero();
    scale *= a.leading().pow(db - static_cast<std::uint64_t>(r.degree()));
    b = std::move(r);
  }
}

Polynomial pow_mod(const Polynomial& base, const Integer& exponent, const Polynomial& modulus) {
  if (exponent.sign() < 0) throw DomainError("negative exponent in pow_mod");
  Polynomial result = poly_rem(Polynomial::constant(base.field().one()), modulus);
  Polynomial b = poly_rem(base, modulus);
  for (std::size_t i = exponent.bit_length(); i-- > 0;) {
    result = poly_rem(result * result, modulus);
    if (exponent.bit(i)) result = poly_rem(result * b, modulus);
  }
  return result;
}

Polynomial modulus_polynomial(const Field& field) {
  if (field.level() == 0) throw DomainError("the base field has no modulus");
  Field below = field.parent();
  std::vector<FieldElement> coeffs;
  for (const auto& c : field.node().modulus) coeffs.push_back(below.element(c));
  return {below, std::move(coeffs)};
}

}  // namespace galois
