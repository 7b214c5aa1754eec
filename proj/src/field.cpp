#include "galois/field.hpp"

#include <algorithm>

#include "galois/errors.hpp"
#include "galois/linalg.hpp"

namespace galois {

namespace detail {

namespace {

bool all_zero(std::span<const Scalar> s) {
  return std::all_of(s.begin(), s.end(), [](const Scalar& x) { return x.is_zero(); });
}

}  // namespace

std::vector<Scalar> FieldNode::zero_coords() const { return std::vector<Scalar>(dim, base.zero()); }

std::vector<Scalar> FieldNode::mul(std::span<const Scalar> a, std::span<const Scalar> b) const {
  if (level == 0) return {a[0] * b[0]};
  const FieldNode& below = *parent;
  const std::size_t pd = below.dim;
  const std::size_t d = degree;
  auto chunk = [pd](std::span<const Scalar> s, std::size_t i) { return s.subspan(i * pd, pd); };

  std::vector<std::vector<Scalar>> prod(2 * d - 1, below.zero_coords());
  std::vector<bool> a_nonzero(d), b_nonzero(d);
  for (std::size_t i = 0; i < d; ++i) {
    a_nonzero[i] = !all_zero(chunk(a, i));
    b_nonzero[i] = !all_zero(chunk(b, i));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!a_nonzero[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!b_nonzero[j]) continue;
      if (pd == 1) {
        prod[i + j][0] += a[i] * b[j];
        continue;
      }
      auto t = below.mul(chunk(a, i), chunk(b, j));
      for (std::size_t c = 0; c < pd; ++c) prod[i + j][c] += t[c];
    }
  }
  // Reduce modulo the monic modulus, top coefficient first.
  for (std::size_t i = 2 * d - 1; i-- > d;) {
    if (all_zero(prod[i])) continue;
    const std::vector<Scalar> lead = prod[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (all_zero(modulus[j])) continue;
      if (pd == 1) {
        prod[i - d + j][0] -= lead[0] * modulus[j][0];
        continue;
      }
      auto t = below.mul(lead, modulus[j]);
      for (std::size_t c = 0; c < pd; ++c) prod[i - d + j][c] -= t[c];
    }
  }
  std::vector<Scalar> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < d; ++i) {
    for (auto& s : prod[i]) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scalar> FieldNode::inverse(std::span<const Scalar> a) const {
  if (all_zero(a)) throw DomainError("inverse of zero field element");
  if (level == 0) return {a[0].inverse()};
  // Solve (multiplication by a) x = 1 over the base field.
  const Scalar zero = base.zero();
  Matrix<Scalar> m(dim, dim, zero);
  std::vector<Scalar> unit = zero_coords();
  for (std::size_t j = 0; j < dim; ++j) {
    unit[j] = base.one();
    auto col = mul(a, unit);
    unit[j] = zero;
    for (std::size_t r = 0; r < dim; ++r) m(r, j) = col[r];
  }
  std::vector<Scalar> rhs = zero_coords();
  rhs[0] = base.one();
  auto x = solve(m, std::span<const Scalar>(rhs), zero);
  if (!x) throw InternalError("nonzero element without inverse; tower modulus is reducible");
  return std::move(*x);
}

}  // namespace detail

// ---------------------------------------------------------------- Field

Field::Field(BaseField base) : node_(std::make_shared<detail::FieldNode>(base)) {}

std::vector<std::string> Field::generator_names() const {
  std::vector<std::string> names(level());
  for (const detail::FieldNode* n = node_.get(); n->level > 0; n = n->parent.get()) names[n->level - 1] = n->name;
  return names;
}

Field Field::parent() const {
  if (level() == 0) throw DomainError("the base field has no parent level");
  return Field(node_->parent);
}

Field Field::ancestor(std::size_t lvl) const {
  if (lvl > level()) throw DomainError("level " + std::to_string(lvl) + " is above this field");
  auto n = node_;
  while (n->level > lvl) n = n->parent;
  return Field(n);
}

bool Field::extends(const Field& lower) const {
  if (lower.level() > level()) return false;
  return ancestor(lower.level()) == lower;
}

Integer Field::order() const {
  if (!is_finite()) throw DomainError("order of an infinite field");
  return pow(Integer(static_cast<long>(characteristic())), dimension());
}

FieldElement Field::zero() const { return {*this, node_->zero_coords()}; }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t n) const { return from_scalar(base_field().from_int(n)); }

FieldElement Field::from_scalar(const Scalar& s) const {
  auto coords = node_->zero_coords();
  coords[0] = s;
  return {*this, std::move(coords)};
}

FieldElement Field::from_rational(const Rational& r) const { return from_scalar(base_field().from_rational(r)); }

FieldElement Field::generator() const {
  if (level() == 0) throw DomainError("the base field has no generator");
  return basis_element(node_->parent->dim);
}

FieldElement Field::generator(std::size_t i) const {
  if (i == 0 || i > level()) throw DomainError("no generator at level " + std::to_string(i));
  return ancestor(i).generator().embed(*this);
}

FieldElement Field::basis_element(std::size_t index) const {
  if (index >= dimension()) throw DomainError("basis index out of range");
  auto coords = node_->zero_coords();
  coords[index] = base_field().one();
  return {*this, std::move(coords)};
}

FieldElement Field::element(std::vector<Scalar> coords) const { return {*this, std::move(coords)}; }

Field Field::adjoin_unchecked(std::string name, const std::vector<FieldElement>& modulus) const {
  if (modulus.size() < 3) throw DomainError("adjoined modulus must have degree at least 2");
  for (const auto& c : modulus) {
    if (!(c.field() == *this)) throw DomainError("modulus coefficients must lie in the field being extended");
  }
  if (!modulus.back().is_one()) throw DomainError("adjoined modulus must be monic");
  auto node = std::make_shared<detail::FieldNode>(base_field());
  node->parent = node_;
  node->level = level() + 1;
  node->degree = modulus.size() - 1;
  node->dim = node->degree * dimension();
  node->name = std::move(name);
  for (const auto& c : modulus) node->modulus.emplace_back(c.coordinates().begin(), c.coordinates().end());
  return Field(std::move(node));
}

bool operator==(const Field& a, const Field& b) {
  const detail::FieldNode* x = a.node_.get();
  const detail::FieldNode* y = b.node_.get();
  while (x != y) {
    if (x->level != y->level || !(x->base == y->base) || x->modulus != y->modulus) return false;
    x = x->parent.get();
    y = y->parent.get();
  }
  return true;
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(Field field, std::vector<Scalar> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_.dimension()) {
    throw DomainError("element has " + std::to_string(coords_.size()) + " coordinates; field dimension is " +
                      std::to_string(field_.dimension()));
  }
  for (const auto& c : coords_) {
    if (!field_.base_field().contains(c)) throw DomainError("coordinate " + c.to_string() + " is not in " + field_.base_field().name());
  }
}

std::vector<FieldElement> FieldElement::coordinates_over(const Field& lower) const {
  if (!field_.extends(lower)) throw DomainError("coordinates requested over a field that is not below this one");
  const std::size_t chunk = lower.dimension();
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < coords_.size(); i += chunk) {
    out.emplace_back(lower, std::vector<Scalar>(coords_.begin() + static_cast<std::ptrdiff_t>(i),
                                                coords_.begin() + static_cast<std::ptrdiff_t>(i + chunk)));
  }
  return out;
}

bool FieldElement::is_zero() const { return detail::all_zero(coords_); }

bool FieldElement::is_one() const { return coords_[0].is_one() && detail::all_zero(std::span(coords_).subspan(1)); }

bool FieldElement::in_base() const { return detail::all_zero(std::span(coords_).subspan(1)); }

const Scalar& FieldElement::base_value() const {
  if (!in_base()) throw DomainError("element does not lie in the base field");
  return coords_[0];
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw DomainError("field elements belong to different fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  coords_ = field_.node().mul(coords_, o.coords_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const { return {field_, field_.node().inverse(coords_)}; }

FieldElement FieldElement::pow(const Integer& exponent) const {
  if (exponent.sign() < 0) return inverse().pow(-exponent);
  FieldElement result = field_.one();
  for (std::size_t i = exponent.bit_length(); i-- > 0;) {
    result *= result;
    if (exponent.bit(i)) result *= *this;
  }
  return result;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.coords_ == b.coords_ && a.field_ == b.field_;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  for (std::size_t i = a.coords_.size(); i-- > 0;) {
    auto c = a.coords_[i] <=> b.coords_[i];
    if (c != 0) return c < 0;
  }
  return false;
}

FieldElement FieldElement::embed(const Field& target) const {
  if (!target.extends(field_)) throw DomainError("target field does not extend the element's field");
  std::vector<Scalar> coords = coords_;
  coords.resize(target.dimension(), field_.base_field().zero());
  return {target, std::move(coords)};
}

FieldElement FieldElement::descend(const Field& lower) const {
  if (!field_.extends(lower)) throw DomainError("descent target is not below the element's field");
  const std::size_t d = lower.dimension();
  if (!detail::all_zero(std::span(coords_).subspan(d))) throw DomainError("element does not lie in the requested subfield");
  return {lower, std::vector<Scalar>(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(d))};
}

FieldElement zero_like(const FieldElement& x) { return x.field().zero(); }
FieldElement one_like(const FieldElement& x) { return x.field().one(); }

std::size_t FieldElementHash::operator()(const FieldElement& x) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : x.coordinates()) {
    std::size_t v = 0;
    if (c.is_rational()) {
      v = static_cast<std::size_t>(mpz_get_si(c.rational().mpq().get_num_mpz_t())) * 31U +
          static_cast<std::size_t>(mpz_get_si(c.rational().mpq().get_den_mpz_t()));
    } else {
      v = c.residue().value();
    }
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
  }
  return h;
}

}  // namespace galois
