#include "galois/extensions.hpp"

#include <algorithm>
#include <set>

#include "galois/errors.hpp"
#include "galois/format.hpp"
#include "span_builder.hpp"

namespace galois {

std::vector<Polynomial> ExtensionTower::moduli() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 1; i <= height(); ++i) out.push_back(modulus_polynomial(level(i)));
  return out;
}

std::string default_generator_name(std::size_t level) {
  static const std::string kLetters = "abcdefghijklmnopqrstuvwyz";
  if (level >= 1 && level <= kLetters.size()) return std::string(1, kLetters[level - 1]);
  return "t" + std::to_string(level);
}

ExtensionTower adjoin_root(const ExtensionTower& K, const Polynomial& m, std::string name, std::uint64_t seed) {
  if (!(m.field() == K.top())) throw DomainError("modulus coefficients must lie in the top of the tower");
  if (m.degree() < 2) throw DomainError("adjoined modulus must have degree at least 2");
  Polynomial monic = m.monic();
  auto fac = factor(monic, seed);
  if (fac.factors.size() != 1 || fac.factors[0].multiplicity != 1) {
    throw DomainError("modulus " + to_string(monic) + " is reducible; factor " + to_string(fac.factors[0].polynomial));
  }
  if (name.empty()) name = default_generator_name(K.height() + 1);
  if (name == "x") throw DomainError("generator name 'x' is reserved for the polynomial variable");
  for (const auto& existing : K.generator_names()) {
    if (existing == name) throw DomainError("generator name '" + name + "' is already used in the tower");
  }
  return ExtensionTower(K.top().adjoin_unchecked(std::move(name), monic.coefficients()));
}

std::size_t degree(const ExtensionTower& L, std::size_t down_to) {
  if (down_to > L.height()) throw DomainError("level " + std::to_string(down_to) + " is above the top of the tower");
  return L.top().dimension() / L.level(down_to).dimension();
}

Polynomial minimal_polynomial(const FieldElement& z, const Field& over) {
  const Field& L = z.field();
  if (!L.extends(over)) throw DomainError("minimal polynomial requested over a field that is not below the element");
  const std::size_t rows = L.dimension() / over.dimension();
  std::vector<std::vector<FieldElement>> columns{L.one().coordinates_over(over)};
  FieldElement power = L.one();
  for (std::size_t d = 1; d <= rows; ++d) {
    power *= z;
    columns.push_back(power.coordinates_over(over));
    Matrix<FieldElement> m(rows, d + 1, over.zero());
    for (std::size_t c = 0; c <= d; ++c) {
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    auto kernel = nullspace(m, over.zero());
    if (kernel.empty()) continue;
    // The first dependency has a one-dimensional kernel with nonzero top entry.
    std::vector<FieldElement> v = kernel.front();
    const FieldElement top = v[d];
    for (auto& c : v) c /= top;
    return {over, std::move(v)};
  }
  throw InternalError("no linear dependency among powers of a field element");
}

std::vector<FieldElement> generated_subfield_basis(const Field& field, const std::vector<FieldElement>& elements) {
  for (const auto& e : elements) {
    if (!(e.field() == field)) throw DomainError("subfield generator lies in a different field");
  }
  detail::SpanBuilder span(field);
  std::vector<FieldElement> basis{field.one()};
  span.add(field.one());
  // The K-span closed under multiplication by every generator is K[S] = K(S).
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& g : elements) {
      FieldElement y = basis[i] * g;
      if (span.add(y)) basis.push_back(std::move(y));
    }
  }
  return basis;
}

std::size_t generated_subfield_degree(const Field& field, const std::vector<FieldElement>& elements) {
  return generated_subfield_basis(field, elements).size();
}

bool in_span(const std::vector<FieldElement>& basis, const FieldElement& y) {
  detail::SpanBuilder span(y.field());
  for (const auto& b : basis) span.add(b);
  return span.contains(y);
}

// ---------------------------------------------------------------- SimpleForm

SimpleForm::SimpleForm(Field original, Field simple, FieldElement primitive, std::vector<std::int64_t> multipliers,
                       Matrix<Scalar> powers, Matrix<Scalar> powers_inverse)
    : original_(std::move(original)),
      simple_(std::move(simple)),
      primitive_(std::move(primitive)),
      multipliers_(std::move(multipliers)),
      powers_(std::move(powers)),
      powers_inverse_(std::move(powers_inverse)) {}

Polynomial SimpleForm::modulus() const {
  if (simple_.level() == 0) return Polynomial::linear(simple_.one());
  return modulus_polynomial(simple_);
}

FieldElement SimpleForm::forward(const FieldElement& y) const {
  FieldElement top = y.field() == original_ ? y : y.embed(original_);
  return simple_.element(multiply(powers_inverse_, top.coordinates()));
}

FieldElement SimpleForm::backward(const FieldElement& w) const {
  if (!(w.field() == simple_)) throw DomainError("element does not lie in the simple field");
  return original_.element(multiply(powers_, w.coordinates()));
}

std::vector<FieldElement> SimpleForm::generator_images() const {
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i <= original_.level(); ++i) out.push_back(forward(original_.generator(i)));
  return out;
}

namespace {

constexpr int kMultiplierBound = 20;

Matrix<Scalar> identity(std::size_t n, const BaseField& base) {
  Matrix<Scalar> m(n, n, base.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = base.one();
  return m;
}

std::shared_ptr<const SimpleForm> compute_simple_form(const Field& L) {
  const BaseField& base = L.base_field();
  const std::size_t n = L.dimension();
  if (L.level() == 0) {
    return std::make_shared<SimpleForm>(L, L, L.one(), std::vector<std::int64_t>{}, identity(1, base), identity(1, base));
  }
  if (L.level() == 1) {
    return std::make_shared<SimpleForm>(L, L, L.generator(), std::vector<std::int64_t>{}, identity(n, base),
                                        identity(n, base));
  }
  const std::size_t k = L.level();
  std::vector<FieldElement> gens;
  for (std::size_t i = 1; i <= k; ++i) gens.push_back(L.generator(i));
  int bound = kMultiplierBound;
  if (L.is_finite()) bound = std::min<int>(bound, std::max<int>(1, static_cast<int>((L.characteristic() - 1) / 2)));

  std::shared_ptr<const SimpleForm> result;
  std::set<std::vector<std::string>> seen;
  detail::for_each_small_vector(k - 1, bound, [&](const std::vector<std::int64_t>& c) {
    FieldElement z = gens[k - 1];
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (c[i] != 0) z += L.from_int(c[i]) * gens[i];
    }
    if (L.is_finite()) {
      std::vector<std::string> key;
      for (const auto& s : z.coordinates()) key.push_back(s.to_string());
      if (!seen.insert(key).second) return false;
    }
    Matrix<Scalar> powers(n, n, base.zero());
    FieldElement p = L.one();
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) powers(r, j) = p.coordinates()[r];
      p *= z;
    }
    auto inv = inverse(powers, base.zero());
    if (!inv) return false;
    // z^n = sum a_j z^j gives the modulus x^n - sum a_j x^j.
    std::vector<Scalar> a = multiply(*inv, p.coordinates());
    Field q(base);
    std::vector<FieldElement> mu;
    for (const auto& s : a) mu.push_back(q.from_scalar(-s));
    mu.push_back(q.one());
    Field simple = q.adjoin_unchecked("z", mu);
    result = std::make_shared<SimpleForm>(L, simple, z, std::vector<std::int64_t>(c.rbegin(), c.rend()),
                                          std::move(powers), std::move(*inv));
    return true;
  });
  if (!result) {
    throw CapabilityError("no primitive element t_k + sum c_i t_i with |c_i| <= " + std::to_string(bound));
  }
  // The forward map must send each generator to a root of its modulus.
  for (std::size_t i = 1; i <= k; ++i) {
    Polynomial m = modulus_polynomial(L.ancestor(i));
    FieldElement image = result->forward(L.generator(i));
    FieldElement acc = result->simple().zero();
    const auto& coeffs = m.coefficients();
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * image + result->forward(coeffs[j]);
    if (!acc.is_zero()) throw InternalError("collapsed tower does not satisfy the modulus of level " + std::to_string(i));
  }
  return result;
}

}  // namespace

std::shared_ptr<const SimpleForm> collapse_to_simple(const Field& L) {
  const auto& node = L.node();
  std::call_once(node.simple_once, [&] { node.simple = compute_simple_form(L); });
  return node.simple;
}

// ---------------------------------------------------------------- splitting

SplittingField splitting_field(const Polynomial& f, std::uint64_t seed, const FactorOptions& options) {
  if (f.degree() < 1) throw DomainError("splitting field of a constant polynomial");
  Field cur = f.field();
  std::vector<FieldElement> roots;
  std::vector<Factor> pending;  // nonlinear irreducible factors over cur

  auto absorb = [&](const Polynomial& g, std::size_t mult) {
    for (const auto& fc : factor(g, seed, options).factors) {
      if (fc.polynomial.degree() == 1) {
        for (std::size_t i = 0; i < mult * fc.multiplicity; ++i) roots.push_back(-fc.polynomial.coefficient(0));
      } else {
        pending.push_back({fc.polynomial, mult * fc.multiplicity});
      }
    }
  };
  absorb(f, 1);

  std::vector<SplitStep> transcript;
  while (!pending.empty()) {
    auto pick = std::min_element(pending.begin(), pending.end(), [](const Factor& a, const Factor& b) {
      return canonical_less(a.polynomial, b.polynomial);
    });
    const Polynomial chosen = pick->polynomial;
    const std::string name = default_generator_name(cur.level() + 1);
    Field next = cur.adjoin_unchecked(name, chosen.coefficients());
    transcript.push_back({next.level(), name, chosen});

    std::vector<Factor> old = std::move(pending);
    pending.clear();
    for (auto& r : roots) r = r.embed(next);
    const FieldElement t = next.generator();
    for (const auto& [g, mult] : old) {
      Polynomial h = g.embed(next);
      if (g == chosen) {
        for (std::size_t i = 0; i < mult; ++i) roots.push_back(t);
        h = poly_exact_div(h, Polynomial::linear(t));
      }
      absorb(h, mult);
    }
    cur = next;
  }
  for (auto& r : roots) r = r.embed(cur);
  std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) { return canonical_less(a, b); });

  Polynomial product = Polynomial::constant(f.leading().embed(cur));
  for (const auto& r : roots) product *= Polynomial::linear(r);
  if (!(product == f.embed(cur))) throw InternalError("splitting field roots do not multiply back to f");
  return {ExtensionTower(cur), std::move(roots), std::move(transcript)};
}

}  // namespace galois
