#include "galois/galois_core.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "galois/errors.hpp"
#include "galois/linalg.hpp"
#include "span_builder.hpp"

namespace galois {

namespace {

constexpr int kSearchBound = 20;

// Search radius for integer multipliers: residues of F_p are covered by
// -(p-1)/2 .. (p-1)/2, so a larger radius only repeats candidates.
int search_bound(const Field& field) {
  if (!field.is_finite()) return kSearchBound;
  const auto half = static_cast<std::int64_t>((field.characteristic() - 1) / 2);
  return static_cast<int>(std::clamp<std::int64_t>(half, 1, kSearchBound));
}

std::string coordinate_key(const FieldElement& y) {
  std::string key;
  for (const auto& s : y.coordinates()) key += s.to_string() + ",";
  return key;
}

FieldElement lift_to(const FieldElement& y, const Field& top) {
  if (y.field() == top) return y;
  if (!top.extends(y.field())) throw DomainError("element does not lie in the field of the automorphism");
  return y.embed(top);
}

// w(r) where w is an element of the simple field read as a polynomial in z.
FieldElement substitute(const FieldElement& w, const FieldElement& r) {
  const Field& s = r.field();
  FieldElement acc = s.zero();
  auto coords = w.coordinates();
  for (std::size_t j = coords.size(); j-- > 0;) {
    acc *= r;
    if (!coords[j].is_zero()) acc += s.from_scalar(coords[j]);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- Automorphism

Automorphism::Automorphism(std::shared_ptr<const SimpleForm> form, FieldElement image, std::optional<std::size_t> index)
    : form_(std::move(form)), image_(std::move(image)), index_(index) {
  if (!(image_.field() == form_->simple())) throw DomainError("automorphism image must lie in the simple field");
}

bool Automorphism::is_identity() const { return image_ == form_->forward(form_->primitive()); }

std::vector<FieldElement> Automorphism::generator_images() const {
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i <= field().level(); ++i) out.push_back(apply(*this, field().generator(i)));
  return out;
}

bool operator==(const Automorphism& a, const Automorphism& b) {
  return a.field() == b.field() && a.image_ == b.image_;
}

FieldElement apply(const Automorphism& sigma, const FieldElement& y) {
  const SimpleForm& form = sigma.form();
  FieldElement top = lift_to(y, form.original());
  if (form.original().level() == 0) return top;
  return form.backward(substitute(form.forward(top), sigma.image()));
}

Automorphism compose(const Automorphism& sigma, const Automorphism& tau) {
  if (!(sigma.field() == tau.field())) throw DomainError("composition of automorphisms of different fields");
  if (sigma.field().level() == 0) return sigma;
  return {sigma.form_ptr(), substitute(tau.image(), sigma.image())};
}

std::string to_string(AutomorphismStrategy s) {
  return s == AutomorphismStrategy::RootEnumeration ? "roots" : "recursive";
}

AutomorphismStrategy parse_strategy(const std::string& text) {
  if (text == "roots") return AutomorphismStrategy::RootEnumeration;
  if (text == "recursive") return AutomorphismStrategy::RecursiveExtension;
  throw DomainError("unknown automorphism strategy '" + text + "' (expected roots or recursive)");
}

// ---------------------------------------------------------------- group

AutomorphismGroup::AutomorphismGroup(std::vector<Automorphism> elements) {
  if (elements.empty()) throw InternalError("automorphism group with no elements");
  std::stable_sort(elements.begin(), elements.end(), [](const Automorphism& a, const Automorphism& b) {
    if (a.is_identity() != b.is_identity()) return a.is_identity();
    return canonical_less(a.image(), b.image());
  });
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0 && elements[i] == elements[i - 1]) throw InternalError("automorphism listed twice");
    elements_.emplace_back(elements[i].form_ptr(), elements[i].image(), i);
  }
  if (!elements_.front().is_identity()) throw InternalError("automorphism set lacks the identity");

  const std::size_t m = elements_.size();
  table_.assign(m, std::vector<std::size_t>(m, 0));
  inverse_.assign(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto k = index_of(compose(elements_[i], elements_[j]));
      if (!k) throw InternalError("automorphism set is not closed under composition");
      table_[i][j] = *k;
      if (*k == 0) inverse_[i] = j;
    }
    if (inverse_[i] == m) throw InternalError("automorphism without an inverse in the set");
  }
}

std::optional<std::size_t> AutomorphismGroup::index_of(const Automorphism& sigma) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == sigma) return i;
  }
  return std::nullopt;
}

bool AutomorphismGroup::is_abelian() const {
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = i + 1; j < order(); ++j) {
      if (table_[i][j] != table_[j][i]) return false;
    }
  }
  return true;
}

namespace {

// phi(y) for y in a level of L, where phi sends t_1..t_{images.size()} to
// the given elements of L and fixes the base.
FieldElement map_element(const FieldElement& y, const std::vector<FieldElement>& images, const Field& L) {
  const Field& f = y.field();
  if (f.level() == 0) return y.embed(L);
  const FieldElement& t = images.at(f.level() - 1);
  FieldElement acc = L.zero();
  auto coeffs = y.coordinates_over(f.parent());
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * t + map_element(coeffs[j], images, L);
  return acc;
}

std::vector<Automorphism> by_root_enumeration(const Field& L, std::uint64_t seed, const FactorOptions& options) {
  auto form = collapse_to_simple(L);
  const Field& s = form->simple();
  std::vector<Automorphism> out;
  for (const auto& r : roots_in_field(form->modulus().embed(s), seed, options)) out.emplace_back(form, r);
  return out;
}

std::vector<Automorphism> by_recursive_extension(const Field& L, std::uint64_t seed, const FactorOptions& options) {
  auto form = collapse_to_simple(L);
  std::vector<std::vector<FieldElement>> partial{{}};
  for (std::size_t i = 1; i <= L.level(); ++i) {
    const Polynomial m = modulus_polynomial(L.ancestor(i));
    std::vector<std::vector<FieldElement>> next;
    for (const auto& images : partial) {
      std::vector<FieldElement> mapped;
      for (const auto& c : m.coefficients()) mapped.push_back(map_element(c, images, L));
      for (const auto& r : roots_in_field(Polynomial(L, std::move(mapped)), seed, options)) {
        next.push_back(images);
        next.back().push_back(r);
      }
    }
    partial = std::move(next);
  }
  std::vector<Automorphism> out;
  for (const auto& images : partial) {
    out.emplace_back(form, form->forward(map_element(form->primitive(), images, L)));
  }
  return out;
}

}  // namespace

AutomorphismGroup automorphism_group(const ExtensionTower& L, AutomorphismStrategy strategy, std::uint64_t seed,
                                     const FactorOptions& options) {
  const Field& top = L.top();
  if (top.level() == 0) {
    auto form = collapse_to_simple(top);
    return AutomorphismGroup({Automorphism(form, form->simple().one())});
  }
  if (strategy == AutomorphismStrategy::RootEnumeration) return AutomorphismGroup(by_root_enumeration(top, seed, options));
  return AutomorphismGroup(by_recursive_extension(top, seed, options));
}

// ---------------------------------------------------------------- fixed field

namespace {

// Primitive element of the span of `basis` (a subfield of dimension d):
// basis[d-1] + sum c_i basis[i] over small integer vectors c.
std::pair<FieldElement, Polynomial> subfield_generator(const Field& L, const std::vector<FieldElement>& basis) {
  const Field base = L.ancestor(0);
  const std::size_t d = basis.size();
  if (d == 1) return {L.one(), Polynomial::linear(base.one())};
  std::optional<std::pair<FieldElement, Polynomial>> found;
  std::set<std::string> seen;
  const int bound = search_bound(L);
  detail::for_each_small_vector(d - 1, bound, [&](const std::vector<std::int64_t>& c) {
    FieldElement y = basis[d - 1];
    for (std::size_t i = 0; i + 1 < d; ++i) {
      if (c[i] != 0) y += L.from_int(c[i]) * basis[i];
    }
    if (L.is_finite() && !seen.insert(coordinate_key(y)).second) return false;
    Polynomial mu = minimal_polynomial(y, base);
    if (static_cast<std::size_t>(mu.degree()) != d) return false;
    found.emplace(std::move(y), std::move(mu));
    return true;
  });
  if (!found) throw CapabilityError("no generator of the fixed field with multipliers up to " + std::to_string(bound));
  return *found;
}

}  // namespace

FixedFieldResult fixed_field(const AutomorphismGroup& G, std::vector<std::size_t> subgroup) {
  if (subgroup.empty()) throw DomainError("fixed field of an empty set of automorphisms");
  for (auto i : subgroup) {
    if (i >= G.order()) throw DomainError("automorphism index " + std::to_string(i) + " out of range");
  }
  subgroup.push_back(0);
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());

  const Field& L = G.field();
  const BaseField& base = L.base_field();
  const std::size_t n = L.dimension();
  // Stacked matrices of sigma - id in the flattened basis.
  Matrix<Scalar> stacked(subgroup.size() * n, n, base.zero());
  for (std::size_t k = 0; k < subgroup.size(); ++k) {
    const Automorphism& sigma = G[subgroup[k]];
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement image = apply(sigma, L.basis_element(j)) - L.basis_element(j);
      auto coords = image.coordinates();
      for (std::size_t r = 0; r < n; ++r) stacked(k * n + r, j) = coords[r];
    }
  }
  auto kernel = nullspace(stacked, base.zero());
  Matrix<Scalar> rows(kernel.size(), n, base.zero());
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = kernel[i][j];
  }
  auto echelon = row_reduce(rows);
  std::vector<FieldElement> basis;
  for (std::size_t i = 0; i < echelon.pivots.size(); ++i) {
    std::vector<Scalar> coords;
    for (std::size_t j = 0; j < n; ++j) coords.push_back(echelon.reduced(i, j));
    basis.push_back(L.element(std::move(coords)));
  }

  detail::SpanBuilder span(L);
  for (const auto& b : basis) span.add(b);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (!span.contains(basis[i] * basis[j])) throw InternalError("fixed set is not closed under multiplication");
    }
  }
  auto [generator, mu] = subfield_generator(L, basis);
  const std::size_t degree = basis.size();
  return {std::move(subgroup), std::move(basis), std::move(generator), std::move(mu), degree};
}

FixedFieldResult fixed_field(const AutomorphismGroup& G) {
  std::vector<std::size_t> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return fixed_field(G, std::move(all));
}

// ---------------------------------------------------------------- generic elements

FieldElement generic_element(const ExtensionTower& L, const AutomorphismGroup& G) {
  const Field& top = L.top();
  if (!(G.field() == top)) throw DomainError("automorphism group belongs to a different field");
  const int bound = search_bound(top);
  std::optional<FieldElement> found;
  std::set<std::string> seen;
  detail::for_each_small_vector(top.dimension(), bound, [&](const std::vector<std::int64_t>& c) {
    std::vector<Scalar> coords;
    for (auto v : c) coords.push_back(top.from_int(v).base_value());
    FieldElement y = top.element(std::move(coords));
    if (top.is_finite() && !seen.insert(coordinate_key(y)).second) return false;
    for (std::size_t i = 1; i < G.order(); ++i) {
      if (apply(G[i], y) == y) return false;
    }
    found = std::move(y);
    return true;
  });
  if (!found) {
    throw CapabilityError("no element with trivial stabilizer among integer combinations of max-norm <= " +
                          std::to_string(bound) + " (|G| = " + std::to_string(G.order()) +
                          ", [L:K] = " + std::to_string(top.dimension()) + ")");
  }
  return *found;
}

Polynomial orbit_polynomial(const FieldElement& z, const AutomorphismGroup& G) {
  const Field& L = G.field();
  const FieldElement y = lift_to(z, L);
  Polynomial f = Polynomial::constant(L.one());
  for (const auto& sigma : G.elements()) f *= Polynomial::linear(apply(sigma, y));
  for (const auto& c : f.coefficients()) {
    for (const auto& sigma : G.elements()) {
      if (!(apply(sigma, c) == c)) throw InternalError("orbit polynomial coefficient is not fixed by the group");
    }
  }
  return f;
}

// ---------------------------------------------------------------- report

GaloisReport galois_report(const ExtensionTower& L, const std::vector<FieldElement>& generators, std::uint64_t seed,
                           const FactorOptions& options) {
  return galois_report(L, automorphism_group(L, AutomorphismStrategy::RootEnumeration, seed, options), generators,
                       seed, options);
}

GaloisReport galois_report(const ExtensionTower& L, const AutomorphismGroup& G,
                           const std::vector<FieldElement>& generators, std::uint64_t seed,
                           const FactorOptions& options) {
  const Field& top = L.top();
  const Field base = L.base_level();
  if (!(G.field() == top)) throw DomainError("automorphism group belongs to a different field");
  const std::size_t n = top.dimension();

  std::vector<FieldElement> gens;
  for (const auto& g : generators) gens.push_back(lift_to(g, top));
  if (gens.empty()) {
    if (n != 1) throw DomainError("no generators given for an extension of degree " + std::to_string(n));
    gens.push_back(top.one());
  }
  const std::size_t generated = generated_subfield_degree(top, gens);
  if (generated != n) {
    throw DomainError("generators span a subfield of degree " + std::to_string(generated) + ", not " +
                      std::to_string(n));
  }

  GaloisReport report{.group_order = G.order(),
                      .extension_degree = n,
                      .generic = top.zero(),
                      .generic_minimal_polynomial = Polynomial(base)};
  report.condition_a = report.group_order == n;
  report.order_bound = report.group_order <= n;
  if (!report.order_bound) throw InternalError("more automorphisms than the degree of the extension");

  report.fixed_field_degree = fixed_field(G).degree;
  report.condition_c = report.fixed_field_degree == 1;
  if (report.condition_a != report.condition_c) {
    throw InternalError("conditions (a) and (c) disagree: |G| = " + std::to_string(report.group_order) +
                        ", fixed field degree " + std::to_string(report.fixed_field_degree));
  }

  report.generic = generic_element(L, G);
  report.generic_minimal_polynomial = minimal_polynomial(report.generic, base);

  if (report.condition_a) {
    std::vector<FieldElement> orbit;
    for (const auto& g : gens) {
      for (const auto& sigma : G.elements()) orbit.push_back(apply(sigma, g));
    }
    std::sort(orbit.begin(), orbit.end(), [](const FieldElement& a, const FieldElement& b) { return canonical_less(a, b); });
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());

    Polynomial f = Polynomial::constant(top.one());
    for (const auto& b : orbit) f *= Polynomial::linear(b);
    ConditionBCertificate cert{.orbit = orbit, .polynomial = Polynomial(base)};
    cert.coefficients_in_base = f.has_coefficients_in(base);
    if (cert.coefficients_in_base) {
      cert.polynomial = f.descend(base);
      cert.squarefree = is_squarefree(cert.polynomial);
      auto over_l = factor(cert.polynomial.embed(top), seed, options);
      std::vector<FieldElement> roots;
      cert.splits = true;
      for (const auto& fc : over_l.factors) {
        if (fc.polynomial.degree() != 1) cert.splits = false;
        else roots.push_back(-fc.polynomial.coefficient(0));
      }
      cert.roots_generate = generated_subfield_degree(top, roots) == n;
    }
    if (!cert.valid()) throw InternalError("certificate for condition (b) does not verify");
    report.condition_b = std::move(cert);
  } else {
    report.condition_b_note = "not certified: (b) would force (a), but |G| = " + std::to_string(report.group_order) + " < [L:K] = " +
                              std::to_string(n);
  }
  report.verdict = report.condition_a;
  return report;
}

// ---------------------------------------------------------------- intermediate fields

IntermediateCheck intermediate_fixed_check(const AutomorphismGroup& G, const std::vector<FieldElement>& m_generators) {
  const Field& L = G.field();
  if (G.order() != L.dimension()) {
    throw DomainError("intermediate field check needs a Galois extension; |G| = " + std::to_string(G.order()) +
                      ", [L:K] = " + std::to_string(L.dimension()));
  }
  std::vector<FieldElement> gens;
  for (const auto& g : m_generators) gens.push_back(lift_to(g, L));

  IntermediateCheck out;
  for (std::size_t i = 0; i < G.order(); ++i) {
    bool fixes = std::all_of(gens.begin(), gens.end(), [&](const FieldElement& g) { return apply(G[i], g) == g; });
    if (fixes) out.subgroup.push_back(i);
  }
  const auto fixed = fixed_field(G, out.subgroup);
  const auto m_basis = generated_subfield_basis(L, gens);
  out.subfield_degree = m_basis.size();
  out.fixed_degree = fixed.degree;
  out.holds = out.subfield_degree == out.fixed_degree &&
              std::all_of(gens.begin(), gens.end(), [&](const FieldElement& g) { return in_span(fixed.basis, g); }) &&
              std::all_of(fixed.basis.begin(), fixed.basis.end(),
                          [&](const FieldElement& b) { return in_span(m_basis, b); });
  return out;
}

IntermediateCheck intermediate_fixed_check(const ExtensionTower& L, const std::vector<FieldElement>& m_generators,
                                           std::uint64_t seed) {
  return intermediate_fixed_check(automorphism_group(L, AutomorphismStrategy::RootEnumeration, seed), m_generators);
}

// ---------------------------------------------------------------- finite-field census

namespace {

// First monic irreducible of degree n over F_p in the order of its
// coefficient vector read as a base-p number, low coefficient first.
Polynomial first_irreducible(const Field& fp, std::size_t n) {
  const std::uint64_t p = fp.characteristic();
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    std::vector<FieldElement> coeffs;
    for (auto d : digits) coeffs.push_back(fp.from_int(static_cast<std::int64_t>(d)));
    coeffs.push_back(fp.one());
    Polynomial f(fp, std::move(coeffs));
    if (!digits.empty() && digits[0] != 0 && is_irreducible(f)) return f;
    std::size_t pos = 0;
    while (pos < n && digits[pos] == p - 1) digits[pos++] = 0;
    if (pos == n) throw InternalError("no irreducible polynomial of degree " + std::to_string(n));
    ++digits[pos];
  }
}

}  // namespace

CensusReport subfield_element_census(std::uint64_t p, std::size_t n, std::uint64_t budget) {
  if (n < 2) throw DomainError("census needs n >= 2");
  if (!is_prime(Integer(static_cast<long>(p)))) throw DomainError(std::to_string(p) + " is not prime");
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (order > budget / p) throw CapabilityError("p^n exceeds the census budget of " + std::to_string(budget));
    order *= p;
  }
  const Field fp(BaseField::prime(Integer(static_cast<long>(p))));
  CensusReport report{.p = p, .n = n, .order = order, .modulus = first_irreducible(fp, n)};
  const Field F = fp.adjoin_unchecked("a", report.modulus.coefficients());

  std::vector<std::size_t> divisors;
  for (std::size_t m = 1; m <= n; ++m) {
    if (n % m == 0) divisors.push_back(m);
  }
  std::vector<std::vector<FieldElement>> members(n + 1);
  std::vector<Scalar> digits(n, fp.zero().base_value());
  for (std::uint64_t index = 0; index < order; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = 0; i < n; ++i) {
      digits[i] = fp.from_int(static_cast<std::int64_t>(rest % p)).base_value();
      rest /= p;
    }
    const FieldElement x = F.element(digits);
    FieldElement frob = x;
    bool proper = false;
    for (std::size_t k = 1; k <= n; ++k) {
      frob = frob.pow(p);
      if (n % k != 0 || !(frob == x)) continue;
      members[k].push_back(x);
      proper = proper || k < n;
    }
    if (proper) ++report.proper_union;
  }

  std::uint64_t power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    report.bound += power;
    power *= p;
  }
  for (auto m : divisors) {
    SubfieldCount entry{.m = m, .size = members[m].size()};
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < m; ++i) expected *= p;
    if (entry.size != expected) {
      throw InternalError("x^(p^" + std::to_string(m) + ") = x has " + std::to_string(entry.size) + " solutions");
    }
    if (m < n) {
      std::unordered_set<FieldElement, FieldElementHash> set(members[m].begin(), members[m].end());
      entry.closed = true;
      for (const auto& a : members[m]) {
        for (const auto& b : members[m]) {
          if (!set.contains(a + b) || !set.contains(a * b)) entry.closed = false;
        }
      }
      if (!entry.closed) throw InternalError("solutions of x^(p^" + std::to_string(m) + ") = x are not a subfield");
    } else {
      entry.closed = true;
    }
    report.subfields.push_back(entry);
  }
  if (!(report.proper_union <= report.bound && report.bound < order)) {
    throw InternalError("proper subfield union exceeds 1 + p + ... + p^(n-1)");
  }
  return report;
}

// ---------------------------------------------------------------- union witness

FieldElement outside_union_witness(const ExtensionTower& L, const std::vector<std::vector<FieldElement>>& subspaces) {
  const Field& top = L.top();
  if (top.is_finite()) throw DomainError("outside-union witness needs an infinite base field");
  std::vector<detail::SpanBuilder> spans;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    detail::SpanBuilder span(top);
    for (const auto& v : subspaces[i]) span.add(lift_to(v, top));
    if (span.dimension() == top.dimension()) {
      throw DomainError("subspace " + std::to_string(i) + " is all of L, not a proper subspace");
    }
    spans.push_back(std::move(span));
  }
  std::optional<FieldElement> found;
  detail::for_each_small_vector(top.dimension(), kSearchBound, [&](const std::vector<std::int64_t>& c) {
    std::vector<Scalar> coords;
    for (auto v : c) coords.push_back(top.from_int(v).base_value());
    FieldElement y = top.element(std::move(coords));
    for (const auto& span : spans) {
      if (span.contains(y)) return false;
    }
    found = std::move(y);
    return true;
  });
  if (!found) throw CapabilityError("no element outside the union within max-norm " + std::to_string(kSearchBound));
  return *found;
}

}  // namespace galois
