#include "galois/factorization.hpp"

#include <algorithm>

#include "factor_internal.hpp"
#include "galois/errors.hpp"
#include "galois/extensions.hpp"

namespace galois {

Polynomial Factorization::expand() const {
  Polynomial out = Polynomial::constant(unit);
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.multiplicity; ++i) out *= f.polynomial;
  }
  return out;
}

std::size_t Factorization::count() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

namespace detail {

Factorization make_factorization(FieldElement unit, std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.polynomial, b.polynomial); });
  std::vector<Factor> merged;
  for (auto& f : factors) {
    if (!merged.empty() && merged.back().polynomial == f.polynomial) {
      merged.back().multiplicity += f.multiplicity;
    } else {
      merged.push_back(std::move(f));
    }
  }
  return {std::move(unit), std::move(merged)};
}

namespace {

// Norm_{S/Q} of g(x) for g over a simple field S = Q[t]/(mu), by evaluating
// at deg(S) * deg(g) + 1 integer points and interpolating.
Polynomial norm_to_rationals(const Polynomial& g, const Polynomial& mu) {
  const Field& s = g.field();
  const Field& q = mu.field();
  const std::size_t n = s.dimension() * static_cast<std::size_t>(g.degree());
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= n; ++i) {
    FieldElement value = evaluate(g, s.from_int(static_cast<std::int64_t>(i)));
    Rational y;
    if (!value.is_zero()) {
      std::vector<FieldElement> coords;
      for (const auto& c : value.coordinates()) coords.push_back(q.from_scalar(c));
      y = resultant(mu, Polynomial(q, std::move(coords))).base_value().rational();
    }
    xs.emplace_back(static_cast<long>(i));
    ys.push_back(std::move(y));
  }
  // Newton divided differences, then expansion to monomial form.
  std::vector<Rational> coef = ys;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = n; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  }
  std::vector<Rational> poly{coef[n]};
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (x - xs[k]) + coef[k]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[k];
    }
    next[0] += coef[k];
    poly = std::move(next);
  }
  std::vector<Scalar> scalars(poly.begin(), poly.end());
  return {q, scalars};
}

}  // namespace

std::vector<Polynomial> trager_squarefree(const Polynomial& f, const FactorOptions& options) {
  if (f.degree() <= 1) return {f};
  const Field& s = f.field();
  const Polynomial mu = modulus_polynomial(s);
  const FieldElement z = s.generator();
  for (int attempt = 0; attempt < options.max_norm_shifts; ++attempt) {
    // Shifts 0, 1, -1, 2, -2, ...
    const std::int64_t shift = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
    const FieldElement sz = s.from_int(shift) * z;
    Polynomial shifted = f.compose(Polynomial::x(s) - Polynomial::constant(sz));
    Polynomial norm = norm_to_rationals(shifted, mu);
    if (!is_squarefree(norm)) continue;
    Factorization nf = factor_over_rationals(norm, options);
    if (nf.factors.size() == 1) return {f};
    std::vector<Polynomial> out;
    const Polynomial back = Polynomial::x(s) + Polynomial::constant(sz);
    for (const auto& piece : nf.factors) {
      Polynomial h = poly_gcd(shifted, piece.polynomial.embed(s));
      out.push_back(h.compose(back));
    }
    return out;
  }
  throw InternalError("no shift in " + std::to_string(options.max_norm_shifts) + " attempts gives a squarefree norm");
}

}  // namespace detail

Factorization factor_over_extension(const Polynomial& f, std::uint64_t seed, const FactorOptions& options) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  const Field& L = f.field();
  if (L.is_finite()) return factor_over_prime_field(f, seed);
  if (L.level() == 0) return factor_over_rationals(f, options);

  auto simple = collapse_to_simple(L);
  std::vector<FieldElement> mapped;
  for (const auto& c : f.coefficients()) mapped.push_back(simple->forward(c));
  Polynomial fs(simple->simple(), std::move(mapped));

  std::vector<Factor> factors;
  for (const auto& [part, mult] : squarefree_decomposition(fs)) {
    for (const auto& g : detail::trager_squarefree(part, options)) {
      std::vector<FieldElement> back;
      for (const auto& c : g.coefficients()) back.push_back(simple->backward(c));
      factors.push_back({Polynomial(L, std::move(back)), mult});
    }
  }
  return detail::make_factorization(f.leading(), std::move(factors));
}

Factorization factor(const Polynomial& f, std::uint64_t seed, const FactorOptions& options) {
  return factor_over_extension(f, seed, options);
}

bool is_irreducible(const Polynomial& f, std::uint64_t seed, const FactorOptions& options) {
  if (f.is_zero()) throw DomainError("irreducibility test of the zero polynomial");
  if (f.degree() == 0) return false;
  auto fac = factor(f, seed, options);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::vector<FieldElement> roots_in_field(const Polynomial& f, std::uint64_t seed, const FactorOptions& options) {
  std::vector<FieldElement> roots;
  for (const auto& fc : factor(f, seed, options).factors) {
    if (fc.polynomial.degree() == 1) roots.push_back(-fc.polynomial.coefficient(0));
  }
  std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) { return canonical_less(a, b); });
  return roots;
}

}  // namespace galois
