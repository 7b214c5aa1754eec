// Factorization over finite fields: squarefree decomposition, distinct-degree
// factorization and Cantor-Zassenhaus equal-degree splitting.

#include <algorithm>
#include <random>

#include "factor_internal.hpp"
#include "galois/errors.hpp"
#include "galois/factorization.hpp"

namespace galois {

namespace {

// Random polynomial of degree < n with uniformly random coordinates.
Polynomial random_polynomial(const Field& field, std::size_t n, std::mt19937_64& rng) {
  const std::uint64_t p = field.characteristic();
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<FieldElement> coeffs;
  coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> coords;
    coords.reserve(field.dimension());
    for (std::size_t j = 0; j < field.dimension(); ++j) coords.emplace_back(PrimeScalar(dist(rng), p));
    coeffs.push_back(field.element(std::move(coords)));
  }
  return {field, std::move(coeffs)};
}

// Splits a monic squarefree g whose irreducible factors all have degree d.
void equal_degree_split(const Polynomial& g, std::size_t d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  const auto n = static_cast<std::size_t>(g.degree());
  if (n == d) {
    out.push_back(g);
    return;
  }
  const Field& field = g.field();
  const std::uint64_t p = field.characteristic();
  const Integer q = field.order();
  while (true) {
    Polynomial a = random_polynomial(field, n, rng);
    if (a.degree() < 1) continue;
    Polynomial b(field);
    if (p == 2) {
      // Trace to F_2: a + a^2 + a^4 + ... + a^(2^(k d - 1)), q = 2^k.
      const std::size_t steps = field.dimension() * d;
      Polynomial term = a;
      b = a;
      for (std::size_t i = 1; i < steps; ++i) {
        term = poly_rem(term * term, g);
        b += term;
      }
    } else {
      Integer e = (pow(q, static_cast<unsigned long>(d)) - Integer(1)) / Integer(2);
      b = pow_mod(a, e, g) - Polynomial::constant(field.one());
    }
    if (b.is_zero()) continue;
    Polynomial u = poly_gcd(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree_split(u, d, rng, out);
      equal_degree_split(poly_exact_div(g, u), d, rng, out);
      return;
    }
  }
}

// Irreducible factors of a monic squarefree polynomial over a finite field.
std::vector<Polynomial> factor_squarefree_finite(const Polynomial& f, std::mt19937_64& rng) {
  std::vector<Polynomial> out;
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.push_back(f);
    return out;
  }
  const Field& field = f.field();
  const Integer q = field.order();
  const Polynomial x = Polynomial::x(field);
  Polynomial rest = f;
  Polynomial h = poly_rem(x, rest);
  for (std::size_t i = 1; rest.degree() >= static_cast<int>(2 * i); ++i) {
    h = pow_mod(h, q, rest);
    Polynomial d = poly_gcd(rest, h - x);
    if (d.degree() > 0) {
      equal_degree_split(d, i, rng, out);
      rest = poly_exact_div(rest, d);
      h = poly_rem(h, rest);
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

// a^(1/p) = a^(q/p) in a field of order q.
FieldElement pth_root(const FieldElement& a) {
  const Field& field = a.field();
  Integer e = field.order() / Integer(static_cast<long>(field.characteristic()));
  return a.pow(e);
}

void squarefree_finite(const Polynomial& f, std::size_t scale, std::vector<Factor>& out) {
  const Field& field = f.field();
  if (f.degree() <= 0) return;
  Polynomial c = poly_gcd(f, f.derivative());
  Polynomial w = poly_exact_div(f, c);
  for (std::size_t i = 1; w.degree() > 0; ++i) {
    Polynomial y = poly_gcd(w, c);
    Polynomial fac = poly_exact_div(w, y);
    if (fac.degree() > 0) out.push_back({fac, i * scale});
    w = y;
    c = poly_exact_div(c, y);
  }
  if (c.degree() > 0) {
    // Only exponents divisible by p remain.
    const auto p = static_cast<std::size_t>(field.characteristic());
    std::vector<FieldElement> root;
    for (std::size_t i = 0; i * p < c.coefficients().size(); ++i) root.push_back(pth_root(c.coefficient(i * p)));
    squarefree_finite(Polynomial(field, std::move(root)), scale * p, out);
  }
}

void squarefree_char0(const Polynomial& f, std::vector<Factor>& out) {
  // Yun's algorithm.
  Polynomial d = f.derivative();
  Polynomial a = poly_gcd(f, d);
  Polynomial b = poly_exact_div(f, a);
  Polynomial c = poly_exact_div(d, a);
  Polynomial e = c - b.derivative();
  for (std::size_t i = 1; b.degree() > 0; ++i) {
    Polynomial g = e.is_zero() ? b : poly_gcd(b, e);
    b = poly_exact_div(b, g);
    c = poly_exact_div(e, g);
    e = c - b.derivative();
    if (g.degree() > 0) out.push_back({g, i});
  }
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  Polynomial m = f.monic();
  std::vector<Factor> out;
  if (f.field().is_finite()) {
    squarefree_finite(m, 1, out);
  } else {
    squarefree_char0(m, out);
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

Factorization factor_over_prime_field(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  if (!f.field().is_finite()) throw DomainError("factor_over_prime_field needs a finite coefficient field");
  std::mt19937_64 rng(seed);
  std::vector<Factor> factors;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree_finite(part, rng)) factors.push_back({std::move(g), mult});
  }
  return detail::make_factorization(f.leading(), std::move(factors));
}

}  // namespace galois
