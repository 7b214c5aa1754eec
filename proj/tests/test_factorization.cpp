#include <gtest/gtest.h>

#include <map>
#include <random>

#include "galois/errors.hpp"
#include "test_util.hpp"

namespace galois {
namespace {

using testing::brute_force_factor;
using testing::monic_polynomials;
using testing::P;
using testing::poly;
using testing::rationals;

std::map<std::string, std::size_t> as_multiset(const Factorization& fac) {
  std::map<std::string, std::size_t> out;
  for (const auto& f : fac.factors) out[to_string(f.polynomial)] += f.multiplicity;
  return out;
}

TEST(FiniteFieldFactorization, ExhaustiveAgainstDivisorEnumeration) {
  for (long p : {2, 3, 5}) {
    const Field fp = testing::prime_field(p);
    for (int d = 1; d <= 4; ++d) {
      for (const auto& f : monic_polynomials(fp, d)) {
        Factorization fac = factor_over_prime_field(f, 17);
        EXPECT_EQ(as_multiset(fac), brute_force_factor(f)) << "p=" << p << " f=" << to_string(f);
        EXPECT_EQ(fac.expand(), f);
      }
    }
  }
}

TEST(FiniteFieldFactorization, IndependentOfSeed) {
  const Field f3 = testing::prime_field(3);
  Polynomial f = P(f3, "(x^2 + 1)*(x^3 + 2*x + 1)*(x + 2)^3*(x^4 + x + 2)");
  const auto reference = as_multiset(factor(f, 1));
  for (std::uint64_t seed = 2; seed < 12; ++seed) EXPECT_EQ(as_multiset(factor(f, seed)), reference);
}

TEST(FiniteFieldFactorization, PthPowerSquarefreePart) {
  const Field f2 = testing::prime_field(2);
  Polynomial f = P(f2, "(x^2 + x + 1)^4*(x + 1)^2*x");
  auto m = as_multiset(factor(f));
  EXPECT_EQ(m["x^2 + x + 1"], 4u);
  EXPECT_EQ(m["x + 1"], 2u);
  EXPECT_EQ(m["x"], 1u);
}

TEST(FiniteFieldFactorization, ExtensionFieldAgainstRootSearch) {
  // Over F_4, a polynomial of degree <= 3 is irreducible iff it has no root.
  ExtensionTower f4 = testing::finite_field(2, 2);
  const Field& k = f4.top();
  std::vector<FieldElement> elements;
  for (const char* s : {"0", "1", "a", "a + 1"}) elements.push_back(testing::E(k, s));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    std::vector<FieldElement> c;
    const int d = 2 + static_cast<int>(rng() % 2);
    for (int j = 0; j < d; ++j) c.push_back(elements[rng() % 4]);
    c.push_back(k.one());
    Polynomial f(k, c);
    bool has_root = false;
    for (const auto& e : elements) has_root = has_root || evaluate(f, e).is_zero();
    EXPECT_EQ(is_irreducible(f), !has_root) << to_string(f);
    EXPECT_EQ(factor(f).expand(), f);
  }
}

// Kronecker's method for degree <= 5: a factor of degree <= 2 is fixed by
// its values at -1, 0, 1, which divide the values of f there.
bool kronecker_irreducible(const Polynomial& f) {
  const Field& q = f.field();
  const int n = f.degree();
  std::vector<std::vector<long>> candidates;
  for (long x : {-1L, 0L, 1L}) {
    const Rational v = evaluate(f, q.from_int(x)).base_value().rational();
    if (!v.is_integer()) throw std::logic_error("expected integer coefficients");
    const long m = std::labs(v.numerator().to_int64());
    if (m == 0) return n == 1;
    std::vector<long> divs;
    for (long d = 1; d <= m; ++d) {
      if (m % d == 0) {
        divs.push_back(d);
        divs.push_back(-d);
      }
    }
    candidates.push_back(divs);
  }
  for (long u : candidates[0]) {
    for (long v : candidates[1]) {
      for (long w : candidates[2]) {
        // g(-1) = u, g(0) = v, g(1) = w: g = v + (w - u)/2 x + ((u + w)/2 - v) x^2
        if ((w - u) % 2 != 0 || (u + w) % 2 != 0) continue;
        Polynomial g = poly(q, {v, (w - u) / 2, (u + w) / 2 - v});
        if (g.degree() < 1 || g.degree() > n / 2) continue;
        if (poly_rem(f, g).is_zero()) return false;
      }
    }
  }
  return true;
}

const std::vector<std::string>& known_irreducibles() {
  static const std::vector<std::string> list = {
      "x", "x - 1", "x + 2", "2*x + 1", "x^2 + 1", "x^2 - 2", "x^2 + x + 1", "x^2 - x - 1", "3*x^2 - 5",
      "x^3 - 2", "x^3 - x - 1", "x^3 - 3*x + 1", "x^4 + 1", "x^4 - 10*x^2 + 1", "x^4 + x^3 + x^2 + x + 1",
      "x^5 - x - 1"};
  return list;
}

TEST(RationalFactorization, KnownIrreduciblesPassKronecker) {
  for (const auto& s : known_irreducibles()) {
    EXPECT_TRUE(kronecker_irreducible(P(rationals(), s))) << s;
    EXPECT_TRUE(is_irreducible(P(rationals(), s))) << s;
  }
  EXPECT_FALSE(kronecker_irreducible(P(rationals(), "x^4 + 4")));
  EXPECT_FALSE(is_irreducible(P(rationals(), "x^4 + 4")));
}

TEST(RationalFactorization, RandomProductsRecovered) {
  const Field q = rationals();
  std::mt19937_64 rng(2024);
  const auto& list = known_irreducibles();
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::string, std::size_t> expected;
    Polynomial f = Polynomial::constant(q.from_rational(rat_normalize(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5))));
    if (rng() % 2) f *= q.from_int(-1);
    int degree = 0;
    for (int tries = 0; tries < 6; ++tries) {
      Polynomial g = P(q, list[rng() % list.size()]);
      if (degree + g.degree() > 8) continue;
      degree += g.degree();
      f *= g;
      ++expected[to_string(g.monic())];
    }
    Factorization fac = factor(f);
    EXPECT_EQ(as_multiset(fac), expected) << to_string(f);
    EXPECT_EQ(fac.expand(), f);
  }
}

TEST(RationalFactorization, SwinnertonDyerLikeProduct) {
  // x^4 - 10x^2 + 1 splits into quadratics modulo every prime.
  Polynomial f = P(rationals(), "(x^4 - 10*x^2 + 1)*(x^2 - 5)");
  auto m = as_multiset(factor(f));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m["x^4 - 10*x^2 + 1"], 1u);
}

TEST(RationalFactorization, DegreeBoundIsCapabilityError) {
  Polynomial f = P(rationals(), "x^70 - 3");
  EXPECT_THROW(factor(f), CapabilityError);
  FactorOptions generous;
  generous.max_rational_degree = 80;
  EXPECT_TRUE(is_irreducible(f, 1, generous));
}

TEST(RationalFactorization, ZeroPolynomialRejected) { EXPECT_THROW(factor(Polynomial(rationals())), DomainError); }

TEST(ExtensionFactorization, CubeRootOfTwo) {
  ExtensionTower L = testing::stem(rationals(), "x^3 - 2");
  Factorization fac = factor(P(L.top(), "x^3 - 2"));
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(to_string(fac.factors[0].polynomial), "x - a");
  EXPECT_EQ(to_string(fac.factors[1].polynomial), "x^2 + a*x + a^2");
  EXPECT_EQ(roots_in_field(P(L.top(), "x^3 - 2")).size(), 1u);
}

TEST(ExtensionFactorization, QuadraticSubfields) {
  ExtensionTower L = testing::stem(rationals(), "x^2 - 2");
  EXPECT_EQ(factor(P(L.top(), "x^4 + 1")).factors.size(), 2u);
  EXPECT_TRUE(is_irreducible(P(L.top(), "x^2 - 3")));
  EXPECT_EQ(factor(P(L.top(), "x^2 - 8")).factors.size(), 2u);
}

TEST(ExtensionFactorization, TowerSplitsPrimitiveMinimalPolynomial) {
  ExtensionTower L = testing::sqrt2_sqrt3();
  Polynomial f = P(L.top(), "x^4 - 10*x^2 + 1");
  auto roots = roots_in_field(f);
  ASSERT_EQ(roots.size(), 4u);
  for (const auto& r : roots) EXPECT_TRUE(evaluate(f, r).is_zero());
  EXPECT_EQ(factor(f).expand(), f);
}

TEST(ExtensionFactorization, RepeatedFactorsOverExtension) {
  ExtensionTower L = testing::stem(rationals(), "x^2 + 1");
  Polynomial f = P(L.top(), "(x - a)^3*(x^2 + 1)*(x^2 - 3)");
  Factorization fac = factor(f);
  EXPECT_EQ(fac.expand(), f);
  auto m = as_multiset(fac);
  EXPECT_EQ(m["x - a"], 4u);
  EXPECT_EQ(m["x + a"], 1u);
  EXPECT_EQ(m["x^2 - 3"], 1u);
}

TEST(SquarefreeDecomposition, Reconstructs) {
  const Field q = rationals();
  Polynomial f = P(q, "(x - 1)^3*(x^2 + 1)^2*(x + 5)");
  Polynomial acc = Polynomial::constant(q.one());
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    EXPECT_TRUE(is_squarefree(part));
    for (std::size_t i = 0; i < mult; ++i) acc *= part;
  }
  EXPECT_EQ(acc, f.monic());
}

}  // namespace
}  // namespace galois
