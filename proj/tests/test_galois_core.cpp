#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <set>

#include "galois/errors.hpp"
#include "galois/galois_core.hpp"
#include "test_util.hpp"

namespace galois {
namespace {

using testing::all_elements;
using testing::E;
using testing::P;
using testing::rationals;

std::set<std::string> image_set(const AutomorphismGroup& G, const FieldElement& y) {
  std::set<std::string> out;
  for (const auto& sigma : G.elements()) out.insert(to_string(apply(sigma, y)));
  return out;
}

void expect_group_axioms(const AutomorphismGroup& G) {
  const std::size_t m = G.order();
  EXPECT_TRUE(G[0].is_identity());
  for (std::size_t i = 1; i < m; ++i) EXPECT_FALSE(G[i].is_identity());
  for (std::size_t i = 0; i < m; ++i) {
    EXPECT_EQ(G.table()[0][i], i);
    EXPECT_EQ(G.table()[i][0], i);
    EXPECT_EQ(G.table()[i][G.inverse_index(i)], 0u);
    EXPECT_EQ(G.table()[G.inverse_index(i)][i], 0u);
    EXPECT_TRUE(compose(G[i], G[G.inverse_index(i)]).is_identity());
  }
  if (m <= 8) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          EXPECT_EQ(G.table()[G.table()[i][j]][k], G.table()[i][G.table()[j][k]]);
        }
      }
    }
  }
}

std::vector<ExtensionTower> sample_towers() {
  const Field q = rationals();
  return {testing::stem(q, "x^2 - 2"),
          testing::stem(q, "x^3 - 2"),
          testing::sqrt2_sqrt3(),
          splitting_field(P(q, "x^3 - 2")).tower,
          testing::stem(q, "x^4 - 2"),
          testing::finite_field(2, 4),
          testing::finite_field(3, 2),
          splitting_field(P(testing::prime_field(2), "x^5 + x + 1")).tower};
}

// ---------------------------------------------------------------- groups

TEST(AutomorphismGroup, F4MatchesExhaustiveEnumeration) {
  ExtensionTower f4 = testing::finite_field(2, 2);
  const Field& k = f4.top();
  AutomorphismGroup G = automorphism_group(f4);
  ASSERT_EQ(G.order(), 2u);
  // Candidate images of a: elements satisfying its modulus.
  const Polynomial m = modulus_polynomial(k).embed(k);
  std::set<std::string> candidates;
  for (const auto& y : all_elements(k)) {
    if (evaluate(m, y).is_zero()) candidates.insert(to_string(y));
  }
  EXPECT_EQ(image_set(G, k.generator()), candidates);
  EXPECT_EQ(apply(G[1], k.generator()), k.generator() * k.generator());
}

TEST(AutomorphismGroup, SplittingFieldOfCubeRootOfTwoIsNonAbelian) {
  auto L = splitting_field(P(rationals(), "x^3 - 2")).tower;
  AutomorphismGroup G = automorphism_group(L);
  EXPECT_EQ(G.order(), 6u);
  EXPECT_FALSE(G.is_abelian());
  bool found = false;
  for (std::size_t i = 0; i < 6 && !found; ++i) {
    for (std::size_t j = 0; j < 6 && !found; ++j) {
      found = !(compose(G[i], G[j]) == compose(G[j], G[i]));
    }
  }
  EXPECT_TRUE(found);
}

// Oracle: embed L = Q(a, b) into C with a = 2^(1/3) and b = a*w, w a
// primitive cube root of unity, and read each automorphism as a
// permutation of the three complex roots of x^3 - 2.
TEST(AutomorphismGroup, SplittingFieldOfCubeRootOfTwoActsAsS3OnComplexRoots) {
  auto s = splitting_field(P(rationals(), "x^3 - 2"));
  using C = std::complex<double>;
  const C a(std::cbrt(2.0), 0.0);
  const C w = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
  const C b = a * w;
  ASSERT_LT(std::abs(b * b + a * b + a * a), 1e-12);
  auto numeric = [&](const FieldElement& y) {
    C v = 0;
    auto coords = y.coordinates();
    for (std::size_t idx = 0; idx < coords.size(); ++idx) {
      const double c = coords[idx].rational().to_double();
      v += c * std::pow(a, static_cast<double>(idx % 3)) * std::pow(b, static_cast<double>(idx / 3));
    }
    return v;
  };
  std::vector<C> roots;
  for (const auto& r : s.roots) roots.push_back(numeric(r));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_LT(std::abs(roots[i] * roots[i] * roots[i] - 2.0), 1e-9);
    for (std::size_t j = 0; j < i; ++j) EXPECT_GT(std::abs(roots[i] - roots[j]), 0.5);
  }
  auto nearest = [&](C v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(v - roots[i]) < std::abs(v - roots[best])) best = i;
    }
    EXPECT_LT(std::abs(v - roots[best]), 1e-9);
    return best;
  };
  AutomorphismGroup G = automorphism_group(s.tower);
  std::vector<std::array<std::size_t, 3>> perms;
  for (const auto& sigma : G.elements()) {
    std::array<std::size_t, 3> perm{};
    for (std::size_t i = 0; i < 3; ++i) perm[i] = nearest(numeric(apply(sigma, s.roots[i])));
    perms.push_back(perm);
  }
  std::set<std::array<std::size_t, 3>> distinct(perms.begin(), perms.end());
  EXPECT_EQ(distinct.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> composed{};
      for (std::size_t r = 0; r < 3; ++r) composed[r] = perms[i][perms[j][r]];
      EXPECT_EQ(perms[G.table()[i][j]], composed);
    }
  }
}

TEST(AutomorphismGroup, NonGaloisStemHasOnlyIdentity) {
  ExtensionTower L = testing::stem(rationals(), "x^3 - 2");
  EXPECT_EQ(automorphism_group(L).order(), 1u);
  EXPECT_EQ(automorphism_group(testing::stem(rationals(), "x^4 - 2")).order(), 2u);
}

TEST(AutomorphismGroup, GroupAxiomsAndStrategyAgreement) {
  for (const auto& L : sample_towers()) {
    AutomorphismGroup roots = automorphism_group(L, AutomorphismStrategy::RootEnumeration, 3);
    AutomorphismGroup recursive = automorphism_group(L, AutomorphismStrategy::RecursiveExtension, 5);
    expect_group_axioms(roots);
    ASSERT_EQ(roots.order(), recursive.order());
    EXPECT_LE(roots.order(), L.degree());
    for (std::size_t i = 0; i < roots.order(); ++i) {
      // Same map: agree on every flattened basis element.
      for (std::size_t j = 0; j < L.top().dimension(); ++j) {
        EXPECT_EQ(apply(roots[i], L.top().basis_element(j)), apply(recursive[i], L.top().basis_element(j)));
      }
    }
  }
}

TEST(AutomorphismGroup, DegenerateExtension) {
  ExtensionTower K(BaseField::rationals());
  AutomorphismGroup G = automorphism_group(K);
  EXPECT_EQ(G.order(), 1u);
  EXPECT_TRUE(G[0].is_identity());
  EXPECT_EQ(apply(G[0], K.top().from_int(5)), K.top().from_int(5));
}

// ---------------------------------------------------------------- apply / compose

TEST(Apply, IdentityConstantsAndFrobenius) {
  ExtensionTower f4 = testing::finite_field(2, 2);
  AutomorphismGroup G = automorphism_group(f4);
  const Field& k = f4.top();
  for (const auto& y : all_elements(k)) {
    EXPECT_EQ(apply(G[0], y), y);
    EXPECT_EQ(apply(G[1], y), y * y);
  }
  EXPECT_EQ(apply(G[1], k.one()), k.one());
  EXPECT_TRUE(compose(G[1], G[1]).is_identity());

  ExtensionTower L = testing::sqrt2_sqrt3();
  AutomorphismGroup H = automorphism_group(L);
  for (const auto& sigma : H.elements()) {
    EXPECT_EQ(apply(sigma, L.top().from_rational(Rational::parse("-7/3"))), L.top().from_rational(Rational::parse("-7/3")));
    EXPECT_EQ(apply(sigma, L.level(1).generator()), apply(sigma, L.top().generator(1)));
  }
}

TEST(Apply, IsARingMap) {
  std::mt19937_64 rng(77);
  for (const auto& L : sample_towers()) {
    AutomorphismGroup G = automorphism_group(L);
    for (const auto& sigma : G.elements()) {
      for (int i = 0; i < 6; ++i) {
        FieldElement x = testing::random_element(L.top(), rng), y = testing::random_element(L.top(), rng);
        EXPECT_EQ(apply(sigma, x + y), apply(sigma, x) + apply(sigma, y));
        EXPECT_EQ(apply(sigma, x * y), apply(sigma, x) * apply(sigma, y));
      }
    }
  }
}

TEST(Apply, TowerMismatchRejected) {
  AutomorphismGroup G = automorphism_group(testing::sqrt2_sqrt3());
  AutomorphismGroup H = automorphism_group(testing::stem(rationals(), "x^2 + 1"));
  EXPECT_THROW(apply(G[1], testing::stem(rationals(), "x^2 + 1").top().generator()), DomainError);
  EXPECT_THROW(compose(G[1], H[1]), DomainError);
}

// ---------------------------------------------------------------- finite fields

class FiniteFieldGroups : public ::testing::TestWithParam<std::pair<long, std::size_t>> {};

TEST_P(FiniteFieldGroups, OrderNGeneratedByFrobeniusFixingFp) {
  const auto [p, n] = GetParam();
  ExtensionTower L = testing::finite_field(p, n);
  const Field& k = L.top();
  AutomorphismGroup G = automorphism_group(L);
  const auto elements = all_elements(k);
  // Brute force: images of a are the elements satisfying its modulus.
  std::size_t candidates = 0;
  const Polynomial m = modulus_polynomial(k).embed(k);
  for (const auto& y : elements) candidates += evaluate(m, y).is_zero() ? 1 : 0;
  EXPECT_EQ(G.order(), n);
  EXPECT_EQ(candidates, n);
  // Frobenius is in G and has order n.
  std::optional<std::size_t> frob;
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (apply(G[i], k.generator()) == k.generator().pow(static_cast<std::uint64_t>(p))) frob = i;
  }
  ASSERT_TRUE(frob.has_value());
  std::size_t power = *frob, order = 1;
  while (power != 0) {
    power = G.table()[*frob][power];
    ++order;
  }
  EXPECT_EQ(order, n);
  // Fix(G) = F_p by exact nullspace and by enumeration.
  EXPECT_EQ(fixed_field(G).degree, 1u);
  std::size_t fixed = 0;
  for (const auto& y : elements) {
    bool all = true;
    for (const auto& sigma : G.elements()) all = all && apply(sigma, y) == y;
    fixed += all ? 1 : 0;
  }
  EXPECT_EQ(fixed, static_cast<std::size_t>(p));
  GaloisReport r = galois_report(L, {k.generator()});
  EXPECT_TRUE(r.verdict);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FiniteFieldGroups,
                         ::testing::Values(std::make_pair(2L, 2UL), std::make_pair(2L, 3UL), std::make_pair(2L, 4UL),
                                           std::make_pair(3L, 2UL), std::make_pair(5L, 2UL)));

// ---------------------------------------------------------------- fixed fields

TEST(FixedField, FullGroupOfF16IsF2) {
  ExtensionTower L = testing::finite_field(2, 4);
  AutomorphismGroup G = automorphism_group(L);
  FixedFieldResult r = fixed_field(G);
  EXPECT_EQ(r.degree, 1u);
  ASSERT_EQ(r.basis.size(), 1u);
  EXPECT_EQ(r.basis[0], L.top().one());
}

TEST(FixedField, SubgroupInBiquadraticField) {
  ExtensionTower L = testing::sqrt2_sqrt3();
  AutomorphismGroup G = automorphism_group(L);
  const Field& k = L.top();
  std::optional<std::size_t> sigma;
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (apply(G[i], E(k, "a")) == E(k, "a") && apply(G[i], E(k, "b")) == E(k, "-b")) sigma = i;
  }
  ASSERT_TRUE(sigma.has_value());
  FixedFieldResult r = fixed_field(G, {*sigma});
  EXPECT_EQ(r.degree, 2u);
  EXPECT_EQ(r.subgroup, (std::vector<std::size_t>{0, *sigma}));
  EXPECT_EQ(r.generator_minimal_polynomial, P(L.base_level(), "x^2 - 2"));
  EXPECT_TRUE(in_span(r.basis, E(k, "a")));
  EXPECT_EQ(fixed_field(G, {0}).degree, 4u);
  EXPECT_THROW(fixed_field(G, {}), DomainError);
  EXPECT_THROW(fixed_field(G, {9}), DomainError);
}

// ---------------------------------------------------------------- generic elements

TEST(GenericElement, Examples) {
  ExtensionTower f4 = testing::finite_field(2, 2);
  EXPECT_EQ(generic_element(f4, automorphism_group(f4)), f4.top().generator());
  ExtensionTower L = testing::sqrt2_sqrt3();
  EXPECT_EQ(generic_element(L, automorphism_group(L)), E(L.top(), "a + b"));
  ExtensionTower c = testing::stem(rationals(), "x^3 - 2");
  EXPECT_TRUE(generic_element(c, automorphism_group(c)).is_zero());
}

TEST(GenericElement, TrivialStabilizerAndOrbitPolynomialIsMinimal) {
  for (const auto& L : sample_towers()) {
    AutomorphismGroup G = automorphism_group(L);
    FieldElement z = generic_element(L, G);
    for (std::size_t i = 1; i < G.order(); ++i) EXPECT_NE(apply(G[i], z), z);
    Polynomial orbit = orbit_polynomial(z, G);
    for (const auto& c : orbit.coefficients()) {
      for (const auto& sigma : G.elements()) EXPECT_EQ(apply(sigma, c), c);
    }
    if (G.order() == L.degree()) {
      EXPECT_EQ(orbit, minimal_polynomial(z, L.base_level()).embed(L.top()));
      EXPECT_TRUE(is_squarefree(orbit));
    }
  }
}

TEST(OrbitPolynomial, Examples) {
  ExtensionTower L = testing::sqrt2_sqrt3();
  AutomorphismGroup G = automorphism_group(L);
  const Field& k = L.top();
  EXPECT_EQ(orbit_polynomial(E(k, "a + b"), G), P(k, "x^4 - 10*x^2 + 1"));
  Polynomial sq = orbit_polynomial(E(k, "a"), G);
  EXPECT_EQ(sq, P(k, "(x^2 - 2)^2"));
  EXPECT_FALSE(is_squarefree(sq));
  EXPECT_EQ(orbit_polynomial(E(k, "5"), G), P(k, "(x - 5)^4"));
}

// ---------------------------------------------------------------- report

TEST(GaloisReport, QuadraticField) {
  ExtensionTower L = testing::stem(rationals(), "x^2 - 2");
  GaloisReport r = galois_report(L, {L.top().generator()});
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.condition_a);
  EXPECT_TRUE(r.condition_c);
  EXPECT_EQ(r.group_order, 2u);
  EXPECT_EQ(r.fixed_field_degree, 1u);
  ASSERT_TRUE(r.condition_b.has_value());
  EXPECT_EQ(r.condition_b->polynomial, P(L.base_level(), "x^2 - 2"));
  EXPECT_TRUE(r.condition_b->valid());
}

TEST(GaloisReport, CubeRootOfTwoIsNotGalois) {
  ExtensionTower L = testing::stem(rationals(), "x^3 - 2");
  GaloisReport r = galois_report(L, {L.top().generator()});
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(r.condition_a);
  EXPECT_FALSE(r.condition_c);
  EXPECT_EQ(r.group_order, 1u);
  EXPECT_EQ(r.extension_degree, 3u);
  EXPECT_EQ(r.fixed_field_degree, 3u);
  EXPECT_FALSE(r.condition_b.has_value());
  EXPECT_FALSE(r.condition_b_note.empty());
  EXPECT_TRUE(r.order_bound);
}

TEST(GaloisReport, BiquadraticCertificate) {
  ExtensionTower L = testing::sqrt2_sqrt3();
  GaloisReport r = galois_report(L, {E(L.top(), "a"), E(L.top(), "b")});
  ASSERT_TRUE(r.condition_b.has_value());
  EXPECT_EQ(r.condition_b->orbit.size(), 4u);
  EXPECT_EQ(r.condition_b->polynomial, P(L.base_level(), "x^4 - 5*x^2 + 6"));
  EXPECT_EQ(r.generic_minimal_polynomial, P(L.base_level(), "x^4 - 10*x^2 + 1"));
}

TEST(GaloisReport, DegenerateExtensionUsesGeneratorOne) {
  ExtensionTower K(BaseField::rationals());
  GaloisReport r = galois_report(K, {});
  EXPECT_TRUE(r.verdict);
  ASSERT_TRUE(r.condition_b.has_value());
  EXPECT_EQ(r.condition_b->polynomial, P(K.top(), "x - 1"));
}

TEST(GaloisReport, GeneratorsMustGenerate) {
  ExtensionTower L = testing::sqrt2_sqrt3();
  EXPECT_THROW(galois_report(L, {E(L.top(), "a")}), DomainError);
  EXPECT_THROW(galois_report(L, {}), DomainError);
}

TEST(GaloisReport, ConditionsAgreeOnSamples) {
  for (const auto& L : sample_towers()) {
    std::vector<FieldElement> gens;
    for (std::size_t i = 1; i <= L.height(); ++i) gens.push_back(L.top().generator(i));
    GaloisReport r = galois_report(L, gens);
    EXPECT_EQ(r.condition_a, r.condition_c);
    EXPECT_LE(r.group_order, r.extension_degree);
    EXPECT_EQ(r.verdict, r.condition_b.has_value());
  }
}

// ---------------------------------------------------------------- intermediate fields

TEST(IntermediateFixedCheck, CubeRootOfTwoInsideSplittingField) {
  auto L = splitting_field(P(rationals(), "x^3 - 2")).tower;
  const Field& k = L.top();
  IntermediateCheck c = intermediate_fixed_check(L, {E(k, "a")});
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.subgroup.size(), 2u);
  EXPECT_EQ(c.subfield_degree, 3u);
  IntermediateCheck whole = intermediate_fixed_check(L, {});
  EXPECT_TRUE(whole.holds);
  EXPECT_EQ(whole.subgroup.size(), 6u);
  IntermediateCheck top = intermediate_fixed_check(L, {E(k, "a"), E(k, "b")});
  EXPECT_TRUE(top.holds);
  EXPECT_EQ(top.subgroup.size(), 1u);
  EXPECT_TRUE(intermediate_fixed_check(L, {E(k, "b*a^2/2")}).holds);
}

TEST(IntermediateFixedCheck, RequiresGaloisExtension) {
  ExtensionTower L = testing::stem(rationals(), "x^3 - 2");
  EXPECT_THROW(intermediate_fixed_check(L, {}), DomainError);
}

// ---------------------------------------------------------------- census

TEST(SubfieldCensus, Examples) {
  CensusReport r = subfield_element_census(2, 4);
  EXPECT_EQ(r.proper_union, 4u);
  EXPECT_EQ(r.bound, 15u);
  EXPECT_EQ(r.order, 16u);
  r = subfield_element_census(2, 2);
  EXPECT_EQ(r.proper_union, 2u);
  EXPECT_EQ(r.bound, 3u);
  r = subfield_element_census(3, 2);
  EXPECT_EQ(r.proper_union, 3u);
  EXPECT_EQ(r.bound, 4u);
}

TEST(SubfieldCensus, Errors) {
  EXPECT_THROW(subfield_element_census(2, 13), CapabilityError);
  EXPECT_THROW(subfield_element_census(2, 1), DomainError);
  EXPECT_THROW(subfield_element_census(4, 2), DomainError);
  EXPECT_NO_THROW(subfield_element_census(2, 13, 8192));
}

TEST(SubfieldCensus, UnionCountMatchesDivisorLattice) {
  // |union of proper subfields| by inclusion-exclusion over maximal
  // divisors, compared with the enumerated count.
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 6}, {2, 12}, {3, 4}, {5, 3}, {7, 2}}) {
    CensusReport r = subfield_element_census(p, n);
    std::uint64_t expected = 0;
    for (std::size_t m = 1; m < n; ++m) {
      if (n % m != 0) continue;
      // Elements whose smallest field is exactly F_{p^m}.
      std::vector<std::uint64_t> exact(m + 1, 0);
      for (std::size_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        std::uint64_t size = 1;
        for (std::size_t i = 0; i < d; ++i) size *= p;
        exact[d] = size;
        for (std::size_t e = 1; e < d; ++e) {
          if (d % e == 0) exact[d] -= exact[e];
        }
      }
      expected += exact[m];
    }
    EXPECT_EQ(r.proper_union, expected) << p << "^" << n;
    EXPECT_LE(r.proper_union, r.bound);
    EXPECT_LT(r.bound, r.order);
  }
}

// ---------------------------------------------------------------- union witness

TEST(OutsideUnionWitness, QuadraticSubfieldsOfBiquadratic) {
  ExtensionTower L = testing::sqrt2_sqrt3();
  const Field& k = L.top();
  std::vector<std::vector<FieldElement>> subspaces = {
      {k.one(), E(k, "a")}, {k.one(), E(k, "b")}, {k.one(), E(k, "a*b")}};
  FieldElement z = outside_union_witness(L, subspaces);
  for (const auto& s : subspaces) EXPECT_FALSE(in_span(s, z));
  EXPECT_EQ(outside_union_witness(L, {{k.zero()}}), k.one());
}

TEST(OutsideUnionWitness, FixedSubspacesReproduceGenericElement) {
  for (const auto& L : sample_towers()) {
    if (L.top().is_finite()) continue;
    AutomorphismGroup G = automorphism_group(L);
    std::vector<std::vector<FieldElement>> subspaces;
    for (std::size_t i = 1; i < G.order(); ++i) subspaces.push_back(fixed_field(G, {i}).basis);
    EXPECT_EQ(outside_union_witness(L, subspaces), generic_element(L, G));
  }
}

TEST(OutsideUnionWitness, Preconditions) {
  ExtensionTower L = testing::sqrt2_sqrt3();
  const Field& k = L.top();
  EXPECT_THROW(outside_union_witness(L, {{k.one(), E(k, "a"), E(k, "b"), E(k, "a*b")}}), DomainError);
  EXPECT_THROW(outside_union_witness(testing::finite_field(2, 2), {}), DomainError);
}

}  // namespace
}  // namespace galois
