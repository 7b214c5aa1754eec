#pragma once

/**
 * @file factorization.hpp
 * @brief Complete factorization of univariate polynomials over F_q, Q and
 * number-field towers.
 *
 * Finite fields: squarefree decomposition, distinct-degree splitting, then
 * seeded Cantor-Zassenhaus equal-degree splitting. Rationals: content
 * extraction, rational-root stripping, then modular factorization with
 * Hensel lifting and exhaustive recombination. Towers over Q: Trager's norm
 * method on the collapsed simple form of the tower.
 *
 * Factors are always monic, pairwise distinct and sorted canonically (degree,
 * then coefficients from the top down), so results are independent of the
 * order in which random splits happen.
 */

#include <cstdint>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois {

struct Factor {
  Polynomial polynomial;  // monic irreducible
  std::size_t multiplicity;
};

struct Factorization {
  FieldElement unit;
  std::vector<Factor> factors;

  /// unit * prod factor^multiplicity.
  Polynomial expand() const;
  /// Total number of irreducible factors counted with multiplicity.
  std::size_t count() const;
};

struct FactorOptions {
  /// Largest degree accepted by the rational factorizer. Norms of
  /// polynomials over a degree-n field have n times the degree of the input.
  std::size_t max_rational_degree = 64;
  /// Largest number of recombination subsets tried before giving up.
  std::size_t max_recombination_subsets = 2'000'000;
  /// Shifts s = 0, 1, -1, 2, -2, ... tried for a squarefree norm.
  int max_norm_shifts = 32;
};

/// Over F_p or any finite tower level. Deterministic given the seed.
Factorization factor_over_prime_field(const Polynomial& f, std::uint64_t seed);

/// Over Q. CapabilityError when a squarefree part exceeds the degree bound.
Factorization factor_over_rationals(const Polynomial& f, const FactorOptions& options = {});

/// Over any tower level: Trager over characteristic 0, Cantor-Zassenhaus
/// over finite towers.
Factorization factor_over_extension(const Polynomial& f, std::uint64_t seed, const FactorOptions& options = {});

/// Dispatches on the coefficient field.
Factorization factor(const Polynomial& f, std::uint64_t seed = 0, const FactorOptions& options = {});

/// True iff the full factorization is a single factor of multiplicity one.
bool is_irreducible(const Polynomial& f, std::uint64_t seed = 0, const FactorOptions& options = {});

/// Distinct roots of f in its coefficient field, canonically ordered.
std::vector<FieldElement> roots_in_field(const Polynomial& f, std::uint64_t seed = 0, const FactorOptions& options = {});

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i, each g_i squarefree and pairwise coprime. Works in any
/// characteristic (p-th roots are taken in finite fields).
std::vector<Factor> squarefree_decomposition(const Polynomial& f);

}  // namespace galois
