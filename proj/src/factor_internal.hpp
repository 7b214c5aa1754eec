#pragma once

#include <vector>

#include "galois/factorization.hpp"

namespace galois::detail {

/// Sorts factors canonically and merges repeated ones.
Factorization make_factorization(FieldElement unit, std::vector<Factor> factors);

/// Irreducible factors of a squarefree polynomial over a characteristic-0
/// level >= 1, via Trager's norm method.
std::vector<Polynomial> trager_squarefree(const Polynomial& f, const FactorOptions& options);

}  // namespace galois::detail
