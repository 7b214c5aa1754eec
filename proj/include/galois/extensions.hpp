#pragma once

/**
 * @file extensions.hpp
 * @brief Extension towers: adjoining roots, degrees, minimal polynomials,
 * splitting fields, and collapse of a tower to a simple extension K(z).
 */

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "galois/factorization.hpp"
#include "galois/field.hpp"
#include "galois/linalg.hpp"
#include "galois/polynomial.hpp"

namespace galois {

/// A tower K = L_0 ⊂ ... ⊂ L_k, identified with its top level.
class ExtensionTower {
 public:
  explicit ExtensionTower(BaseField base) : top_(base) {}
  explicit ExtensionTower(Field top) : top_(std::move(top)) {}

  const BaseField& base() const { return top_.base_field(); }
  const Field& top() const { return top_; }
  Field base_level() const { return top_.ancestor(0); }
  Field level(std::size_t i) const { return top_.ancestor(i); }
  /// Number of adjoined levels.
  std::size_t height() const { return top_.level(); }
  /// [L:K] over the base.
  std::size_t degree() const { return top_.dimension(); }
  /// Moduli m_1..m_k, each over the level below it.
  std::vector<Polynomial> moduli() const;
  std::vector<std::string> generator_names() const { return top_.generator_names(); }

  friend bool operator==(const ExtensionTower& a, const ExtensionTower& b) { return a.top_ == b.top_; }

 private:
  Field top_;
};

/// Name given to level i (1-based) when the caller does not choose one:
/// a, b, c, ... skipping x.
std::string default_generator_name(std::size_t level);

/// Extends the tower by a root of m, whose coefficients lie in K.top().
/// m is made monic. DomainError when deg m < 2 or m is reducible; the
/// message names a nontrivial factor.
ExtensionTower adjoin_root(const ExtensionTower& K, const Polynomial& m, std::string name = {},
                           std::uint64_t seed = 0);

/// Product of the relative degrees of levels down_to+1 .. top.
std::size_t degree(const ExtensionTower& L, std::size_t down_to = 0);

/// Monic minimal polynomial of z over `over`, which must be a level at or
/// below z's field: the first linear dependency among 1, z, z^2, ...
Polynomial minimal_polynomial(const FieldElement& z, const Field& over);

/// Degree over the base field of the subfield generated by `elements`.
std::size_t generated_subfield_degree(const Field& field, const std::vector<FieldElement>& elements);

/// Base-field basis of the subfield generated by `elements`.
std::vector<FieldElement> generated_subfield_basis(const Field& field, const std::vector<FieldElement>& elements);

/// True when y lies in the base-field span of `basis`.
bool in_span(const std::vector<FieldElement>& basis, const FieldElement& y);

/// A tower L collapsed to a single level K(z) of the same degree.
class SimpleForm {
 public:
  SimpleForm(Field original, Field simple, FieldElement primitive, std::vector<std::int64_t> multipliers,
             Matrix<Scalar> powers, Matrix<Scalar> powers_inverse);

  const Field& original() const { return original_; }
  const Field& simple() const { return simple_; }
  /// z as an element of the original tower.
  const FieldElement& primitive() const { return primitive_; }
  /// Multipliers c_1..c_{k-1} in z = t_k + c_{k-1} t_{k-1} + ... + c_1 t_1.
  const std::vector<std::int64_t>& multipliers() const { return multipliers_; }
  /// Minimal polynomial of z over the base (the modulus of the simple level).
  Polynomial modulus() const;

  /// Original element -> simple field. Accepts elements of any level of the
  /// original tower.
  FieldElement forward(const FieldElement& y) const;
  /// Simple field element -> original tower top.
  FieldElement backward(const FieldElement& w) const;
  /// forward(t_i) for i = 1..k.
  std::vector<FieldElement> generator_images() const;

 private:
  Field original_;
  Field simple_;
  FieldElement primitive_;
  std::vector<std::int64_t> multipliers_;
  Matrix<Scalar> powers_;          // columns: coordinates of z^j
  Matrix<Scalar> powers_inverse_;  // coordinates -> coefficients in z
};

/// Collapse of the tower below (and including) L. Results are cached on the
/// field, so repeated calls are cheap. A tower with at most one level is its
/// own simple form. CapabilityError when no multiplier vector with entries
/// of absolute value <= 20 yields a primitive element.
std::shared_ptr<const SimpleForm> collapse_to_simple(const Field& L);

struct SplitStep {
  std::size_t level;        // level created by this step
  std::string generator;    // its generator name
  Polynomial factor;        // irreducible factor whose root was adjoined
};

struct SplittingField {
  ExtensionTower tower;
  std::vector<FieldElement> roots;  // with multiplicity, canonical order
  std::vector<SplitStep> transcript;
};

/// Adjoins roots of irreducible factors of f (lowest degree first, ties
/// broken canonically) until f splits into linear factors.
SplittingField splitting_field(const Polynomial& f, std::uint64_t seed = 0, const FactorOptions& options = {});

}  // namespace galois
