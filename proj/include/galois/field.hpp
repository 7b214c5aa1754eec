#pragma once

/**
 * @file field.hpp
 * @brief Fields as levels of a quotient-ring tower, and their elements.
 *
 * A Field is a handle to one level of a chain
 *
 *     K = L_0 ⊂ L_1 = L_0[t_1]/(m_1) ⊂ ... ⊂ L_k = L_{k-1}[t_k]/(m_k)
 *
 * where each m_i is monic with coefficients in L_{i-1}. Levels are shared
 * immutable nodes, so adjoining a root produces a new handle whose lower
 * levels are the same objects as before and elements of a lower level embed
 * into a higher one without conversion.
 *
 * A FieldElement of level i stores its coordinates over the base field,
 * flattened: an element of L_i is a polynomial in t_i of degree < deg m_i with
 * coefficients in L_{i-1}, and the coefficient of t_i^j occupies the j-th
 * contiguous chunk of dim(L_{i-1}) base scalars. Chunks of size dim(L_j) are
 * therefore exactly the coordinates over L_j for any j < i.
 */

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "galois/exact_arith.hpp"

namespace galois {

class FieldElement;
class SimpleForm;

namespace detail {

struct FieldNode {
  BaseField base;
  std::shared_ptr<const FieldNode> parent;  // null at the base
  std::size_t level = 0;
  std::size_t degree = 1;  // over parent
  std::size_t dim = 1;     // over base
  std::string name;
  // Monic modulus m_level: degree+1 coefficients, each parent->dim scalars.
  std::vector<std::vector<Scalar>> modulus;

  mutable std::once_flag simple_once;
  mutable std::shared_ptr<const SimpleForm> simple;

  explicit FieldNode(BaseField b) : base(b) {}

  std::vector<Scalar> zero_coords() const;
  std::vector<Scalar> mul(std::span<const Scalar> a, std::span<const Scalar> b) const;
  std::vector<Scalar> inverse(std::span<const Scalar> a) const;
};

}  // namespace detail

class Field {
 public:
  /// The base field itself, as a level-0 tower.
  explicit Field(BaseField base);

  const BaseField& base_field() const { return node_->base; }
  std::size_t level() const { return node_->level; }
  /// Degree over the base field.
  std::size_t dimension() const { return node_->dim; }
  /// Degree over the level directly below (1 at the base).
  std::size_t relative_degree() const { return node_->degree; }
  /// Name of this level's generator; empty at the base.
  const std::string& generator_name() const { return node_->name; }
  /// Generator names of levels 1..level().
  std::vector<std::string> generator_names() const;

  Field parent() const;
  Field ancestor(std::size_t level) const;
  /// True when `lower` is this field or one of the levels below it.
  bool extends(const Field& lower) const;

  bool is_finite() const { return base_field().is_finite(); }
  std::uint64_t characteristic() const { return base_field().characteristic(); }
  /// Number of elements; only for finite fields.
  Integer order() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t n) const;
  FieldElement from_scalar(const Scalar& s) const;
  FieldElement from_rational(const Rational& r) const;
  /// t_level, the residue of X in this level.
  FieldElement generator() const;
  /// t_i for 1 <= i <= level(), embedded in this field.
  FieldElement generator(std::size_t i) const;
  /// The flattened basis vector with a single 1 at `index`.
  FieldElement basis_element(std::size_t index) const;
  FieldElement element(std::vector<Scalar> coords) const;

  /// Adds a level with the given monic modulus, whose coefficients are
  /// elements of this field. No irreducibility check: callers go through
  /// extensions::adjoin_root unless the modulus is known irreducible.
  Field adjoin_unchecked(std::string name, const std::vector<FieldElement>& modulus) const;

  /// Same tower data: identical node or structurally equal moduli chain.
  friend bool operator==(const Field& a, const Field& b);

  const detail::FieldNode& node() const { return *node_; }
  const std::shared_ptr<const detail::FieldNode>& node_ptr() const { return node_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::FieldNode> node_;
};

class FieldElement {
 public:
  /// Throws DomainError when the coordinate count or scalar domain is wrong.
  FieldElement(Field field, std::vector<Scalar> coords);

  const Field& field() const { return field_; }
  std::span<const Scalar> coordinates() const { return coords_; }
  /// Coordinates over an intermediate level: dim(this)/dim(lower) elements.
  std::vector<FieldElement> coordinates_over(const Field& lower) const;

  bool is_zero() const;
  bool is_one() const;
  /// True when only the constant coordinate is nonzero.
  bool in_base() const;
  /// The constant coordinate; throws DomainError unless in_base().
  const Scalar& base_value() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  /// Throws DomainError on zero.
  FieldElement inverse() const;
  FieldElement pow(const Integer& exponent) const;
  FieldElement pow(std::uint64_t exponent) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Canonical order: lexicographic on flattened coordinates, highest index
  /// first. Both sides must share a field.
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);

  /// The same element viewed in an extension of its field.
  FieldElement embed(const Field& target) const;
  /// The same element viewed in a lower level; throws DomainError if it does
  /// not lie there.
  FieldElement descend(const Field& lower) const;

 private:
  void check_same(const FieldElement& o) const;

  Field field_;
  std::vector<Scalar> coords_;
};

FieldElement zero_like(const FieldElement& x);
FieldElement one_like(const FieldElement& x);
inline Scalar zero_like(const Scalar& x) { return x.zero_like(); }
inline Scalar one_like(const Scalar& x) { return x.one_like(); }

/// Hash of the coordinate vector, for unordered containers.
struct FieldElementHash {
  std::size_t operator()(const FieldElement& x) const;
};

}  // namespace galois
