#pragma once

/**
 * @file galois_core.hpp
 * @brief Automorphism groups of towers, fixed fields, generic elements,
 * orbit polynomials, and the checks tying them together.
 *
 * An automorphism of L over its base K is stored as the image of the
 * primitive generator z of the collapsed form K(z) of L. Applying it to an
 * element y means writing y as a polynomial in z and substituting the image.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galois/extensions.hpp"
#include "galois/factorization.hpp"
#include "galois/field.hpp"
#include "galois/polynomial.hpp"

namespace galois {

class Automorphism {
 public:
  /// `image` is the image of z and must lie in form->simple(); it is not
  /// checked to be a root of the modulus here (the group constructors do).
  Automorphism(std::shared_ptr<const SimpleForm> form, FieldElement image, std::optional<std::size_t> index = {});

  /// The field L the map acts on (the top of the original tower).
  const Field& field() const { return form_->original(); }
  const SimpleForm& form() const { return *form_; }
  const std::shared_ptr<const SimpleForm>& form_ptr() const { return form_; }
  /// sigma(z), in the simple field K(z).
  const FieldElement& image() const { return image_; }
  /// Position in the owning group, when the map came from one.
  std::optional<std::size_t> index() const { return index_; }
  bool is_identity() const;
  /// sigma(t_i) for each generator of the tower, in L.
  std::vector<FieldElement> generator_images() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b);

 private:
  std::shared_ptr<const SimpleForm> form_;
  FieldElement image_;
  std::optional<std::size_t> index_;
};

/// sigma(y) for y in L or in any level below it; the result lies in L.
FieldElement apply(const Automorphism& sigma, const FieldElement& y);
/// sigma o tau.
Automorphism compose(const Automorphism& sigma, const Automorphism& tau);

enum class AutomorphismStrategy { RootEnumeration, RecursiveExtension };

std::string to_string(AutomorphismStrategy s);
/// "roots" or "recursive"; DomainError otherwise.
AutomorphismStrategy parse_strategy(const std::string& text);

class AutomorphismGroup {
 public:
  /// Sorts the maps (identity first, then canonical order of the image of
  /// z), assigns indices, and verifies closure under composition and
  /// inverses. InternalError when the set is not a group.
  explicit AutomorphismGroup(std::vector<Automorphism> elements);

  const std::vector<Automorphism>& elements() const { return elements_; }
  const Automorphism& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t order() const { return elements_.size(); }
  const Field& field() const { return elements_.front().field(); }
  /// table()[i][j] is the index of elements[i] o elements[j].
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  /// Index of a map equal to sigma; nullopt when it is not in the group.
  std::optional<std::size_t> index_of(const Automorphism& sigma) const;
  bool is_abelian() const;

 private:
  std::vector<Automorphism> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

/// Aut(L, K) for the tower L over its base K. Root enumeration factors the
/// collapsed modulus over L; recursive extension extends the identity of K
/// one level at a time through the roots of each level modulus.
AutomorphismGroup automorphism_group(const ExtensionTower& L,
                                     AutomorphismStrategy strategy = AutomorphismStrategy::RootEnumeration,
                                     std::uint64_t seed = 0, const FactorOptions& options = {});

struct FixedFieldResult {
  std::vector<std::size_t> subgroup;      // indices into the group
  std::vector<FieldElement> basis;        // reduced echelon basis over the base
  FieldElement generator;                 // a primitive element of the fixed field
  Polynomial generator_minimal_polynomial;  // over the base
  std::size_t degree = 0;                 // over the base
};

/// Fixed field of the listed group elements; the identity is added when
/// absent. DomainError on an empty list or an out-of-range index.
FixedFieldResult fixed_field(const AutomorphismGroup& G, std::vector<std::size_t> subgroup);
/// Fixed field of the whole group.
FixedFieldResult fixed_field(const AutomorphismGroup& G);

/// An element z of L moved by every non-identity element of G. The search
/// runs over integer combinations of the flattened basis in increasing
/// max-norm up to 20 (for F_p, up to the residues themselves).
/// CapabilityError when the search is exhausted.
FieldElement generic_element(const ExtensionTower& L, const AutomorphismGroup& G);

/// prod over sigma in G of (X - sigma(z)), over L. InternalError if some
/// coefficient is not fixed by every element of G.
Polynomial orbit_polynomial(const FieldElement& z, const AutomorphismGroup& G);

struct ConditionBCertificate {
  std::vector<FieldElement> orbit;  // the set B, canonical order
  Polynomial polynomial;            // prod over B of (X - b), over the base
  bool coefficients_in_base = false;
  bool squarefree = false;
  bool splits = false;
  bool roots_generate = false;

  bool valid() const { return coefficients_in_base && squarefree && splits && roots_generate; }
};

struct GaloisReport {
  std::size_t group_order = 0;
  std::size_t extension_degree = 0;
  bool condition_a = false;
  std::size_t fixed_field_degree = 0;
  bool condition_c = false;
  /// |G| <= [L:K]; always expected to hold.
  bool order_bound = false;
  std::optional<ConditionBCertificate> condition_b;
  /// Set when (a) fails: why no certificate for (b) is searched for.
  std::string condition_b_note;
  FieldElement generic;
  Polynomial generic_minimal_polynomial;
  bool verdict = false;
};

/// The three characterizations of a Galois extension for L over its base.
/// `generators` must generate L (DomainError otherwise); an empty list is
/// accepted only when L has degree 1.
GaloisReport galois_report(const ExtensionTower& L, const std::vector<FieldElement>& generators, std::uint64_t seed = 0,
                           const FactorOptions& options = {});
/// Same, reusing an already computed group of L.
GaloisReport galois_report(const ExtensionTower& L, const AutomorphismGroup& G,
                           const std::vector<FieldElement>& generators, std::uint64_t seed = 0,
                           const FactorOptions& options = {});

struct IntermediateCheck {
  std::vector<std::size_t> subgroup;  // H = elements of G fixing M
  std::size_t subfield_degree = 0;    // [M:K]
  std::size_t fixed_degree = 0;       // [Fix(H):K]
  bool holds = false;
};

/// For M generated over K by `m_generators`, computes H = Aut(L, M) inside
/// G and checks Fix(H) = M. G must be the full group of a Galois L
/// (DomainError otherwise).
IntermediateCheck intermediate_fixed_check(const AutomorphismGroup& G, const std::vector<FieldElement>& m_generators);
IntermediateCheck intermediate_fixed_check(const ExtensionTower& L, const std::vector<FieldElement>& m_generators,
                                           std::uint64_t seed = 0);

struct SubfieldCount {
  std::size_t m = 0;          // divisor of n
  std::uint64_t size = 0;     // solutions of x^(p^m) = x
  bool closed = false;        // closed under + and * (checked for m < n)
};

struct CensusReport {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::uint64_t order = 0;            // p^n
  Polynomial modulus;                 // defining polynomial of F_{p^n}
  std::vector<SubfieldCount> subfields;
  std::uint64_t proper_union = 0;     // elements in some proper subfield
  std::uint64_t bound = 0;            // 1 + p + ... + p^(n-1)
};

/// Exhaustive proper-subfield census of F_{p^n}. DomainError unless p is
/// prime and n >= 2; CapabilityError when p^n exceeds the budget.
/// InternalError if the counting bound or subfield uniqueness fails.
CensusReport subfield_element_census(std::uint64_t p, std::size_t n, std::uint64_t budget = 4096);

/// An element of L outside every listed K-subspace (each given by a
/// spanning set). Only for K = Q; DomainError for finite bases or when a
/// subspace is all of L.
FieldElement outside_union_witness(const ExtensionTower& L, const std::vector<std::vector<FieldElement>>& subspaces);

}  // namespace galois
