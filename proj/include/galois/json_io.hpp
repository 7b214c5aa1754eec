#pragma once

// JSON encodings. Rationals are strings ("-3/4"), residues mod p are
// integers, polynomials are ascending coefficient arrays, and elements of a
// proper extension are strings in the parser's grammar. The layouts are
// documented in docs/json_schema.md.

#include <cstdint>

#include "json.hpp"

#include "galois/extensions.hpp"
#include "galois/galois_core.hpp"

namespace galois {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
/// Scalar when the element lies in the base field, a string otherwise.
Json element_to_json(const FieldElement& x);
Json polynomial_to_json(const Polynomial& f);
/// {"base": ..., "levels": [{"name": ..., "modulus": [...]}, ...]}
Json tower_to_json(const ExtensionTower& L);

/// Parses a coefficient array or an expression string over `field`.
Polynomial polynomial_from_json(const Json& j, const Field& field);
/// Inverse of tower_to_json; each modulus may also be an expression string.
/// Levels are adjoined through adjoin_root, so reducible moduli are
/// rejected with a DomainError.
ExtensionTower tower_from_json(const Json& j, std::uint64_t seed = 0);

Json split_to_json(const Polynomial& f, const SplittingField& s);
Json automorphism_to_json(const Automorphism& sigma);
Json group_to_json(const AutomorphismGroup& G, AutomorphismStrategy strategy);
Json fixed_field_to_json(const FixedFieldResult& r);
Json report_to_json(const GaloisReport& r);
Json census_to_json(const CensusReport& r);
Json simple_form_to_json(const SimpleForm& s);

}  // namespace galois
