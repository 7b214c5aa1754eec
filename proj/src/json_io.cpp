#include "galois/json_io.hpp"

#include "galois/errors.hpp"
#include "galois/format.hpp"
#include "galois/parse.hpp"

namespace galois {

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational().to_string();
  return s.residue().value();
}

Json element_to_json(const FieldElement& x) {
  if (x.field().level() == 0) return scalar_to_json(x.base_value());
  return to_string(x);
}

Json polynomial_to_json(const Polynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(element_to_json(c));
  return out;
}

Json tower_to_json(const ExtensionTower& L) {
  Json levels = Json::array();
  for (std::size_t i = 1; i <= L.height(); ++i) {
    levels.push_back({{"name", L.level(i).generator_name()}, {"modulus", polynomial_to_json(modulus_polynomial(L.level(i)))}});
  }
  return {{"base", L.base().name()}, {"levels", std::move(levels)}};
}

namespace {

FieldElement element_from_json(const Json& j, const Field& field) {
  if (j.is_string()) return parse_element(j.get<std::string>(), field);
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? field.from_rational(Rational(Integer::parse(std::to_string(j.get<std::uint64_t>()))))
                                  : field.from_int(j.get<std::int64_t>());
  }
  throw DomainError("coefficient must be a string or an integer, got " + j.dump());
}

}  // namespace

Polynomial polynomial_from_json(const Json& j, const Field& field) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), field);
  if (!j.is_array()) throw DomainError("polynomial must be an expression string or a coefficient array");
  std::vector<FieldElement> coeffs;
  for (const auto& c : j) coeffs.push_back(element_from_json(c, field));
  return {field, std::move(coeffs)};
}

ExtensionTower tower_from_json(const Json& j, std::uint64_t seed) {
  if (!j.is_object() || !j.contains("base") || !j["base"].is_string()) {
    throw DomainError("tower must be an object with a string \"base\"");
  }
  ExtensionTower tower(BaseField::parse(j["base"].get<std::string>()));
  if (!j.contains("levels")) return tower;
  if (!j["levels"].is_array()) throw DomainError("tower \"levels\" must be an array");
  for (const auto& level : j["levels"]) {
    if (!level.is_object() || !level.contains("modulus")) throw DomainError("each level needs a \"modulus\"");
    std::string name = level.contains("name") ? level["name"].get<std::string>() : std::string{};
    tower = adjoin_root(tower, polynomial_from_json(level["modulus"], tower.top()), std::move(name), seed);
  }
  return tower;
}

Json split_to_json(const Polynomial& f, const SplittingField& s) {
  Json steps = Json::array();
  for (const auto& step : s.transcript) {
    steps.push_back({{"level", step.level}, {"generator", step.generator}, {"factor", polynomial_to_json(step.factor)},
                     {"factor_text", to_string(step.factor)}});
  }
  Json roots = Json::array();
  for (const auto& r : s.roots) roots.push_back(to_string(r));
  return {{"polynomial", polynomial_to_json(f)},
          {"base", s.tower.base().name()},
          {"degree", s.tower.degree()},
          {"tower", tower_to_json(s.tower)},
          {"transcript", std::move(steps)},
          {"roots", std::move(roots)}};
}

Json automorphism_to_json(const Automorphism& sigma) {
  Json images = Json::object();
  const auto names = sigma.field().generator_names();
  const auto values = sigma.generator_images();
  for (std::size_t i = 0; i < names.size(); ++i) images[names[i]] = to_string(values[i]);
  Json out = {{"index", sigma.index() ? Json(*sigma.index()) : Json(nullptr)},
              {"identity", sigma.is_identity()},
              {"generator_images", std::move(images)}};
  return out;
}

Json group_to_json(const AutomorphismGroup& G, AutomorphismStrategy strategy) {
  Json elements = Json::array();
  for (const auto& sigma : G.elements()) elements.push_back(automorphism_to_json(sigma));
  Json inverses = Json::array();
  for (std::size_t i = 0; i < G.order(); ++i) inverses.push_back(G.inverse_index(i));
  return {{"strategy", to_string(strategy)},
          {"order", G.order()},
          {"degree", G.field().dimension()},
          {"abelian", G.is_abelian()},
          {"elements", std::move(elements)},
          {"composition_table", G.table()},
          {"inverses", std::move(inverses)}};
}

Json fixed_field_to_json(const FixedFieldResult& r) {
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(to_string(b));
  return {{"subgroup", r.subgroup},
          {"degree", r.degree},
          {"basis", std::move(basis)},
          {"generator", to_string(r.generator)},
          {"generator_minimal_polynomial", polynomial_to_json(r.generator_minimal_polynomial)}};
}

Json report_to_json(const GaloisReport& r) {
  Json cert = nullptr;
  if (r.condition_b) {
    Json orbit = Json::array();
    for (const auto& b : r.condition_b->orbit) orbit.push_back(to_string(b));
    cert = {{"orbit", std::move(orbit)},
            {"polynomial", polynomial_to_json(r.condition_b->polynomial)},
            {"polynomial_text", to_string(r.condition_b->polynomial)},
            {"coefficients_in_base", r.condition_b->coefficients_in_base},
            {"squarefree", r.condition_b->squarefree},
            {"splits", r.condition_b->splits},
            {"roots_generate", r.condition_b->roots_generate}};
  }
  return {{"verdict", r.verdict},
          {"condition_a", {{"holds", r.condition_a}, {"group_order", r.group_order}, {"degree", r.extension_degree}}},
          {"condition_b", {{"certificate", std::move(cert)}, {"note", r.condition_b_note}}},
          {"condition_c", {{"holds", r.condition_c}, {"fixed_field_degree", r.fixed_field_degree}}},
          {"order_bound", r.order_bound},
          {"generic_element", to_string(r.generic)},
          {"generic_minimal_polynomial", polynomial_to_json(r.generic_minimal_polynomial)}};
}

Json census_to_json(const CensusReport& r) {
  Json subfields = Json::array();
  for (const auto& s : r.subfields) subfields.push_back({{"m", s.m}, {"size", s.size}, {"closed", s.closed}});
  return {{"p", r.p},
          {"n", r.n},
          {"order", r.order},
          {"modulus", polynomial_to_json(r.modulus)},
          {"subfields", std::move(subfields)},
          {"proper_union", r.proper_union},
          {"bound", r.bound},
          {"holds", r.proper_union <= r.bound && r.bound < r.order}};
}

Json simple_form_to_json(const SimpleForm& s) {
  Json images = Json::object();
  const auto names = s.original().generator_names();
  const auto values = s.generator_images();
  for (std::size_t i = 0; i < names.size(); ++i) images[names[i]] = to_string(values[i]);
  return {{"primitive_element", to_string(s.primitive())},
          {"multipliers", s.multipliers()},
          {"minimal_polynomial", polynomial_to_json(s.modulus())},
          {"minimal_polynomial_text", to_string(s.modulus())},
          {"generator_images", std::move(images)}};
}

}  // namespace galois
