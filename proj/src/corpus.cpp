#include "galois/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "galois/errors.hpp"
#include "galois/format.hpp"
#include "galois/parse.hpp"

namespace galois {

namespace {

std::string required_string(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) throw DomainError(where + ": missing string \"" + key + "\"");
  return j[key].get<std::string>();
}

}  // namespace

std::vector<InstanceRecord> parse_corpus(const Json& j) {
  if (!j.is_array()) throw DomainError("corpus must be a JSON array of instance records");
  if (j.empty()) throw DomainError("corpus has no instances");
  std::vector<InstanceRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    const std::string where = "instance " + std::to_string(i);
    if (!e.is_object()) throw DomainError(where + " is not an object");
    InstanceRecord r;
    r.name = required_string(e, "name", where);
    r.base = required_string(e, "base", r.name);
    r.construction = required_string(e, "construction", r.name);
    if (r.construction == "tower") {
      if (!e.contains("levels") || !e["levels"].is_array()) throw DomainError(r.name + ": tower needs \"levels\"");
      r.levels = e["levels"];
    } else if (r.construction == "splitting" || r.construction == "stem") {
      r.polynomial = required_string(e, "polynomial", r.name);
    } else {
      throw DomainError(r.name + ": unknown construction '" + r.construction + "'");
    }
    if (e.contains("intermediate")) {
      for (const auto& gens : e["intermediate"]) r.intermediate.push_back(gens.get<std::vector<std::string>>());
    }
    if (!e.contains("expected") || !e["expected"].is_object()) throw DomainError(r.name + ": missing \"expected\"");
    r.expected = e["expected"];
    if (e.contains("provenance")) r.provenance = e["provenance"].get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<InstanceRecord> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read corpus file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("corpus file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_corpus(j);
}

BuiltInstance build_instance(const InstanceRecord& r, std::uint64_t seed) {
  const BaseField base = BaseField::parse(r.base);
  if (r.construction == "tower") {
    Json tower = {{"base", r.base}, {"levels", r.levels}};
    ExtensionTower L = tower_from_json(tower, seed);
    std::vector<FieldElement> gens;
    for (std::size_t i = 1; i <= L.height(); ++i) gens.push_back(L.top().generator(i));
    return {L, gens};
  }
  const Polynomial f = parse_polynomial(r.polynomial, Field(base));
  if (r.construction == "stem") {
    ExtensionTower L = adjoin_root(ExtensionTower(base), f, {}, seed);
    return {L, {L.top().generator()}};
  }
  SplittingField s = splitting_field(f, seed);
  std::vector<FieldElement> gens = s.roots;
  if (s.tower.degree() == 1) gens.clear();
  return {s.tower, gens};
}

InstanceResult run_instance(const InstanceRecord& r, std::uint64_t seed) {
  InstanceResult out{.name = r.name};
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) out.mismatches.push_back(what);
  };
  Json report = {{"name", r.name}, {"base", r.base}, {"construction", r.construction}};
  try {
    BuiltInstance inst = build_instance(r, seed);
    const ExtensionTower& L = inst.tower;
    report["tower"] = tower_to_json(L);
    const AutomorphismGroup G = automorphism_group(L, AutomorphismStrategy::RootEnumeration, seed);
    const AutomorphismGroup G2 = automorphism_group(L, AutomorphismStrategy::RecursiveExtension, seed);
    bool agree = G.order() == G2.order();
    for (const auto& sigma : G2.elements()) agree = agree && G.index_of(sigma).has_value();

    const GaloisReport g = galois_report(L, G, inst.generators, seed);
    report["degree"] = g.extension_degree;
    report["group_order"] = g.group_order;
    report["abelian"] = G.is_abelian();
    report["strategies_agree"] = agree;
    report["galois"] = report_to_json(g);

    check(g.order_bound, "|G| exceeds [L:K]");
    check(g.condition_a == g.condition_c, "conditions (a) and (c) disagree");
    check(agree, "automorphism strategies disagree");
    if (g.verdict) {
      check(g.condition_b && g.condition_b->valid(), "certificate for (b) does not verify");
      const Polynomial orbit = orbit_polynomial(g.generic, G);
      const bool matches = orbit == g.generic_minimal_polynomial.embed(L.top()) &&
                           static_cast<std::size_t>(orbit.degree()) == g.extension_degree && is_squarefree(orbit);
      report["orbit_equals_minimal_polynomial"] = matches;
      check(matches, "orbit polynomial of the generic element differs from its minimal polynomial");
    }

    Json inter = Json::array();
    for (const auto& texts : r.intermediate) {
      std::vector<FieldElement> gens;
      for (const auto& t : texts) gens.push_back(parse_element(t, L.top()));
      const IntermediateCheck ic = intermediate_fixed_check(G, gens);
      inter.push_back({{"generators", texts},
                       {"subgroup_order", ic.subgroup.size()},
                       {"subfield_degree", ic.subfield_degree},
                       {"fixed_degree", ic.fixed_degree},
                       {"holds", ic.holds}});
      check(ic.holds, "fixed field of Aut(L, M) differs from M for M generated by " + Json(texts).dump());
    }
    report["intermediate"] = std::move(inter);

    const Json& e = r.expected;
    auto expect_number = [&](const char* key, std::size_t actual) {
      if (e.contains(key) && e[key].get<std::size_t>() != actual) {
        check(false, std::string(key) + ": expected " + e[key].dump() + ", got " + std::to_string(actual));
      }
    };
    expect_number("degree", g.extension_degree);
    expect_number("group_order", g.group_order);
    expect_number("fixed_degree", g.fixed_field_degree);
    if (e.contains("verdict") && e["verdict"].get<bool>() != g.verdict) {
      check(false, "verdict: expected " + e["verdict"].dump());
    }
    if (e.contains("abelian") && e["abelian"].get<bool>() != G.is_abelian()) {
      check(false, "abelian: expected " + e["abelian"].dump());
    }
    if (e.contains("certificate")) {
      const std::string want = e["certificate"].get<std::string>();
      const std::string got = g.condition_b ? to_string(g.condition_b->polynomial) : "none";
      check(want == got, "certificate: expected " + want + ", got " + got);
    }
  } catch (const std::exception& ex) {
    out.mismatches.push_back(std::string("error: ") + ex.what());
  }
  out.passed = out.mismatches.empty();
  report["status"] = out.passed ? "pass" : "fail";
  report["mismatches"] = out.mismatches;
  out.report = std::move(report);
  return out;
}

CorpusSummary verify_corpus(const std::vector<InstanceRecord>& records, std::size_t parallelism, std::uint64_t seed) {
  CorpusSummary summary;
  summary.results.resize(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) summary.results[i] = run_instance(records[i], seed);
  };
  const std::size_t threads = std::clamp<std::size_t>(parallelism, 1, std::max<std::size_t>(records.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::sort(summary.results.begin(), summary.results.end(),
            [](const InstanceResult& a, const InstanceResult& b) { return a.name < b.name; });
  for (const auto& r : summary.results) (r.passed ? summary.passed : summary.failed)++;
  return summary;
}

Json summary_to_json(const CorpusSummary& s, std::uint64_t seed) {
  Json instances = Json::array();
  for (const auto& r : s.results) instances.push_back(r.report);
  return {{"seed", seed},
          {"total", s.results.size()},
          {"passed", s.passed},
          {"failed", s.failed},
          {"instances", std::move(instances)}};
}

}  // namespace galois
