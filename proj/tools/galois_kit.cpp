// galois_kit: command-line front end for the galois library.
//
// Exit codes: 0 success, 1 internal error or corpus mismatch, 2 bad input
// or unmet precondition, 3 capability limit reached.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "galois/corpus.hpp"
#include "galois/errors.hpp"
#include "galois/format.hpp"
#include "galois/galois_core.hpp"
#include "galois/json_io.hpp"
#include "galois/parse.hpp"

using namespace galois;

namespace {

struct Options {
  std::string polynomial;
  std::string base = "Q";
  std::string tower_path;
  bool stem = false;
  bool json = false;
  std::uint64_t seed = 1;
  std::string strategy = "roots";
  std::string subgroup;
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::uint64_t budget = 4096;
  std::string corpus_path;
  std::size_t parallel = 1;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GALOIS_KIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("GALOIS_KIT_SEED is not a non-negative integer: '") + env + "'");
    }
  }
  return 1;
}

struct Input {
  ExtensionTower tower;
  std::vector<FieldElement> generators;
  Json description;
};

Input read_input(const Options& o) {
  if (!o.tower_path.empty()) {
    if (!o.polynomial.empty()) throw DomainError("give either a polynomial or --tower, not both");
    std::ifstream in(o.tower_path);
    if (!in) throw DomainError("cannot read tower file '" + o.tower_path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw DomainError("tower file is not valid JSON: " + std::string(e.what()));
    }
    ExtensionTower L = tower_from_json(j, o.seed);
    std::vector<FieldElement> gens;
    for (std::size_t i = 1; i <= L.height(); ++i) gens.push_back(L.top().generator(i));
    return {L, gens, {{"construction", "tower"}, {"tower", tower_to_json(L)}}};
  }
  if (o.polynomial.empty()) throw DomainError("no polynomial given (or use --tower FILE)");
  const BaseField base = BaseField::parse(o.base);
  const Polynomial f = parse_polynomial(o.polynomial, Field(base));
  if (o.stem) {
    ExtensionTower L = adjoin_root(ExtensionTower(base), f, {}, o.seed);
    return {L, {L.top().generator()}, {{"construction", "stem"}, {"polynomial", polynomial_to_json(f)}}};
  }
  SplittingField s = splitting_field(f, o.seed);
  std::vector<FieldElement> gens = s.roots;
  if (s.tower.degree() == 1) gens.clear();
  return {s.tower, gens, {{"construction", "splitting"}, {"polynomial", polynomial_to_json(f)}}};
}

std::string describe(const ExtensionTower& L) {
  std::ostringstream os;
  os << "L over " << L.base().name() << ", degree " << L.degree();
  for (std::size_t i = 1; i <= L.height(); ++i) {
    os << "\n  " << L.level(i).generator_name() << ": root of " << to_string(modulus_polynomial(L.level(i)));
  }
  return os.str();
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_split(const Options& o) {
  const BaseField base = BaseField::parse(o.base);
  const Polynomial f = parse_polynomial(o.polynomial, Field(base));
  const SplittingField s = splitting_field(f, o.seed);
  if (o.json) {
    print(split_to_json(f, s));
    return 0;
  }
  std::cout << "splitting field of " << to_string(f) << " over " << base.name() << ": degree " << s.tower.degree()
            << "\n";
  for (const auto& step : s.transcript) {
    std::cout << "  adjoin " << step.generator << " (level " << step.level << "), a root of " << to_string(step.factor)
              << "\n";
  }
  std::cout << "roots:";
  for (const auto& r : s.roots) std::cout << "  " << to_string(r);
  std::cout << "\n";
  return 0;
}

int run_galois(const Options& o) {
  const Input in = read_input(o);
  const GaloisReport r = galois_report(in.tower, in.generators, o.seed);
  if (o.json) {
    Json j = in.description;
    j["degree"] = in.tower.degree();
    j["tower"] = tower_to_json(in.tower);
    j["report"] = report_to_json(r);
    print(j);
    return 0;
  }
  std::cout << describe(in.tower) << "\n";
  std::cout << "|G| = " << r.group_order << ", [L:K] = " << r.extension_degree
            << ", |G| <= [L:K]: " << (r.order_bound ? "yes" : "NO") << "\n";
  std::cout << "(a) |G| = [L:K]: " << (r.condition_a ? "holds" : "fails") << "\n";
  std::cout << "(c) fixed field of G has degree " << r.fixed_field_degree << ": " << (r.condition_c ? "holds" : "fails")
            << "\n";
  if (r.condition_b) {
    std::cout << "(b) certificate f = " << to_string(r.condition_b->polynomial) << " from B = {";
    for (std::size_t i = 0; i < r.condition_b->orbit.size(); ++i) {
      std::cout << (i ? ", " : "") << to_string(r.condition_b->orbit[i]);
    }
    std::cout << "}: coefficients in K, squarefree, splits over L, roots generate L\n";
  } else {
    std::cout << "(b) " << r.condition_b_note << "\n";
  }
  std::cout << "generic element z = " << to_string(r.generic) << ", minimal polynomial "
            << to_string(r.generic_minimal_polynomial) << "\n";
  std::cout << "verdict: " << (r.verdict ? "Galois" : "not Galois") << "\n";
  return 0;
}

int run_aut(const Options& o) {
  const Input in = read_input(o);
  const auto strategy = parse_strategy(o.strategy);
  const AutomorphismGroup G = automorphism_group(in.tower, strategy, o.seed);
  if (o.json) {
    Json j = in.description;
    j["tower"] = tower_to_json(in.tower);
    j["group"] = group_to_json(G, strategy);
    print(j);
    return 0;
  }
  std::cout << describe(in.tower) << "\n";
  std::cout << "|Aut(L/K)| = " << G.order() << (G.is_abelian() ? " (abelian)" : " (non-abelian)") << "\n";
  const auto names = in.tower.generator_names();
  for (const auto& sigma : G.elements()) {
    std::cout << "  sigma_" << *sigma.index() << ":";
    const auto images = sigma.generator_images();
    for (std::size_t i = 0; i < names.size(); ++i) std::cout << "  " << names[i] << " -> " << to_string(images[i]);
    std::cout << "\n";
  }
  return 0;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("--subgroup expects comma-separated indices, got '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

int run_fixed(const Options& o) {
  const Input in = read_input(o);
  const AutomorphismGroup G = automorphism_group(in.tower, AutomorphismStrategy::RootEnumeration, o.seed);
  const FixedFieldResult r = o.subgroup.empty() ? fixed_field(G) : fixed_field(G, parse_indices(o.subgroup));
  if (o.json) {
    Json j = in.description;
    j["tower"] = tower_to_json(in.tower);
    j["group"] = group_to_json(G, AutomorphismStrategy::RootEnumeration);
    j["fixed_field"] = fixed_field_to_json(r);
    print(j);
    return 0;
  }
  std::cout << describe(in.tower) << "\n";
  std::cout << "fixed field of {";
  for (std::size_t i = 0; i < r.subgroup.size(); ++i) std::cout << (i ? ", " : "") << "sigma_" << r.subgroup[i];
  std::cout << "}: degree " << r.degree << " over " << in.tower.base().name() << "\n  basis:";
  for (const auto& b : r.basis) std::cout << "  " << to_string(b);
  std::cout << "\n  generator " << to_string(r.generator) << ", minimal polynomial "
            << to_string(r.generator_minimal_polynomial) << "\n";
  return 0;
}

int run_primitive(const Options& o) {
  const Input in = read_input(o);
  const auto form = collapse_to_simple(in.tower.top());
  const AutomorphismGroup G = automorphism_group(in.tower, AutomorphismStrategy::RootEnumeration, o.seed);
  const FieldElement z = generic_element(in.tower, G);
  if (o.json) {
    Json j = in.description;
    j["tower"] = tower_to_json(in.tower);
    j["simple_form"] = simple_form_to_json(*form);
    j["generic_element"] = to_string(z);
    j["generic_minimal_polynomial"] = polynomial_to_json(minimal_polynomial(z, in.tower.base_level()));
    print(j);
    return 0;
  }
  std::cout << describe(in.tower) << "\n";
  std::cout << "primitive element " << to_string(form->primitive()) << ", minimal polynomial "
            << to_string(form->modulus(), "x") << "\n";
  const auto names = in.tower.generator_names();
  const auto images = form->generator_images();
  for (std::size_t i = 0; i < names.size(); ++i) std::cout << "  " << names[i] << " = " << to_string(images[i]) << "\n";
  std::cout << "generic element (trivial stabilizer in a group of order " << G.order() << "): " << to_string(z) << "\n";
  return 0;
}

int run_census(const Options& o) {
  const CensusReport r = subfield_element_census(o.p, o.n, o.budget);
  if (o.json) {
    print(census_to_json(r));
    return 0;
  }
  std::cout << "F_" << r.p << "^" << r.n << " (" << r.order << " elements, modulus " << to_string(r.modulus) << ")\n";
  for (const auto& s : r.subfields) {
    std::cout << "  m = " << s.m << ": x^(p^m) = x has " << s.size << " solutions"
              << (s.m < r.n ? (s.closed ? ", a subfield" : ", NOT closed") : "") << "\n";
  }
  std::cout << "elements in a proper subfield: " << r.proper_union << " <= " << r.bound << " < " << r.order << "\n";
  return 0;
}

int run_verify(const Options& o) {
  const auto records = load_corpus(o.corpus_path);
  const CorpusSummary s = verify_corpus(records, o.parallel, o.seed);
  if (o.json) {
    print(summary_to_json(s, o.seed));
  } else {
    for (const auto& r : s.results) {
      const Json& rep = r.report;
      auto num = [&](const char* key) { return rep.contains(key) ? rep[key].dump() : std::string("-"); };
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [L:K]=" << num("degree")
                << "  |G|=" << num("group_order") << "\n";
      for (const auto& m : r.mismatches) std::cout << "        " << m << "\n";
    }
    std::cout << s.passed << " passed, " << s.failed << " failed\n";
  }
  return s.failed == 0 ? 0 : 1;
}

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("polynomial", o.polynomial, "polynomial in x, e.g. \"x^3 - 2\"");
  cmd->add_option("--base", o.base, "base field: Q or F<p>")->capture_default_str();
  cmd->add_option("--tower", o.tower_path, "JSON tower file instead of a polynomial");
  cmd->add_flag("--stem", o.stem, "use the stem field K[x]/(f) instead of the splitting field");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact Galois theory toolkit"};
  app.require_subcommand(1);
  try {
    o.seed = default_seed();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--seed", o.seed, "random seed (default: $GALOIS_KIT_SEED or 1)");
  app.add_flag("--json", o.json, "machine-readable output");

  auto* split = app.add_subcommand("split", "splitting field with its adjunction transcript");
  split->add_option("polynomial", o.polynomial, "polynomial in x")->required();
  split->add_option("--base", o.base, "base field: Q or F<p>")->capture_default_str();
  auto* galois = app.add_subcommand("galois", "check the three characterizations of a Galois extension");
  add_input_options(galois, o);
  auto* aut = app.add_subcommand("aut", "automorphism group");
  add_input_options(aut, o);
  aut->add_option("--strategy", o.strategy, "roots or recursive")->capture_default_str();
  auto* fixed = app.add_subcommand("fixed", "fixed field of a set of automorphisms");
  add_input_options(fixed, o);
  fixed->add_option("--subgroup", o.subgroup, "comma-separated automorphism indices (default: all)");
  auto* primitive = app.add_subcommand("primitive", "primitive element and a generic element");
  add_input_options(primitive, o);
  auto* census = app.add_subcommand("census", "proper-subfield census of F_{p^n}");
  census->add_option("--p", o.p, "prime")->required();
  census->add_option("--n", o.n, "exponent, at least 2")->required();
  census->add_option("--budget", o.budget, "largest p^n to enumerate")->capture_default_str();
  auto* verify = app.add_subcommand("verify-corpus", "run and check every instance of a corpus file");
  verify->add_option("corpus", o.corpus_path, "corpus JSON file")->required();
  verify->add_option("--parallel", o.parallel, "instances evaluated concurrently")->capture_default_str();

  for (auto* cmd : {split, galois, aut, fixed, primitive, census, verify}) {
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_flag("--json", o.json, "machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*split) return run_split(o);
    if (*galois) return run_galois(o);
    if (*aut) return run_aut(o);
    if (*fixed) return run_fixed(o);
    if (*primitive) return run_primitive(o);
    if (*census) return run_census(o);
    if (*verify) return run_verify(o);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    std::cerr << "capability limit: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
