#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "galois/corpus.hpp"
#include "galois/errors.hpp"
#include "galois/galois_core.hpp"
#include "galois/json_io.hpp"
#include "test_util.hpp"

namespace galois {
namespace {

using testing::E;
using testing::P;
using testing::rationals;

struct KitRun {
  int status = -1;
  std::string out;
};

KitRun run_kit(const std::string& args) {
  const std::string cmd = std::string(GALOIS_KIT_PATH) + " " + args + " 2>/dev/null";
  KitRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

// ---------------------------------------------------------------- JSON encodings

TEST(JsonIo, ScalarsAndElements) {
  EXPECT_EQ(scalar_to_json(Rational::parse("-3/4")), Json("-3/4"));
  EXPECT_EQ(scalar_to_json(BaseField::prime(7).from_int(-1)), Json(6));
  ExtensionTower L = testing::sqrt2_sqrt3();
  EXPECT_EQ(element_to_json(E(L.top(), "5")), Json("5"));
  EXPECT_EQ(element_to_json(E(L.top(), "a*b - 1")), Json("a*b - 1"));
  EXPECT_EQ(polynomial_to_json(P(rationals(), "x^2 - 1/2")), Json::parse(R"(["-1/2", "0", "1"])"));
}

TEST(JsonIo, TowerRoundTrip) {
  for (const auto& L : {testing::sqrt2_sqrt3(), testing::finite_field(3, 2),
                        splitting_field(P(rationals(), "x^3 - 2")).tower}) {
    const Json j = tower_to_json(L);
    ExtensionTower back = tower_from_json(Json::parse(j.dump()));
    EXPECT_EQ(tower_to_json(back), j);
    EXPECT_EQ(back.degree(), L.degree());
  }
}

TEST(JsonIo, TowerFromExpressionStrings) {
  const Json j = Json::parse(R"({"base": "Q", "levels": [{"name": "r", "modulus": "x^2 - 2"},
                                                        {"name": "s", "modulus": "x^2 - r"}]})");
  ExtensionTower L = tower_from_json(j);
  EXPECT_EQ(L.degree(), 4u);
  EXPECT_EQ(L.generator_names(), (std::vector<std::string>{"r", "s"}));
  EXPECT_THROW(tower_from_json(Json::parse(R"({"base": "Q", "levels": [{"modulus": "x^2 - 4"}]})")), DomainError);
  EXPECT_THROW(tower_from_json(Json::parse(R"({"base": "F6", "levels": []})")), DomainError);
  EXPECT_THROW(tower_from_json(Json::parse(R"([1, 2])")), DomainError);
}

TEST(JsonIo, ReportFields) {
  ExtensionTower L = testing::stem(rationals(), "x^3 - 2");
  const Json j = report_to_json(galois_report(L, {L.top().generator()}));
  EXPECT_FALSE(j["verdict"].get<bool>());
  EXPECT_FALSE(j["condition_a"]["holds"].get<bool>());
  EXPECT_EQ(j["condition_a"]["group_order"], 1);
  EXPECT_EQ(j["condition_a"]["degree"], 3);
  EXPECT_TRUE(j["condition_b"]["certificate"].is_null());
  EXPECT_FALSE(j["condition_b"]["note"].get<std::string>().empty());
  EXPECT_EQ(j["condition_c"]["fixed_field_degree"], 3);
  EXPECT_TRUE(j["order_bound"].get<bool>());
}

TEST(JsonIo, GroupAndCensus) {
  ExtensionTower L = testing::sqrt2_sqrt3();
  AutomorphismGroup G = automorphism_group(L);
  const Json g = group_to_json(G, AutomorphismStrategy::RecursiveExtension);
  EXPECT_EQ(g["strategy"], "recursive");
  EXPECT_EQ(g["order"], 4);
  EXPECT_TRUE(g["abelian"].get<bool>());
  ASSERT_EQ(g["elements"].size(), 4u);
  EXPECT_TRUE(g["elements"][0]["identity"].get<bool>());
  const Json c = census_to_json(subfield_element_census(2, 4));
  EXPECT_EQ(c["proper_union"], 4);
  EXPECT_EQ(c["bound"], 15);
  EXPECT_EQ(c["order"], 16);
}

// ---------------------------------------------------------------- corpus

TEST(Corpus, LoadingErrors) {
  EXPECT_THROW(parse_corpus(Json::array()), DomainError);
  EXPECT_THROW(parse_corpus(Json::object()), DomainError);
  EXPECT_THROW(load_corpus("/nonexistent/corpus.json"), DomainError);
  EXPECT_THROW(load_corpus(write_temp("broken.json", "[{")), DomainError);
}

TEST(Corpus, WrongExpectationNamesInstance) {
  const Json j = Json::parse(R"([
    {"name": "good", "base": "Q", "construction": "splitting", "polynomial": "x^2 - 3",
     "expected": {"degree": 2, "group_order": 2, "verdict": true}},
    {"name": "wrong-order", "base": "Q", "construction": "stem", "polynomial": "x^3 - 2",
     "expected": {"degree": 3, "group_order": 3, "verdict": false}}
  ])");
  CorpusSummary s = verify_corpus(parse_corpus(j), 2, 1);
  EXPECT_EQ(s.passed, 1u);
  EXPECT_EQ(s.failed, 1u);
  ASSERT_EQ(s.results.size(), 2u);
  EXPECT_TRUE(s.results[0].passed);
  EXPECT_EQ(s.results[1].name, "wrong-order");
  EXPECT_FALSE(s.results[1].passed);
  ASSERT_FALSE(s.results[1].mismatches.empty());
  EXPECT_NE(s.results[1].mismatches[0].find("group_order"), std::string::npos);
}

TEST(Corpus, BundledCorpusPasses) {
  CorpusSummary s = verify_corpus(load_corpus(CORPUS_PATH), 4, 1);
  EXPECT_EQ(s.failed, 0u);
  EXPECT_GE(s.results.size(), 20u);
  for (const auto& r : s.results) EXPECT_TRUE(r.passed) << r.name;
}

// ---------------------------------------------------------------- executable

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_kit("galois \"x^2 - 2\"").status, 0);
  EXPECT_EQ(run_kit("galois \"x^3 - 2\" --stem").status, 0);
  EXPECT_EQ(run_kit("split \"x^2 +\"").status, 2);
  EXPECT_EQ(run_kit("galois \"x^2 - 2\" --base F4").status, 2);
  EXPECT_EQ(run_kit("galois \"x^2 - 4\" --stem").status, 2);
  EXPECT_EQ(run_kit("census --p 2 --n 20").status, 3);
  EXPECT_EQ(run_kit("census --p 2 --n 1").status, 2);
  EXPECT_EQ(run_kit("aut \"x^2 + 1\" --strategy sideways").status, 2);
  EXPECT_EQ(run_kit("no-such-verb").status, 2);
  EXPECT_EQ(run_kit("verify-corpus /nonexistent.json").status, 2);
  EXPECT_EQ(run_kit("--help").status, 0);
}

TEST(Cli, CorpusMismatchExitsOne) {
  const std::string path = write_temp("mismatch.json", R"([{"name": "bad", "base": "Q", "construction": "stem",
    "polynomial": "x^2 + 1", "expected": {"group_order": 1}}])");
  KitRun r = run_kit("verify-corpus " + path);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL  bad"), std::string::npos) << r.out;
}

TEST(Cli, JsonOutputParses) {
  KitRun r = run_kit("galois \"x^3 - 2\" --json");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["degree"], 6);
  EXPECT_TRUE(j["report"]["verdict"].get<bool>());
  EXPECT_EQ(j["report"]["condition_a"]["group_order"], 6);

  r = run_kit("census --p 3 --n 2 --json");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["proper_union"], 3);

  r = run_kit("split \"x^4 + 1\" --json");
  ASSERT_EQ(r.status, 0);
  const Json s = Json::parse(r.out);
  EXPECT_EQ(s["roots"].size(), 4u);
}

TEST(Cli, TowerFileInput) {
  const std::string path =
      write_temp("tower.json", R"({"base": "Q", "levels": [{"modulus": "x^2 - 2"}, {"modulus": "x^2 - 3"}]})");
  KitRun r = run_kit("fixed --tower " + path + " --subgroup 0,1 --json");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["fixed_field"]["degree"], 2);
  EXPECT_EQ(run_kit("fixed --tower " + path + " --subgroup 1,x").status, 2);
}

TEST(Cli, SeedDoesNotChangeOutput) {
  const KitRun a = run_kit("aut \"x^3 - 2\" --json --seed 3");
  const KitRun b = run_kit("aut \"x^3 - 2\" --json --seed 99");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace galois
