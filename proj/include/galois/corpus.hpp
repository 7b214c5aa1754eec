#pragma once

// The bundled instance suite: records, loading, and the batch runner used by
// `galois_kit verify-corpus`.

#include <cstdint>
#include <string>
#include <vector>

#include "galois/json_io.hpp"

namespace galois {

struct InstanceRecord {
  std::string name;
  std::string base;          // "Q" or "F<p>"
  std::string construction;  // "splitting", "stem" or "tower"
  std::string polynomial;    // for splitting and stem
  Json levels;               // for tower: [{"name", "modulus"}]
  /// Generator lists of intermediate fields, as element expressions in L.
  std::vector<std::vector<std::string>> intermediate;
  Json expected;             // verdict, group_order, degree, fixed_degree, ...
  std::string provenance;
};

/// A constructed instance: the tower L and generators of L over its base.
struct BuiltInstance {
  ExtensionTower tower;
  std::vector<FieldElement> generators;
};

std::vector<InstanceRecord> parse_corpus(const Json& j);
/// DomainError when the file is unreadable, malformed or empty.
std::vector<InstanceRecord> load_corpus(const std::string& path);
BuiltInstance build_instance(const InstanceRecord& r, std::uint64_t seed);

struct InstanceResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> mismatches;
  Json report;  // deterministic: no timings
};

/// Builds and checks one instance. Errors become mismatches.
InstanceResult run_instance(const InstanceRecord& r, std::uint64_t seed);

struct CorpusSummary {
  std::vector<InstanceResult> results;  // sorted by name
  std::size_t passed = 0;
  std::size_t failed = 0;
};

/// Runs every instance, up to `parallelism` at a time.
CorpusSummary verify_corpus(const std::vector<InstanceRecord>& records, std::size_t parallelism, std::uint64_t seed);
Json summary_to_json(const CorpusSummary& s, std::uint64_t seed);

}  // namespace galois
