#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "oacd/diagram.hpp"
#include "oacd/topo.hpp"

namespace oacd {

// Code of p from exact squared-distance comparisons alone.
ChromaticCode rank_code_at(const Point2& p, const GeneratorSet& g);
// Face codes read as an inverse distance ranking; nullopt on any tie.
std::optional<ChromaticCode> inverse_rank_code(const Point2& p, const GeneratorSet& g);

enum class Status { Pass, Warn, Fail };
std::string_view to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  bool conjecture = false;  // warns instead of failing
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  std::string detail;
  nlohmann::json counterexample;  // null when none
  double millis = 0;

  void fail(const std::string& what, nlohmann::json payload);
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool hard_failure() const;
  std::size_t warnings() const;
  nlohmann::json to_json(bool timing = false) const;
  std::string to_table(bool timing = false) const;
};

nlohmann::json generators_json(const GeneratorSet& g);

// Closed-form particle counts and the Euler relation.
CheckResult check_counts(const FullOACD& d);
// Kind classification and closed-form bases.
CheckResult check_bases(const FullOACD& d);
CheckResult check_uniqueness(const FullOACD& d);
// Averaging identities on every unit and half-sum on every edge.
CheckResult check_units(const FullOACD& d);
CheckResult check_table1(const FullOACD& d);
// Arrangement codes against the rank oracle at representative points.
CheckResult check_oracle(const FullOACD& d);

struct HiddenJoint {
  std::string pair;  // "edge-edge", "edge-cell", "cell-cell"
  ChromaticCode a, b, candidate;
};

struct CrossValidation {
  std::vector<CheckResult> checks;
  std::vector<HiddenJoint> hidden_joints;
};

CrossValidation cross_validate_topology(const FullOACD& d, std::uint64_t cluster_seed = 1);

struct HiddenParticle {
  ChromaticCode code;
  ParticleKind kind;
  std::string provenance;  // "C2E(<cell>)" or "E2V(<edge>)"
};
std::vector<HiddenParticle> hidden_particles(const FullOACD& d);

// Uniform integer points in [-range, range]^2, redrawn until general position
// holds and no two bisectors are parallel.
GeneratorSet sample_general_position(std::size_t n, std::uint64_t seed, int range = 1000);
std::uint64_t derive_seed(std::uint64_t base, std::size_t n, std::size_t trial);

// Pair relations inside a unit, and the expected distance table.
enum class PairType { VE, VC, EE, EC, CC };
enum class UnitRelation { None, Adjacent, Interval, Opposite };
struct Table1Row {
  PairType pair;
  UnitRelation relation;
  VertexKind unit;
  int delta2;
  int gamma;
  bool equi_base;
};
const std::vector<Table1Row>& table1();
std::string_view to_string(PairType p);
std::string_view to_string(UnitRelation r);
// Relation class of unit positions a, b in the interleaved order (edges even, faces odd).
UnitRelation unit_relation(VertexKind unit, int pos_a, int pos_b);

struct SuiteConfig {
  std::size_t n_min = 3;
  std::size_t n_max = 7;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  std::size_t exhaustive_max_n = 7;  // pairwise scans above this n are skipped
  bool topology = true;
};

VerificationReport run_suite(const SuiteConfig& config);
// All checks on one diagram.
VerificationReport verify_diagram(const FullOACD& d);

}  // namespace oacd
