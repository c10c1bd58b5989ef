#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oacd/chroma.hpp"
#include "oacd/diagram.hpp"

namespace oacd {

enum class Relation { Equal, Contains, Segmented, Joint, Connected, Collinear, Disjoint, Touch, Overlaps };
std::string_view to_string(Relation r);

struct RelationVerdict {
  Relation relation = Relation::Disjoint;
  std::optional<ParticleKind> via;          // kind of the shared boundary particle
  std::vector<ChromaticCode> evidence;      // candidate shared-boundary codes
  std::vector<bool> realized;               // filled when a diagram is supplied
  bool converse = false;                    // cluster containment read right-to-left
  int delta2 = 0;                           // doubled chromatic distance, when defined
  int gamma = 0;
  std::vector<std::string> notes;           // route or rule-system discrepancies
};

// Code-level procedures.
std::vector<ChromaticCode> e2v_2I(const ChromaticCode& edge);
std::vector<ChromaticCode> e2v_3I(const ChromaticCode& edge);
std::vector<ChromaticCode> e2v(const ChromaticCode& edge);  // sorted union
std::vector<ChromaticCode> c2e(const ChromaticCode& cell);  // n-1 codes, by z
std::vector<ChromaticCode> c2v(const ChromaticCode& cell);  // sorted, deduplicated
// Edges of a vertex's unit, read off its code (4 or 6 codes, sorted).
std::vector<ChromaticCode> v2e(const ChromaticCode& vertex);

// Distance rules in doubled units, shared by the predicates below.
inline bool ve_contains_rule(int delta2) { return delta2 <= 4; }
inline bool vc_contains_rule(int delta2) { return delta2 == 4; }
inline bool ec_contains_rule(int delta2) { return delta2 == 2; }
inline bool ec_joint_rule(int delta2) { return delta2 >= 6 && delta2 <= 8; }
inline bool cc_connected_rule(int delta2) { return delta2 == 4; }
inline bool cc_joint_rule(int delta2) { return delta2 == 8; }
// Kind of the joint vertex implied by (delta, gamma, equi-base), if any.
std::optional<ParticleKind> ee_joint_rule(int delta2, int gamma, bool equi_base);

// Pairwise predicates. A diagram, when given, sets realized flags on evidence.
RelationVerdict vv_relation(const ChromaticCode& p1, const ChromaticCode& p2, const FullOACD* diagram = nullptr);
RelationVerdict ve_relation(const ChromaticCode& edge, const ChromaticCode& vertex, const FullOACD* diagram = nullptr);
RelationVerdict vc_relation(const ChromaticCode& cell, const ChromaticCode& vertex, const FullOACD* diagram = nullptr);
RelationVerdict ee_joint(const ChromaticCode& e1, const ChromaticCode& e2, const FullOACD* diagram = nullptr);
RelationVerdict ec_relation(const ChromaticCode& cell, const ChromaticCode& edge, const FullOACD* diagram = nullptr);
RelationVerdict cc_relation(const ChromaticCode& c1, const ChromaticCode& c2, const FullOACD* diagram = nullptr);
bool ee_collinear(const ChromaticCode& e1, const ChromaticCode& e2);

struct Segmentation {
  bool segmented = false;
  int delta2 = 0;
  std::optional<int> expected_delta2;  // signature for the kind pair
  bool signature_ok = true;
  explicit operator bool() const { return segmented; }
};
Segmentation ve_segmented(const ChromaticCode& edge, const ChromaticCode& v1, const ChromaticCode& v2);
// Doubled distance signature of the two ends of an edge: 2I-2I 4, 2I-3I 6, 3I-3I 8.
int segment_signature(ParticleKind a, ParticleKind b);

// Dispatch on the kinds of the two codes; the order of arguments does not matter.
RelationVerdict relation(const ChromaticCode& a, const ChromaticCode& b, const FullOACD* diagram = nullptr);

using Cluster = std::vector<ChromaticCode>;

struct Connectivity {
  bool connected = false;
  std::vector<std::vector<int>> components;  // member indices
  std::vector<std::pair<int, int>> links;    // member pairs at delta 2 (doubled 4)
};
Connectivity conn(const Cluster& xi);
// Member path from a to b through delta-2 links, empty when unreachable.
std::vector<int> path_cells(const Cluster& xi, int a, int b);

struct DistanceMatrix {
  std::vector<ChromaticCode> rows, cols;
  std::vector<std::vector<int>> doubled;
};
using BoolMatrix = std::vector<std::vector<int>>;

DistanceMatrix dmatrix(const std::vector<ChromaticCode>& t1, const std::vector<ChromaticCode>& t2);
DistanceMatrix imatrix(const std::vector<ChromaticCode>& t);
BoolMatrix amatrix(const Cluster& xi);
BoolMatrix rmatrix(const Cluster& xi);  // Warshall closure of amatrix

// Condition receives the doubled distance.
int cdn(const DistanceMatrix& dm, const std::function<bool(int)>& condition);

// How the half factor in the equality/containment counting rules is read:
// Union halves the off-diagonal zeros of dM over the concatenated clusters,
// Cross counts zeros of dM(xi1, xi2) with no factor.
enum class CdnReading { Union, Cross };
std::string_view to_string(CdnReading r);
int cdn_shared(const Cluster& xi1, const Cluster& xi2, CdnReading reading);

// Set-operation rules first, cdn rules as a cross-check reported in notes.
RelationVerdict cscs_relation(const Cluster& xi1, const Cluster& xi2, CdnReading reading = CdnReading::Cross);
// Relation from the cdn rules alone.
RelationVerdict cscs_relation_cdn(const Cluster& xi1, const Cluster& xi2, CdnReading reading);
RelationVerdict cscs_relation_sets(const Cluster& xi1, const Cluster& xi2);

}  // namespace oacd
