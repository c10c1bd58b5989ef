#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oacd/arrangement.hpp"
#include "oacd/verify.hpp"
#include "support.hpp"

using namespace oacd;
using testing::G;
using testing::P;

namespace {

// Euler for a line arrangement, counting the point at infinity as a vertex
// joined by every ray: V - E + F = 1 in the plane.
long euler(const Arrangement& a) {
  return long(a.vertices().size()) - long(a.edges().size()) + long(a.faces().size());
}

std::size_t zeros(const SignVector& sv) { return std::count(sv.begin(), sv.end(), Sign::Zero); }

void check_structure(const Arrangement& a) {
  const auto& he = a.half_edges();
  for (std::size_t h = 0; h < he.size(); ++h) {
    CHECK(he[he[h].twin].twin == int(h));
    CHECK(he[he[h].next].face == he[h].face);
    CHECK(he[he[h].next].origin == he[h].target);
  }
  for (std::size_t f = 0; f < a.faces().size(); ++f) {
    GeomRef r{Dim::Face, int(f)};
    CHECK(zeros(a.label(r)) == 0);
    CHECK(sign_vector(a, r) == a.label(r));
  }
  for (std::size_t e = 0; e < a.edges().size(); ++e) {
    GeomRef r{Dim::Edge, int(e)};
    CHECK(zeros(a.label(r)) == 1);
    CHECK(sign_vector(a, r) == a.label(r));
    auto fs = a.faces_of_edge(int(e));
    CHECK(fs[0] != fs[1]);
  }
  for (std::size_t v = 0; v < a.vertices().size(); ++v) {
    GeomRef r{Dim::Vertex, int(v)};
    const auto& vx = a.vertices()[v];
    CHECK(zeros(a.label(r)) == (vx.kind == VertexKind::ThreeI ? 3 : 2));
    CHECK(a.vertex_edges(int(v)).size() == 2 * vx.zero_set.size());
  }
}

}  // namespace

TEST_CASE("n=2 arrangement") {
  Arrangement a = build_arrangement(G({{0, 0}, {2, 0}}));
  CHECK(a.vertices().empty());
  CHECK(a.edges().size() == 1);
  CHECK(a.faces().size() == 2);
  CHECK(a.label({Dim::Edge, 0}) == SignVector{Sign::Zero});
  CHECK(enumerate_units(a).empty());
  // the face around p0 is on the Neg side
  int f0 = a.faces_of_edge(0)[0];
  CHECK(a.label({Dim::Face, f0}) == SignVector{Sign::Neg});
  CHECK(classify_point(a.bisectors(), P(0, 0)) == SignVector{Sign::Neg});
  check_structure(a);
}

TEST_CASE("n=3 triangle arrangement") {
  Arrangement a = build_arrangement(testing::triangle());
  REQUIRE(a.vertices().size() == 1);
  CHECK(a.vertices()[0].kind == VertexKind::ThreeI);
  CHECK(a.vertices()[0].location == P(2, 2));
  CHECK(a.label({Dim::Vertex, 0}) == SignVector(3, Sign::Zero));
  CHECK(representative_point(a, {Dim::Vertex, 0}) == P(2, 2));
  CHECK(a.edges().size() == 6);
  for (const auto& e : a.edges()) CHECK_FALSE(e.bounded());
  CHECK(a.faces().size() == 6);
  for (const auto& f : a.faces()) CHECK_FALSE(f.bounded);
  auto units = enumerate_units(a);
  REQUIRE(units.size() == 1);
  CHECK(units[0].edges.size() == 6);
  CHECK(units[0].faces.size() == 6);
  check_structure(a);
}

TEST_CASE("n=4 arrangement counts and units") {
  Arrangement a = build_arrangement(G({{0, 0}, {10, 1}, {3, 8}, {-4, 5}}));
  REQUIRE(validate_general_position(a.generators()).clean());
  std::size_t v2 = 0, v3 = 0;
  for (const auto& v : a.vertices()) (v.kind == VertexKind::TwoI ? v2 : v3)++;
  CHECK(v3 == 4);
  CHECK(v2 == 3);
  CHECK(a.edges().size() == 24);
  CHECK(a.faces().size() == 18);
  CHECK(euler(a) == 1);
  auto units = enumerate_units(a);
  std::size_t u2 = 0, u3 = 0;
  for (const auto& u : units) {
    (u.kind == VertexKind::TwoI ? u2 : u3)++;
    CHECK(u.edges.size() == (u.kind == VertexKind::TwoI ? 4u : 6u));
    CHECK(u.faces.size() == u.edges.size());
  }
  CHECK(u2 == 3);
  CHECK(u3 == 4);
  check_structure(a);
}

TEST_CASE("bounded edge representative is the midpoint") {
  Arrangement a = build_arrangement(G({{0, 0}, {10, 1}, {3, 8}, {-4, 5}}));
  bool any = false;
  for (std::size_t e = 0; e < a.edges().size(); ++e) {
    const auto& ed = a.edges()[e];
    if (!ed.bounded()) continue;
    any = true;
    const auto& p = a.vertices()[ed.from].location;
    const auto& q = a.vertices()[ed.to].location;
    CHECK(representative_point(a, {Dim::Edge, int(e)}) == Point2{(p.x + q.x) / 2, (p.y + q.y) / 2});
  }
  CHECK(any);
}

TEST_CASE("unit cyclic order alternates edges and faces") {
  Arrangement a = build_arrangement(G({{0, 0}, {10, 1}, {3, 8}, {-4, 5}, {6, -7}}));
  for (const auto& u : enumerate_units(a)) {
    std::size_t m = u.edges.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto fs = a.faces_of_edge(u.edges[i]);
      auto gs = a.faces_of_edge(u.edges[(i + 1) % m]);
      // faces[i] borders edges[i] and edges[i+1]
      CHECK((fs[0] == u.faces[i] || fs[1] == u.faces[i]));
      CHECK((gs[0] == u.faces[i] || gs[1] == u.faces[i]));
    }
  }
}

TEST_CASE("random sets: counts, Euler and labels") {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::uint64_t s = 1; s <= 4; ++s) {
      Arrangement a = build_arrangement(sample_general_position(n, derive_seed(77, n, s)));
      long v2 = 0, v3 = 0;
      for (const auto& v : a.vertices()) (v.kind == VertexKind::TwoI ? v2 : v3)++;
      CHECK(long(a.faces().size()) == testing::cells_formula(long(n)));
      CHECK(long(a.edges().size()) == testing::edges_formula(long(n)));
      CHECK(v3 == testing::v3_formula(long(n)));
      CHECK(v2 == testing::v2_formula(long(n)));
      CHECK(euler(a) == 1);
      check_structure(a);
    }
}

TEST_CASE("degenerate input is rejected with its report") {
  try {
    build_arrangement(G({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    FAIL("expected DegenerateInputError");
  } catch (const DegenerateInputError& e) {
    CHECK(e.code() == ErrorCode::DegenerateInput);
    CHECK_FALSE(e.report().clean());
  }
}

// Unsettled case: the count formulas assume no parallel bisectors. With one
// parallel pair two lines never meet, so one 2-I vertex is lost. Euler still
// holds; the discrepancy is reported, not asserted.
TEST_CASE("one parallel pair: Euler holds, count drift is reported") {
  GeneratorSet g = G({{0, 0}, {2, 0}, {7, 5}, {13, 5}});
  auto r = validate_general_position(g);
  REQUIRE(r.clean());
  REQUIRE(r.parallel_pairs.size() == 1);
  Arrangement a = build_arrangement(g);
  CHECK(euler(a) == 1);
  check_structure(a);
  long v2 = 0, v3 = 0;
  for (const auto& v : a.vertices()) (v.kind == VertexKind::TwoI ? v2 : v3)++;
  MESSAGE("parallel pair at n=4: faces " << a.faces().size() << " vs " << testing::cells_formula(4) << ", edges "
                                         << a.edges().size() << " vs " << testing::edges_formula(4) << ", 2-I " << v2
                                         << " vs " << testing::v2_formula(4) << ", 3-I " << v3 << " vs "
                                         << testing::v3_formula(4));
  CHECK(v3 == testing::v3_formula(4));
}
