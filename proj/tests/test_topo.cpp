#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oacd/topo.hpp"
#include "oacd/verify.hpp"
#include "support.hpp"

using namespace oacd;

namespace {

ChromaticCode D(std::vector<int> v) { return ChromaticCode(std::move(v)); }
ChromaticCode C(const char* s) { return parse_code(s); }

bool has(const std::vector<ChromaticCode>& v, const ChromaticCode& c) { return std::find(v.begin(), v.end(), c) != v.end(); }

}  // namespace

TEST_CASE("e2v examples") {
  auto edge = D({0, 7, 10, 2, 4, 7});
  auto v2 = e2v_2I(edge);
  REQUIRE(v2.size() == 2);
  CHECK(has(v2, D({1, 7, 10, 1, 4, 7})));
  CHECK(has(v2, D({0, 7, 10, 3, 3, 7})));
  CHECK(format_code(D({1, 7, 10, 1, 4, 7})) == "17A147");

  auto v3 = e2v_3I(D({4, 6, 9, 0, 2, 9}));
  REQUIRE(v3.size() == 1);
  CHECK(v3[0] == D({4, 8, 8, 0, 2, 8}));
  CHECK(format_code(v3[0]) == "488028");
  CHECK(e2v_3I(C("469029")) == std::vector<ChromaticCode>{C("488028")});

  CHECK(e2v_2I(D({1, 1, 4})).empty());
  CHECK(e2v_3I(D({1, 1, 4})) == std::vector<ChromaticCode>{D({2, 2, 2})});
  CHECK(e2v(D({1, 1, 4})) == std::vector<ChromaticCode>{D({2, 2, 2})});
  CHECK_THROWS_AS(e2v_2I(D({0, 2, 4})), Error);
  CHECK_THROWS_AS(e2v_3I(D({2, 2, 2})), Error);
}

TEST_CASE("c2e and c2v examples") {
  auto es = c2e(D({0, 2, 4}));
  REQUIRE(es.size() == 2);
  CHECK(has(es, D({1, 1, 4})));
  CHECK(has(es, D({0, 3, 3})));
  auto four = c2e(D({0, 4, 6, 2}));
  CHECK(four.size() == 3);
  for (const auto& e : four) CHECK(classify_kind(e) == ParticleKind::Edge);
  CHECK(c2v(D({0, 2, 4})) == std::vector<ChromaticCode>{D({2, 2, 2})});
  CHECK_THROWS_AS(c2e(D({1, 1, 4})), Error);
}

TEST_CASE("v2e returns the unit's edges") {
  auto e3 = v2e(D({2, 2, 2}));
  CHECK(e3.size() == 6);
  for (const auto& e : e3) CHECK(has(e2v(e), D({2, 2, 2})));
  auto e2 = v2e(D({1, 7, 10, 1, 4, 7}));
  CHECK(e2.size() == 4);
  CHECK(has(e2, D({0, 7, 10, 2, 4, 7})));
}

TEST_CASE("vertex-vertex") {
  CHECK(vv_relation(D({2, 2, 2}), D({2, 2, 2})).relation == Relation::Equal);
  CHECK(vv_relation(C("17A147"), C("488028")).relation == Relation::Disjoint);
}

TEST_CASE("vertex-edge") {
  auto v = ve_relation(D({0, 7, 10, 2, 4, 7}), D({1, 7, 10, 1, 4, 7}));
  CHECK(v.relation == Relation::Contains);
  CHECK(v.delta2 == 2);
  auto w = ve_relation(D({1, 1, 4}), D({2, 2, 2}));
  CHECK(w.relation == Relation::Contains);
  CHECK(w.delta2 == 4);
}

TEST_CASE("vertex-edge disjoint in a built n=5 diagram") {
  FullOACD d = FullOACD::build(sample_general_position(5, 11));
  bool seen = false;
  for (const auto& e : d.particles()) {
    if (e.kind != ParticleKind::Edge) continue;
    for (const auto& v : d.particles()) {
      if (v.kind != ParticleKind::Vertex2I && v.kind != ParticleKind::Vertex3I) continue;
      if (chrom_dist(e.code, v.code) > 4) {
        CHECK(ve_relation(e.code, v.code, &d).relation == Relation::Disjoint);
        seen = true;
      }
    }
  }
  CHECK(seen);
}

TEST_CASE("segmented edges") {
  FullOACD d = FullOACD::build(sample_general_position(5, 12));
  const auto& a = d.arrangement();
  std::size_t bounded = 0;
  for (std::size_t e = 0; e < a.edges().size(); ++e) {
    const auto& ed = a.edges()[e];
    if (!ed.bounded()) continue;
    ++bounded;
    const auto& ec = d.particles()[d.particle_of({Dim::Edge, int(e)})].code;
    const auto& v1 = d.particles()[d.particle_of({Dim::Vertex, ed.from})];
    const auto& v2 = d.particles()[d.particle_of({Dim::Vertex, ed.to})];
    auto s = ve_segmented(ec, v1.code, v2.code);
    CHECK(s.segmented);
    CHECK(s.delta2 == segment_signature(v1.kind, v2.kind));
    CHECK(s.signature_ok);
  }
  CHECK(bounded > 0);
  CHECK_FALSE(ve_segmented(D({1, 1, 4}), D({2, 2, 2}), D({2, 2, 2})).segmented);
}

TEST_CASE("vertex-cell") {
  auto v = vc_relation(D({0, 2, 4}), D({2, 2, 2}));
  CHECK(v.relation == Relation::Contains);
  CHECK(v.delta2 == 4);
  CHECK(vc_relation(D({0, 4, 6, 2}), D({4, 4, 4, 0})).relation == Relation::Disjoint);
}

TEST_CASE("edge-edge") {
  CHECK(ee_collinear(D({1, 1, 4}), D({3, 3, 0})));
  CHECK_FALSE(ee_collinear(D({1, 1, 4}), D({0, 3, 3})));
  auto j = ee_joint(D({1, 1, 4}), D({0, 3, 3}));
  CHECK(j.relation == Relation::Joint);
  CHECK(j.delta2 == 4);
  CHECK(j.gamma == 3);
  CHECK(j.evidence == std::vector<ChromaticCode>{D({2, 2, 2})});
  // two rays of one bisector meet at the circumcenter
  auto r = relation(D({1, 1, 4}), D({3, 3, 0}));
  CHECK(r.relation == Relation::Joint);
  CHECK(std::find(r.notes.begin(), r.notes.end(), "collinear") != r.notes.end());
}

TEST_CASE("edges joint at a hidden 3-I vertex") {
  auto a = C("36A038"), b = C("25A058");
  auto v = ee_joint(a, b);
  CHECK(v.relation == Relation::Joint);
  CHECK(v.delta2 == 4);
  CHECK(v.gamma == 3);
  REQUIRE(v.evidence.size() == 1);
  CHECK(format_code(v.evidence[0]) == "44A048");
  CHECK(v.via == ParticleKind::Vertex3I);

  FullOACD d = FullOACD::build(testing::hidden_joint_six());
  CHECK(d.realized(a));
  CHECK(d.realized(b));
  CHECK_FALSE(d.realized(C("44A048")));
  auto w = relation(a, b, &d);
  CHECK(w.relation == Relation::Joint);
  REQUIRE(w.realized.size() == 1);
  CHECK_FALSE(w.realized[0]);
  // the carriers meet elsewhere in the plane, but the two edges share no vertex
  const auto& arr = d.arrangement();
  const auto& ga = d.geom_of(*d.find(a));
  const auto& gb = d.geom_of(*d.find(b));
  auto va = arr.edges()[ga.id], vb = arr.edges()[gb.id];
  for (int x : {va.from, va.to})
    for (int y : {vb.from, vb.to}) CHECK((x < 0 || x != y));
}

TEST_CASE("edge-cell") {
  auto c = D({0, 2, 4});
  auto a = ec_relation(c, D({1, 1, 4}));
  CHECK(a.relation == Relation::Contains);
  CHECK(a.delta2 == 2);
  CHECK(ec_relation(c, D({0, 3, 3})).relation == Relation::Contains);
  auto j = ec_relation(c, D({3, 3, 0}));
  CHECK(j.relation == Relation::Joint);
  CHECK(j.delta2 == 8);
  CHECK(j.evidence == std::vector<ChromaticCode>{D({2, 2, 2})});
  CHECK_THROWS_AS(ec_relation(D({1, 1, 4}), c), Error);
}

TEST_CASE("cell-cell") {
  auto a = cc_relation(D({0, 2, 4}), D({2, 0, 4}));
  CHECK(a.relation == Relation::Connected);
  CHECK(a.evidence == std::vector<ChromaticCode>{D({1, 1, 4})});
  auto j = cc_relation(D({0, 2, 4}), D({4, 2, 0}));
  CHECK(j.relation == Relation::Joint);
  CHECK(j.delta2 == 8);
  CHECK(j.evidence == std::vector<ChromaticCode>{D({2, 2, 2})});
  auto far = cc_relation(D({0, 2, 4, 6}), D({6, 4, 2, 0}));
  CHECK(far.delta2 == 16);
  CHECK(far.relation == Relation::Disjoint);
  CHECK_THROWS_AS(cc_relation(D({0, 2, 4}), D({2, 2, 2})), Error);
}

TEST_CASE("relation dispatch is symmetric in argument order") {
  auto x = relation(D({2, 2, 2}), D({0, 2, 4}));
  auto y = relation(D({0, 2, 4}), D({2, 2, 2}));
  CHECK(x.relation == Relation::Contains);
  CHECK(y.relation == Relation::Contains);
}

TEST_CASE("clusters: connectivity") {
  CHECK(conn({D({0, 2, 4}), D({2, 0, 4})}).connected);
  auto split = conn({D({0, 2, 4}), D({4, 2, 0})});
  CHECK_FALSE(split.connected);
  CHECK(split.components.size() == 2);
  Cluster six;
  std::vector<int> p{0, 2, 4};
  do six.push_back(D(p));
  while (std::next_permutation(p.begin(), p.end()));
  CHECK(conn(six).connected);
  auto path = path_cells(six, 0, 5);
  CHECK(path.size() >= 2);
  CHECK(path.front() == 0);
  CHECK(path.back() == 5);
}

TEST_CASE("clusters: matrices") {
  auto im = imatrix({D({0, 2, 4})});
  CHECK(im.doubled == std::vector<std::vector<int>>{{0}});
  CHECK(cdn(im, [](int d) { return d == 0; }) == 1);

  Cluster six;
  std::vector<int> p{0, 2, 4};
  do six.push_back(D(p));
  while (std::next_permutation(p.begin(), p.end()));
  auto am = amatrix(six);
  for (std::size_t i = 0; i < 6; ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < 6; ++j) deg += am[i][j];
    CHECK(deg == 2);
    CHECK(am[i][i] == 0);
  }
  auto rm = rmatrix(six);
  for (const auto& row : rm)
    for (int v : row) CHECK(v == 1);
  // rM = aM + aM^2 + ... has a zero diagonal for an isolated cell
  auto r1 = rmatrix({D({0, 2, 4})});
  CHECK(r1 == BoolMatrix{{0}});
  CHECK(conn({D({0, 2, 4})}).connected);
}

TEST_CASE("clusters: relations") {
  Cluster a{D({0, 2, 4}), D({2, 0, 4})};
  Cluster b{D({2, 0, 4})};
  CHECK(cscs_relation(a, a).relation == Relation::Equal);
  auto c = cscs_relation(a, b);
  CHECK(c.relation == Relation::Contains);
  CHECK_FALSE(c.converse);
  CHECK(cscs_relation(b, a).converse);
  auto t = cscs_relation({D({0, 2, 4})}, {D({2, 0, 4})});
  CHECK(t.relation == Relation::Touch);
  CHECK(cscs_relation_cdn({D({0, 2, 4})}, {D({2, 0, 4})}, CdnReading::Cross).relation == Relation::Touch);
  auto o = cscs_relation({D({0, 2, 4}), D({2, 0, 4})}, {D({2, 0, 4}), D({2, 4, 0})});
  CHECK(o.relation == Relation::Overlaps);
  auto j = cscs_relation({D({0, 2, 4})}, {D({4, 2, 0})});
  CHECK(j.relation == Relation::Joint);
  CHECK_THROWS_AS(cscs_relation({}, a), Error);
}

TEST_CASE("cdn readings agree on simple cases") {
  Cluster a{D({0, 2, 4}), D({2, 0, 4})};
  Cluster b{D({2, 0, 4}), D({2, 4, 0})};
  CHECK(cdn_shared(a, b, CdnReading::Cross) == 1);
  CHECK(cdn_shared(a, b, CdnReading::Union) == 1);
  CHECK(cdn_shared(a, a, CdnReading::Cross) == 2);
  CHECK(cdn_shared(a, a, CdnReading::Union) == 2);
}
