#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oacd/exact_geom.hpp"
#include "support.hpp"

using namespace oacd;
using testing::G;
using testing::P;

namespace {

// |p - pi|^2 - |p - pj|^2, the defining form of the bisector up to a positive factor.
Rational d2_diff(const Point2& p, const Point2& pi, const Point2& pj) {
  Rational dxi = p.x - pi.x, dyi = p.y - pi.y, dxj = p.x - pj.x, dyj = p.y - pj.y;
  return dxi * dxi + dyi * dyi - dxj * dxj - dyj * dyj;
}

bool same_line(const Bisector& b, Rational a, Rational bb, Rational c) {
  // proportional with a positive factor
  return b.a * bb == b.b * a && b.a * c == b.c * a && b.b * c == b.c * bb && (b.a * a + b.b * bb) > 0;
}

}  // namespace

TEST_CASE("parse_rational forms") {
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("-3.25") == Rational(-13, 4));
  CHECK(parse_rational("7/4") == Rational(7, 4));
  CHECK(parse_rational(" 6/8 ") == Rational(3, 4));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(to_string(Rational(7, 2)) == "7/2");
}

TEST_CASE("perpendicular bisector examples") {
  Bisector v = perpendicular_bisector(P(0, 0), P(2, 0), 0, 1);
  CHECK(same_line(v, 1, 0, -1));
  CHECK(v.eval(P(0, 0)) < 0);

  Bisector h = perpendicular_bisector(P(0, 0), P(0, 2), 0, 1);
  CHECK(same_line(h, 0, 1, -1));

  Bisector d = perpendicular_bisector(P(0, 0), P(2, 2), 0, 1);
  CHECK(same_line(d, 1, 1, -2));

  CHECK_THROWS_WITH_AS(perpendicular_bisector(P(1, 1), P(1, 1), 0, 1), doctest::Contains("CoincidentPoints"), Error);
}

TEST_CASE("bisector sign agrees with the distance oracle") {
  std::vector<Point2> pts{P(3, -7), P(-5, 2), P(11, 4), P(0, 0), P(-2, -9)};
  std::vector<Point2> probes{P(0, 0), P(1, 1), P(-4, 6), P(7, -3), P(100, -50)};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Bisector b = perpendicular_bisector(pts[i], pts[j], int(i), int(j));
      Point2 mid{(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2};
      CHECK(b.eval(mid) == 0);
      for (const auto& q : probes) CHECK(sign(b.eval(q)) == sign(d2_diff(q, pts[i], pts[j])));
    }
}

TEST_CASE("classify examples") {
  Bisector b = perpendicular_bisector(P(0, 0), P(2, 0), 0, 1);
  CHECK(classify(P(0, 0), b) == Side::CloserToFirst);
  CHECK(classify(P(1, 5), b) == Side::OnBisector);
  CHECK(classify(P(3, 0), b) == Side::CloserToSecond);
}

TEST_CASE("intersect examples") {
  Bisector x1 = perpendicular_bisector(P(0, 0), P(2, 0), 0, 1);
  Bisector y1 = perpendicular_bisector(P(0, 0), P(0, 2), 0, 1);
  Bisector x3 = perpendicular_bisector(P(2, 0), P(4, 0), 0, 1);
  Bisector xy2 = perpendicular_bisector(P(0, 0), P(2, 2), 0, 1);
  Bisector xmy = perpendicular_bisector(P(0, 2), P(2, 0), 0, 1);

  auto p = intersect(x1, y1);
  REQUIRE(p);
  CHECK(*p == P(1, 1));
  CHECK_FALSE(intersect(x1, x3).has_value());
  auto q = intersect(xy2, xmy);
  REQUIRE(q);
  CHECK(*q == P(1, 1));
  Bisector x1b = perpendicular_bisector(P(1, 7), P(1, -7), 2, 3);
  CHECK_FALSE(coincident(x1, x1b));
  Bisector x1c = perpendicular_bisector(P(-1, 3), P(3, 3), 2, 3);
  CHECK(coincident(x1, x1c));
  CHECK_THROWS_AS(intersect(x1, x1c), Error);
}

TEST_CASE("all_bisectors order and index") {
  GeneratorSet g = G({{0, 0}, {5, 1}, {2, 7}, {-3, 4}});
  auto lines = all_bisectors(g);
  REQUIRE(lines.size() == 6);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j, ++k) {
      CHECK(lines[k].i == int(i));
      CHECK(lines[k].j == int(j));
      CHECK(bisector_index(i, j, 4) == k);
    }
}

TEST_CASE("general position: clean triangle") {
  auto r = validate_general_position(G({{0, 0}, {4, 0}, {0, 4}}));
  CHECK(r.clean());
  CHECK(r.parallel_pairs.empty());
}

TEST_CASE("general position: concyclic four") {
  auto r = validate_general_position(G({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  REQUIRE_FALSE(r.clean());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.kind == Violation::Kind::ExcessConcurrency && v.location && *v.location == P(0, 0)) {
      found = true;
      CHECK(v.bisectors.size() == 6);
    }
  CHECK(found);
}

TEST_CASE("general position: collinear three") {
  auto r = validate_general_position(G({{0, 0}, {1, 0}, {2, 0}}));
  REQUIRE_FALSE(r.clean());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.kind == Violation::Kind::ParallelBisectors) {
      found = true;
      CHECK(v.bisectors.size() == 3);
    }
  CHECK(found);
}

TEST_CASE("general position: duplicates and coincident bisectors") {
  auto dup = validate_general_position(G({{0, 0}, {3, 1}, {0, 0}}));
  REQUIRE_FALSE(dup.clean());
  CHECK(dup.violations.front().kind == Violation::Kind::DuplicatePoints);

  // a rectangle: pb(0,1) and pb(3,2) coincide, and all four points are concyclic
  auto rect = validate_general_position(G({{0, 0}, {4, 0}, {4, 2}, {0, 2}}));
  std::set<Violation::Kind> kinds;
  for (const auto& v : rect.violations) kinds.insert(v.kind);
  CHECK(kinds.count(Violation::Kind::CoincidentBisectors) == 1);
}

TEST_CASE("general position: one parallel pair is allowed") {
  // pb(0,1) and pb(2,3) are both vertical, and nothing else is degenerate
  auto r = validate_general_position(G({{0, 0}, {2, 0}, {7, 5}, {13, 5}}));
  CHECK(r.clean());
  CHECK(r.parallel_pairs.size() == 1);
}

TEST_CASE("GeneratorSet needs two points") {
  CHECK_THROWS_AS(G({{0, 0}}), Error);
}
