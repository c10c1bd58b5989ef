#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oacd/error.hpp"

namespace oacd {

// GMP rationals are kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

// Accepts "12", "-3.25", "7/4". Throws BadInput otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);
int sign(const Rational& r);

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

// Lexicographic (x, then y).
struct Point2Less {
  bool operator()(const Point2& a, const Point2& b) const {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

std::string to_string(const Point2& p);

// Ordered generators, indexed 0..n-1. Needs n >= 2; distinctness is
// reported by validate_general_position and enforced when building.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<Point2> points);

  std::size_t size() const { return points_.size(); }
  const Point2& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point2>& points() const { return points_; }

 private:
  std::vector<Point2> points_;
};

// a*x + b*y + c = 0 with integer coefficients, content removed,
// oriented so that the form is negative at p_i.
struct Bisector {
  int i = 0;
  int j = 0;
  Rational a;
  Rational b;
  Rational c;

  Rational eval(const Point2& p) const { return a * p.x + b * p.y + c; }
  // (-b, a): the negative side (closer to p_i) lies to its left.
  Point2 direction() const { return Point2{-b, a}; }
};

enum class Side { CloserToFirst, CloserToSecond, OnBisector };

Bisector perpendicular_bisector(const Point2& pi, const Point2& pj, int i, int j);
Side classify(const Point2& p, const Bisector& b);

bool parallel(const Bisector& b1, const Bisector& b2);
bool coincident(const Bisector& b1, const Bisector& b2);

// Empty for parallel lines; throws CoincidentLines for identical ones.
std::optional<Point2> intersect(const Bisector& b1, const Bisector& b2);

// pb(i,j) for all i<j in lexicographic pair order: (0,1),(0,2),...,(n-2,n-1).
std::vector<Bisector> all_bisectors(const GeneratorSet& g);
std::size_t bisector_index(std::size_t i, std::size_t j, std::size_t n);

struct Violation {
  enum class Kind { DuplicatePoints, ParallelBisectors, ExcessConcurrency, CoincidentBisectors };
  Kind kind;
  std::vector<int> generators;
  std::vector<std::pair<int, int>> bisectors;
  std::optional<Point2> location;

  std::string describe() const;
};

std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  // Exactly-two parallel families; allowed, listed for information.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> parallel_pairs;

  bool clean() const { return violations.empty(); }
  std::string describe() const;
};

ValidationReport validate_general_position(const GeneratorSet& g);

}  // namespace oacd
