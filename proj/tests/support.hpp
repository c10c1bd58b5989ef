#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "oacd/diagram.hpp"
#include "oacd/exact_geom.hpp"

namespace testing {

inline oacd::Point2 P(long x, long y) { return oacd::Point2{oacd::Rational(x), oacd::Rational(y)}; }

inline oacd::GeneratorSet G(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<oacd::Point2> v;
  for (auto [x, y] : pts) v.push_back(P(x, y));
  return oacd::GeneratorSet(v);
}

inline long choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Count formulas evaluated directly.
inline long cells_formula(long n) {
  long k = choose(n, 2);
  return k * (k + 1) / 2 - choose(n, 3) + 1;
}
inline long edges_formula(long n) { return choose(n, 2) * choose(n, 2) - 3 * choose(n, 3); }
inline long v3_formula(long n) { return choose(n, 3); }
inline long v2_formula(long n) { return choose(n, 2) * choose(n - 2, 2) / 2; }

// Relabeled seed-3 sample: edges 36A038 and 25A058 meet at the hidden 3-I code 44A048.
inline oacd::GeneratorSet hidden_joint_six() { return G({{2, -6}, {4, -6}, {8, -14}, {-16, 4}, {2, -12}, {10, -3}}); }

inline oacd::GeneratorSet triangle() { return G({{0, 0}, {4, 0}, {0, 4}}); }

}  // namespace testing
