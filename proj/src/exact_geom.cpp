#include "oacd/exact_geom.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace oacd {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Primitive integer triple with the same sign as the input (positive scale).
void make_primitive(Rational& a, Rational& b, Rational& c) {
  mpz_class den = 1;
  for (const Rational* r : {&a, &b, &c}) den = lcm(den, r->get_den());
  mpz_class na = a.get_num() * (den / a.get_den());
  mpz_class nb = b.get_num() * (den / b.get_den());
  mpz_class nc = c.get_num() * (den / c.get_den());
  mpz_class g = gcd(gcd(na, nb), nc);
  if (g == 0) g = 1;
  a = Rational(na / g);
  b = Rational(nb / g);
  c = Rational(nc / g);
}

struct DirKey {
  mpz_class a, b;
  bool operator<(const DirKey& o) const {
    int c = cmp(a, o.a);
    if (c != 0) return c < 0;
    return cmp(b, o.b) < 0;
  }
};

DirKey direction_key(const Bisector& l) {
  mpz_class a = l.a.get_num(), b = l.b.get_num();
  mpz_class g = gcd(a, b);
  a /= g;
  b /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw Error(ErrorCode::BadInput, "empty number");
  std::string body = s;
  bool neg = false;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  Rational r;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    std::string p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw Error(ErrorCode::BadInput, "bad rational '" + s + "'");
    mpz_class qz(q);
    if (qz == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + s + "'");
    r = Rational(mpz_class(p), qz);
    r.canonicalize();
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw Error(ErrorCode::BadInput, "bad decimal '" + s + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorCode::BadInput, "bad decimal '" + s + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class num(ip.empty() ? std::string("0") : ip);
    num = num * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp));
    r = Rational(num, scale);
    r.canonicalize();
  } else {
    if (!all_digits(body)) throw Error(ErrorCode::BadInput, "bad integer '" + s + "'");
    r = Rational(mpz_class(body));
  }
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

int sign(const Rational& r) { return sgn(r); }

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

GeneratorSet::GeneratorSet(std::vector<Point2> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw Error(ErrorCode::BadInput, "need at least 2 generators");
}

Bisector perpendicular_bisector(const Point2& pi, const Point2& pj, int i, int j) {
  if (pi == pj) throw Error(ErrorCode::CoincidentPoints, "p" + std::to_string(i) + " = p" + std::to_string(j));
  Bisector b;
  b.i = i;
  b.j = j;
  b.a = 2 * (pj.x - pi.x);
  b.b = 2 * (pj.y - pi.y);
  b.c = (pi.x * pi.x + pi.y * pi.y) - (pj.x * pj.x + pj.y * pj.y);
  make_primitive(b.a, b.b, b.c);
  return b;
}

Side classify(const Point2& p, const Bisector& b) {
  int s = sgn(b.eval(p));
  if (s < 0) return Side::CloserToFirst;
  if (s > 0) return Side::CloserToSecond;
  return Side::OnBisector;
}

bool parallel(const Bisector& b1, const Bisector& b2) { return b1.a * b2.b == b2.a * b1.b; }

bool coincident(const Bisector& b1, const Bisector& b2) {
  return parallel(b1, b2) && b1.a * b2.c == b2.a * b1.c && b1.b * b2.c == b2.b * b1.c;
}

std::optional<Point2> intersect(const Bisector& b1, const Bisector& b2) {
  Rational det = b1.a * b2.b - b2.a * b1.b;
  if (det == 0) {
    if (coincident(b1, b2)) throw Error(ErrorCode::CoincidentLines, "pb(" + std::to_string(b1.i) + "," + std::to_string(b1.j) + ") = pb(" + std::to_string(b2.i) + "," + std::to_string(b2.j) + ")");
    return std::nullopt;
  }
  Point2 p;
  p.x = (b1.b * b2.c - b2.b * b1.c) / det;
  p.y = (b2.a * b1.c - b1.a * b2.c) / det;
  return p;
}

std::vector<Bisector> all_bisectors(const GeneratorSet& g) {
  std::vector<Bisector> out;
  int n = static_cast<int>(g.size());
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(perpendicular_bisector(g[i], g[j], i, j));
  return out;
}

std::size_t bisector_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::DuplicatePoints: return "duplicate points";
    case Violation::Kind::ParallelBisectors: return "three or more parallel bisectors";
    case Violation::Kind::ExcessConcurrency: return "excess concurrency";
    case Violation::Kind::CoincidentBisectors: return "coincident bisectors";
  }
  return "?";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind) << ": generators {";
  for (std::size_t k = 0; k < generators.size(); ++k) os << (k ? "," : "") << generators[k];
  os << "}";
  if (!bisectors.empty()) {
    os << " bisectors";
    for (auto [i, j] : bisectors) os << " pb(" << i << "," << j << ")";
  }
  if (location) os << " at " << to_string(*location);
  return os.str();
}

std::string ValidationReport::describe() const {
  if (clean()) return "general position";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) os << (k ? "\n" : "") << violations[k].describe();
  return os.str();
}

ValidationReport validate_general_position(const GeneratorSet& g) {
  ValidationReport rep;
  int n = static_cast<int>(g.size());

  std::vector<bool> dup_with_earlier(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g[i] == g[j]) {
        rep.violations.push_back({Violation::Kind::DuplicatePoints, {i, j}, {}, g[i]});
        dup_with_earlier[j] = true;
      }

  // Bisectors over the distinct points only.
  std::vector<Bisector> lines;
  for (int i = 0; i < n; ++i) {
    if (dup_with_earlier[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (dup_with_earlier[j] || g[i] == g[j]) continue;
      lines.push_back(perpendicular_bisector(g[i], g[j], i, j));
    }
  }

  auto gens_of = [&](const std::vector<std::size_t>& ids) {
    std::set<int> s;
    for (auto id : ids) {
      s.insert(lines[id].i);
      s.insert(lines[id].j);
    }
    return std::vector<int>(s.begin(), s.end());
  };
  auto pairs_of = [&](const std::vector<std::size_t>& ids) {
    std::vector<std::pair<int, int>> v;
    for (auto id : ids) v.emplace_back(lines[id].i, lines[id].j);
    return v;
  };

  std::map<DirKey, std::vector<std::size_t>> families;
  for (std::size_t k = 0; k < lines.size(); ++k) families[direction_key(lines[k])].push_back(k);
  for (auto& [key, ids] : families) {
    if (ids.size() >= 3) {
      rep.violations.push_back({Violation::Kind::ParallelBisectors, gens_of(ids), pairs_of(ids), std::nullopt});
    } else if (ids.size() == 2 && !coincident(lines[ids[0]], lines[ids[1]])) {
      rep.parallel_pairs.push_back({{lines[ids[0]].i, lines[ids[0]].j}, {lines[ids[1]].i, lines[ids[1]].j}});
    }
    for (std::size_t x = 0; x < ids.size(); ++x)
      for (std::size_t y = x + 1; y < ids.size(); ++y)
        if (coincident(lines[ids[x]], lines[ids[y]])) {
          std::vector<std::size_t> pair{ids[x], ids[y]};
          rep.violations.push_back({Violation::Kind::CoincidentBisectors, gens_of(pair), pairs_of(pair), std::nullopt});
        }
  }

  std::map<Point2, std::set<std::size_t>, Point2Less> hits;
  for (std::size_t x = 0; x < lines.size(); ++x)
    for (std::size_t y = x + 1; y < lines.size(); ++y) {
      if (parallel(lines[x], lines[y])) continue;
      auto p = intersect(lines[x], lines[y]);
      auto& s = hits[*p];
      s.insert(x);
      s.insert(y);
    }
  for (auto& [p, s] : hits) {
    std::vector<std::size_t> ids(s.begin(), s.end());
    std::vector<int> gens = gens_of(ids);
    bool ok = (ids.size() == 2 && gens.size() == 4) || (ids.size() == 3 && gens.size() == 3);
    if (!ok) rep.violations.push_back({Violation::Kind::ExcessConcurrency, gens, pairs_of(ids), p});
  }
  return rep;
}

}  // namespace oacd
