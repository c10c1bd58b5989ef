#include "oacd/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oacd {

namespace {

Sign sign_of(const Rational& r) {
  int s = sgn(r);
  return s < 0 ? Sign::Neg : (s > 0 ? Sign::Pos : Sign::Zero);
}

Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
Point2 left_normal(const Point2& d) { return Point2{-d.y, d.x}; }
Point2 negate(const Point2& d) { return Point2{-d.x, -d.y}; }

int half_plane(const Point2& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; }

// Counterclockwise angular order starting from the positive x-axis.
bool angle_less(const Point2& a, const Point2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

Point2 primitive_direction(const Bisector& l) {
  mpz_class a = l.a.get_num(), b = l.b.get_num();
  mpz_class g = gcd(a, b);
  return Point2{Rational(-b / g), Rational(a / g)};
}

}  // namespace

DegenerateInputError::DegenerateInputError(ValidationReport report)
    : Error(ErrorCode::DegenerateInput, report.describe()), report_(std::move(report)) {}

const SignVector& Arrangement::label(GeomRef ref) const {
  switch (ref.dim) {
    case Dim::Face: return face_sv_.at(ref.id);
    case Dim::Edge: return edge_sv_.at(ref.id);
    case Dim::Vertex: return vertex_sv_.at(ref.id);
  }
  throw std::logic_error("bad GeomRef");
}

const Point2& Arrangement::rep_point(GeomRef ref) const {
  switch (ref.dim) {
    case Dim::Face: return face_pt_.at(ref.id);
    case Dim::Edge: return edge_pt_.at(ref.id);
    case Dim::Vertex: return vertices_.at(ref.id).location;
  }
  throw std::logic_error("bad GeomRef");
}

std::array<int, 2> Arrangement::faces_of_edge(int e) const { return {half_[2 * e].face, half_[2 * e + 1].face}; }

std::vector<int> Arrangement::face_cycle(int f) const {
  std::vector<int> out;
  int h = faces_[f].first;
  do {
    out.push_back(h);
    h = half_[h].next;
  } while (h != faces_[f].first);
  return out;
}

std::vector<int> Arrangement::face_edges(int f) const {
  std::vector<int> out;
  for (int h : face_cycle(f)) out.push_back(half_[h].edge);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> Arrangement::face_vertices(int f) const {
  std::vector<int> out;
  for (int h : face_cycle(f))
    if (half_[h].origin >= 0) out.push_back(half_[h].origin);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> Arrangement::vertex_edges(int v) const {
  std::vector<int> out;
  for (int h : vertices_[v].outgoing) out.push_back(half_[h].edge);
  return out;
}

std::vector<int> Arrangement::vertex_faces(int v) const {
  std::vector<int> out;
  for (int h : vertices_[v].outgoing) out.push_back(half_[h].face);
  return out;
}

SignVector classify_point(const std::vector<Bisector>& lines, const Point2& p) {
  SignVector sv(lines.size());
  for (std::size_t k = 0; k < lines.size(); ++k) sv[k] = sign_of(lines[k].eval(p));
  return sv;
}

SignVector sign_vector(const Arrangement& arr, GeomRef ref) { return classify_point(arr.bisectors(), arr.rep_point(ref)); }

Point2 representative_point(const Arrangement& arr, GeomRef ref) { return arr.rep_point(ref); }

Arrangement build_arrangement(const GeneratorSet& g) {
  ValidationReport rep = validate_general_position(g);
  if (!rep.clean()) throw DegenerateInputError(std::move(rep));

  Arrangement arr;
  arr.gens_ = g;
  arr.lines_ = all_bisectors(g);
  const auto& lines = arr.lines_;
  const int k = static_cast<int>(lines.size());

  // Vertices: every pairwise intersection, merged by exact equality.
  std::map<Point2, std::set<int>, Point2Less> hits;
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      auto p = intersect(lines[x], lines[y]);
      if (!p) continue;
      auto& s = hits[*p];
      s.insert(x);
      s.insert(y);
    }
  std::vector<std::vector<int>> on_line(k);
  for (auto& [p, s] : hits) {
    ArrVertex v;
    v.location = p;
    v.zero_set.assign(s.begin(), s.end());
    std::set<int> gens;
    for (int l : v.zero_set) {
      gens.insert(lines[l].i);
      gens.insert(lines[l].j);
    }
    if (v.zero_set.size() == 2 && gens.size() == 4) {
      v.kind = VertexKind::TwoI;
    } else if (v.zero_set.size() == 3 && gens.size() == 3) {
      v.kind = VertexKind::ThreeI;
    } else {
      throw Error(ErrorCode::DegenerateInput, "unsanctioned concurrency at " + to_string(p));
    }
    int id = static_cast<int>(arr.vertices_.size());
    for (int l : v.zero_set) on_line[l].push_back(id);
    arr.vertices_.push_back(std::move(v));
  }

  // Edges: maximal vertex-free pieces of each line, in line order.
  std::vector<Point2> dirs(k);
  for (int l = 0; l < k; ++l) {
    dirs[l] = primitive_direction(lines[l]);
    auto& vs = on_line[l];
    std::vector<Rational> t(arr.vertices_.size());
    for (int v : vs) t[v] = dot(arr.vertices_[v].location, dirs[l]);
    std::sort(vs.begin(), vs.end(), [&](int a, int b) { return t[a] < t[b]; });
    int prev = -1;
    for (int v : vs) {
      arr.edges_.push_back(ArrEdge{l, prev, v});
      prev = v;
    }
    arr.edges_.push_back(ArrEdge{l, prev, -1});
  }

  const int ne = static_cast<int>(arr.edges_.size());
  arr.half_.resize(2 * ne);
  for (int e = 0; e < ne; ++e) {
    const auto& ed = arr.edges_[e];
    HalfEdge& f = arr.half_[2 * e];
    HalfEdge& b = arr.half_[2 * e + 1];
    f.edge = b.edge = e;
    f.origin = ed.from;
    f.target = ed.to;
    b.origin = ed.to;
    b.target = ed.from;
    f.twin = 2 * e + 1;
    b.twin = 2 * e;
    f.dir = dirs[ed.carrier];
    b.dir = negate(dirs[ed.carrier]);
    if (f.origin >= 0) arr.vertices_[f.origin].outgoing.push_back(2 * e);
    if (b.origin >= 0) arr.vertices_[b.origin].outgoing.push_back(2 * e + 1);
  }

  std::vector<int> pos_at_origin(2 * ne, -1);
  for (auto& v : arr.vertices_) {
    std::sort(v.outgoing.begin(), v.outgoing.end(),
              [&](int a, int b) { return angle_less(arr.half_[a].dir, arr.half_[b].dir); });
    for (std::size_t i = 0; i < v.outgoing.size(); ++i) pos_at_origin[v.outgoing[i]] = static_cast<int>(i);
  }

  // Finite targets: turn to the clockwise neighbour of the twin.
  std::vector<int> outward;
  for (int h = 0; h < 2 * ne; ++h) {
    HalfEdge& he = arr.half_[h];
    if (he.target >= 0) {
      const auto& out = arr.vertices_[he.target].outgoing;
      int d = static_cast<int>(out.size());
      he.next = out[(pos_at_origin[he.twin] - 1 + d) % d];
    } else {
      outward.push_back(h);
    }
  }
  // Targets at infinity: continue counterclockwise to the next incoming ray.
  if (k == 1) {
    arr.half_[0].next = 0;
    arr.half_[1].next = 1;
  } else {
    std::vector<Rational> offset(2 * ne);
    for (int h : outward) offset[h] = dot(left_normal(arr.half_[h].dir), arr.vertices_[arr.half_[h].origin].location);
    std::sort(outward.begin(), outward.end(), [&](int a, int b) {
      const Point2& da = arr.half_[a].dir;
      const Point2& db = arr.half_[b].dir;
      if (angle_less(da, db)) return true;
      if (angle_less(db, da)) return false;
      return offset[a] < offset[b];
    });
    for (std::size_t r = 0; r < outward.size(); ++r) {
      int nxt = outward[(r + 1) % outward.size()];
      arr.half_[outward[r]].next = arr.half_[nxt].twin;
    }
  }

  for (int h = 0; h < 2 * ne; ++h) {
    if (arr.half_[h].face >= 0) continue;
    ArrFace f;
    f.first = h;
    f.bounded = true;
    int id = static_cast<int>(arr.faces_.size());
    int cur = h;
    do {
      arr.half_[cur].face = id;
      if (arr.half_[cur].origin < 0 || arr.half_[cur].target < 0) f.bounded = false;
      cur = arr.half_[cur].next;
    } while (cur != h);
    arr.faces_.push_back(f);
  }

  // Representative points of edges.
  arr.edge_pt_.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const auto& ed = arr.edges_[e];
    const Point2& d = dirs[ed.carrier];
    if (ed.bounded()) {
      const Point2& a = arr.vertices_[ed.from].location;
      const Point2& b = arr.vertices_[ed.to].location;
      arr.edge_pt_[e] = Point2{(a.x + b.x) / 2, (a.y + b.y) / 2};
    } else if (ed.from >= 0) {
      const Point2& a = arr.vertices_[ed.from].location;
      arr.edge_pt_[e] = Point2{a.x + d.x, a.y + d.y};
    } else if (ed.to >= 0) {
      const Point2& b = arr.vertices_[ed.to].location;
      arr.edge_pt_[e] = Point2{b.x - d.x, b.y - d.y};
    } else {
      const Point2& p = g[lines[ed.carrier].i];
      const Point2& q = g[lines[ed.carrier].j];
      arr.edge_pt_[e] = Point2{(p.x + q.x) / 2, (p.y + q.y) / 2};
    }
  }

  // Face labels: classify one seed, then flip the carrier sign across each edge.
  const int nf = static_cast<int>(arr.faces_.size());
  arr.face_sv_.assign(nf, SignVector{});
  {
    int h0 = arr.faces_[0].first;
    SignVector seed = classify_point(lines, arr.edge_pt_[arr.half_[h0].edge]);
    int carrier = arr.edges_[arr.half_[h0].edge].carrier;
    seed[carrier] = (h0 % 2 == 0) ? Sign::Neg : Sign::Pos;
    arr.face_sv_[0] = std::move(seed);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int h : arr.face_cycle(f)) {
        int other = arr.half_[arr.half_[h].twin].face;
        if (!arr.face_sv_[other].empty()) continue;
        SignVector sv = arr.face_sv_[f];
        int l = arr.edges_[arr.half_[h].edge].carrier;
        sv[l] = sv[l] == Sign::Neg ? Sign::Pos : Sign::Neg;
        arr.face_sv_[other] = std::move(sv);
        queue.push_back(other);
      }
    }
  }
  arr.edge_sv_.resize(ne);
  for (int e = 0; e < ne; ++e) {
    arr.edge_sv_[e] = arr.face_sv_[arr.half_[2 * e].face];
    arr.edge_sv_[e][arr.edges_[e].carrier] = Sign::Zero;
  }
  arr.vertex_sv_.resize(arr.vertices_.size());
  for (std::size_t v = 0; v < arr.vertices_.size(); ++v) {
    arr.vertex_sv_[v] = arr.face_sv_[arr.half_[arr.vertices_[v].outgoing.front()].face];
    for (int l : arr.vertices_[v].zero_set) arr.vertex_sv_[v][l] = Sign::Zero;
  }

  // Face points: push the first boundary edge's point into the face by eps,
  // eps halved below the exact clearance to every other line.
  arr.face_pt_.resize(nf);
  for (int f = 0; f < nf; ++f) {
    int h = arr.faces_[f].first;
    const HalfEdge& he = arr.half_[h];
    int carrier = arr.edges_[he.edge].carrier;
    const Point2& m = arr.edge_pt_[he.edge];
    Point2 v = left_normal(he.dir);
    bool have_bound = false;
    Rational bound;
    for (int l = 0; l < k; ++l) {
      if (l == carrier) continue;
      Rational gm = lines[l].eval(m);
      Rational gv = lines[l].a * v.x + lines[l].b * v.y;
      if (sgn(gm) * sgn(gv) < 0) {
        Rational b = -gm / gv;
        if (!have_bound || b < bound) bound = b;
        have_bound = true;
      }
    }
    Rational eps = 1;
    while (have_bound && eps >= bound) eps /= 2;
    arr.face_pt_[f] = Point2{m.x + eps * v.x, m.y + eps * v.y};
  }
  return arr;
}

std::vector<Unit> enumerate_units(const Arrangement& arr) {
  std::vector<Unit> out;
  const auto& vs = arr.vertices();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    Unit u;
    u.vertex = static_cast<int>(v);
    u.kind = vs[v].kind;
    std::size_t want = u.kind == VertexKind::TwoI ? 4 : 6;
    if (vs[v].outgoing.size() != want)
      throw Error(ErrorCode::MalformedUnit, "vertex " + std::to_string(v) + " has degree " + std::to_string(vs[v].outgoing.size()));
    u.edges = arr.vertex_edges(static_cast<int>(v));
    u.faces = arr.vertex_faces(static_cast<int>(v));
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace oacd
