#include "oacd/topo.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace oacd {

namespace {

void require_kind(const ChromaticCode& c, ParticleKind want, ErrorCode err) {
  auto k = try_classify_kind(c);
  if (!k || *k != want) throw Error(err, format_code(c));
}

bool is_vertex(ParticleKind k) { return k == ParticleKind::Vertex2I || k == ParticleKind::Vertex3I; }

void sort_unique(std::vector<ChromaticCode>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<ChromaticCode> intersection(std::vector<ChromaticCode> a, std::vector<ChromaticCode> b) {
  sort_unique(a);
  sort_unique(b);
  std::vector<ChromaticCode> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const std::vector<ChromaticCode>& v, const ChromaticCode& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

void mark_realized(RelationVerdict& v, const FullOACD* diagram) {
  v.realized.clear();
  if (!diagram) return;
  for (const auto& c : v.evidence) v.realized.push_back(diagram->realized(c));
}

RelationVerdict base_verdict(const ChromaticCode& a, const ChromaticCode& b) {
  RelationVerdict v;
  v.delta2 = chrom_dist(a, b);
  v.gamma = code_dist(a, b);
  return v;
}

std::string code_list(const std::vector<ChromaticCode>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_code(v[i]);
  return s + "}";
}

void require_cluster(const Cluster& xi) {
  if (xi.empty()) throw Error(ErrorCode::EmptyCluster, "cluster has no cells");
  for (const auto& c : xi) {
    require_kind(c, ParticleKind::Cell, ErrorCode::KindMismatch);
    if (c.size() != xi.front().size()) throw Error(ErrorCode::LengthMismatch, "cluster members differ in length");
  }
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::Contains: return "Contains";
    case Relation::Segmented: return "Segmented";
    case Relation::Joint: return "Joint";
    case Relation::Connected: return "Connected";
    case Relation::Collinear: return "Collinear";
    case Relation::Disjoint: return "Disjoint";
    case Relation::Touch: return "Touch";
    case Relation::Overlaps: return "Overlaps";
  }
  return "?";
}

std::string_view to_string(CdnReading r) { return r == CdnReading::Union ? "union" : "cross"; }

std::vector<ChromaticCode> e2v_2I(const ChromaticCode& edge) {
  require_kind(edge, ParticleKind::Edge, ErrorCode::NotAnEdge);
  const auto& d = edge.doubled();
  std::vector<int> pos_of(2 * d.size() + 2, -1);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] % 2 == 0) pos_of[d[i]] = static_cast<int>(i);
  std::vector<ChromaticCode> out;
  for (std::size_t w2 = 0; w2 + 2 < pos_of.size(); w2 += 2) {
    int a = pos_of[w2], b = pos_of[w2 + 2];
    if (a < 0 || b < 0) continue;
    std::vector<int> v = d;
    v[a] = v[b] = static_cast<int>(w2) + 1;
    out.emplace_back(std::move(v));
  }
  sort_unique(out);
  return out;
}

std::vector<ChromaticCode> e2v_3I(const ChromaticCode& edge) {
  require_kind(edge, ParticleKind::Edge, ErrorCode::NotAnEdge);
  const auto& d = edge.doubled();
  std::vector<std::size_t> halves, ints;
  for (std::size_t i = 0; i < d.size(); ++i) (d[i] % 2 ? halves : ints).push_back(i);
  const int h = d[halves[0]];  // 2z+1
  std::vector<ChromaticCode> out;
  for (std::size_t k : ints) {
    int e = h + d[k] / 2;  // 2z+1+w
    if (e % 3 != 0) continue;
    int m = e / 3;
    bool clash = false;
    for (std::size_t o : ints)
      if (o != k && d[o] == 2 * m) clash = true;
    if (clash) continue;
    std::vector<int> v = d;
    v[halves[0]] = v[halves[1]] = v[k] = 2 * m;
    out.emplace_back(std::move(v));
  }
  sort_unique(out);
  return out;
}

std::vector<ChromaticCode> e2v(const ChromaticCode& edge) {
  auto out = e2v_2I(edge);
  auto three = e2v_3I(edge);
  out.insert(out.end(), three.begin(), three.end());
  sort_unique(out);
  return out;
}

std::vector<ChromaticCode> c2e(const ChromaticCode& cell) {
  require_kind(cell, ParticleKind::Cell, ErrorCode::NotACell);
  const auto& d = cell.doubled();
  std::vector<int> pos_of(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) pos_of[d[i] / 2] = static_cast<int>(i);
  std::vector<ChromaticCode> out;
  for (std::size_t z = 0; z + 1 < d.size(); ++z) {
    std::vector<int> v = d;
    v[pos_of[z]] = v[pos_of[z + 1]] = static_cast<int>(2 * z + 1);
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<ChromaticCode> c2v(const ChromaticCode& cell) {
  std::vector<ChromaticCode> out;
  for (const auto& e : c2e(cell)) {
    auto vs = e2v(e);
    out.insert(out.end(), vs.begin(), vs.end());
  }
  sort_unique(out);
  return out;
}

std::vector<ChromaticCode> v2e(const ChromaticCode& vertex) {
  ParticleKind kind = classify_kind(vertex);
  if (!is_vertex(kind)) throw Error(ErrorCode::KindMismatch, "not a vertex: " + format_code(vertex));
  const auto& d = vertex.doubled();
  std::vector<ChromaticCode> out;
  auto push = [&](std::vector<int> v) {
    try {
      out.emplace_back(std::move(v));
    } catch (const Error&) {
    }
  };
  if (kind == ParticleKind::Vertex2I) {
    std::vector<std::size_t> halves;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] % 2) halves.push_back(i);
    // Pair up the two equal half values.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < halves.size(); ++x)
      for (std::size_t y = x + 1; y < halves.size(); ++y)
        if (d[halves[x]] == d[halves[y]]) pairs.emplace_back(halves[x], halves[y]);
    for (std::size_t p = 0; p < 2; ++p) {
      auto [c1, c2] = pairs[1 - p];
      std::vector<int> v = d;
      v[c1] = d[c1] - 1;
      v[c2] = d[c2] + 1;
      push(v);
      v[c1] = d[c1] + 1;
      v[c2] = d[c2] - 1;
      push(v);
    }
  } else {
    std::vector<std::size_t> pos;
    std::vector<int> count(2 * d.size() + 1, 0);
    for (int x : d) count[x]++;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (count[d[i]] == 3) pos.push_back(i);
    const int m = d[pos[0]];
    for (std::size_t c = 0; c < 3; ++c) {
      std::vector<int> v = d;
      for (std::size_t o = 0; o < 3; ++o) v[pos[o]] = o == c ? m - 2 : m + 1;
      push(v);
      for (std::size_t o = 0; o < 3; ++o) v[pos[o]] = o == c ? m + 2 : m - 1;
      push(v);
    }
  }
  sort_unique(out);
  return out;
}

RelationVerdict vv_relation(const ChromaticCode& p1, const ChromaticCode& p2, const FullOACD* diagram) {
  for (const auto* c : {&p1, &p2}) {
    auto k = try_classify_kind(*c);
    if (!k || !is_vertex(*k)) throw Error(ErrorCode::KindMismatch, "not a vertex: " + format_code(*c));
  }
  RelationVerdict v = base_verdict(p1, p2);
  v.relation = p1 == p2 ? Relation::Equal : Relation::Disjoint;
  mark_realized(v, diagram);
  return v;
}

RelationVerdict ve_relation(const ChromaticCode& edge, const ChromaticCode& vertex, const FullOACD* diagram) {
  require_kind(edge, ParticleKind::Edge, ErrorCode::KindMismatch);
  auto vk = try_classify_kind(vertex);
  if (!vk || !is_vertex(*vk)) throw Error(ErrorCode::KindMismatch, "not a vertex: " + format_code(vertex));
  RelationVerdict v = base_verdict(edge, vertex);
  bool by_delta = ve_contains_rule(v.delta2);
  bool by_e2v = contains(e2v(edge), vertex);
  if (by_delta != by_e2v) v.notes.push_back("delta rule and E2V membership disagree");
  if (by_delta) {
    v.relation = Relation::Contains;
    v.via = *vk;
    v.evidence = {vertex};
  }
  mark_realized(v, diagram);
  return v;
}

Segmentation ve_segmented(const ChromaticCode& edge, const ChromaticCode& v1, const ChromaticCode& v2) {
  Segmentation s;
  s.delta2 = chrom_dist(v1, v2);
  if (v1 == v2) return s;
  auto ends = e2v(edge);
  s.segmented = contains(ends, v1) && contains(ends, v2);
  if (s.segmented) {
    s.expected_delta2 = segment_signature(classify_kind(v1), classify_kind(v2));
    s.signature_ok = s.delta2 == *s.expected_delta2;
  }
  return s;
}

int segment_signature(ParticleKind a, ParticleKind b) {
  int threes = (a == ParticleKind::Vertex3I) + (b == ParticleKind::Vertex3I);
  return 4 + 2 * threes;
}

RelationVerdict vc_relation(const ChromaticCode& cell, const ChromaticCode& vertex, const FullOACD* diagram) {
  require_kind(cell, ParticleKind::Cell, ErrorCode::KindMismatch);
  auto vk = try_classify_kind(vertex);
  if (!vk || !is_vertex(*vk)) throw Error(ErrorCode::KindMismatch, "not a vertex: " + format_code(vertex));
  RelationVerdict v = base_verdict(cell, vertex);
  if (v.delta2 < 4) v.notes.push_back("cell-vertex distance below 2");
  bool by_delta = vc_contains_rule(v.delta2);
  if (by_delta != contains(c2v(cell), vertex)) v.notes.push_back("delta rule and C2V membership disagree");
  if (by_delta) {
    v.relation = Relation::Contains;
    v.via = *vk;
    v.evidence = {vertex};
  }
  mark_realized(v, diagram);
  return v;
}

bool ee_collinear(const ChromaticCode& e1, const ChromaticCode& e2) {
  require_kind(e1, ParticleKind::Edge, ErrorCode::NotAnEdge);
  require_kind(e2, ParticleKind::Edge, ErrorCode::NotAnEdge);
  if (e1.size() != e2.size()) throw Error(ErrorCode::LengthMismatch, "edge lengths differ");
  for (std::size_t i = 0; i < e1.size(); ++i)
    if ((e1[i] % 2) != (e2[i] % 2)) return false;
  return true;
}

std::optional<ParticleKind> ee_joint_rule(int d, int g, bool equi) {
  if (d == 4 && (g == 2 || g == 4)) return ParticleKind::Vertex2I;
  if ((d == 4 && g == 3) || (d == 6 && g == 2) || (d == 8 && g == 3 && !equi)) return ParticleKind::Vertex3I;
  return std::nullopt;
}

RelationVerdict ee_joint(const ChromaticCode& e1, const ChromaticCode& e2, const FullOACD* diagram) {
  require_kind(e1, ParticleKind::Edge, ErrorCode::KindMismatch);
  require_kind(e2, ParticleKind::Edge, ErrorCode::KindMismatch);
  RelationVerdict v = base_verdict(e1, e2);
  if (e1 == e2) {
    v.relation = Relation::Equal;
    return v;
  }
  auto rule = ee_joint_rule(v.delta2, v.gamma, equi_base(e1, e2));
  auto common = intersection(e2v(e1), e2v(e2));
  if (rule) {
    v.relation = Relation::Joint;
    v.via = rule;
    v.evidence = common;
    if (common.size() != 1) v.notes.push_back("joint signature but E2V intersection is " + code_list(common));
    else if (classify_kind(common[0]) != *rule) v.notes.push_back("joint vertex kind differs from signature");
  } else {
    if (!common.empty()) v.notes.push_back("no joint signature but E2V intersection is " + code_list(common));
    v.relation = ee_collinear(e1, e2) ? Relation::Collinear : Relation::Disjoint;
  }
  mark_realized(v, diagram);
  return v;
}

RelationVerdict ec_relation(const ChromaticCode& cell, const ChromaticCode& edge, const FullOACD* diagram) {
  auto ck = try_classify_kind(cell);
  auto ek = try_classify_kind(edge);
  if (!ck || *ck != ParticleKind::Cell || !ek || *ek != ParticleKind::Edge)
    throw Error(ErrorCode::KindMismatch, "expected (cell, edge), got (" + format_code(cell) + ", " + format_code(edge) + ")");
  RelationVerdict v = base_verdict(cell, edge);
  const int d = v.delta2;
  bool in_c2e = contains(c2e(cell), edge);
  if (ec_contains_rule(d) != in_c2e) v.notes.push_back("delta rule and C2E membership disagree");
  if (ec_contains_rule(d)) {
    v.relation = Relation::Contains;
    v.via = ParticleKind::Edge;
    v.evidence = {edge};
  } else {
    auto common = intersection(c2v(cell), e2v(edge));
    bool by_delta = ec_joint_rule(d);
    bool by_sets = !in_c2e && !common.empty();
    if (by_delta != by_sets) v.notes.push_back("delta rule and C2V/E2V rule disagree");
    if (by_delta) {
      v.relation = Relation::Joint;
      v.evidence = common;
      if (common.size() == 1) v.via = classify_kind(common[0]);
    }
  }
  mark_realized(v, diagram);
  return v;
}

RelationVerdict cc_relation(const ChromaticCode& c1, const ChromaticCode& c2, const FullOACD* diagram) {
  require_kind(c1, ParticleKind::Cell, ErrorCode::KindMismatch);
  require_kind(c2, ParticleKind::Cell, ErrorCode::KindMismatch);
  RelationVerdict v = base_verdict(c1, c2);
  if (v.delta2 == 0) {
    v.relation = Relation::Equal;
  } else if (cc_connected_rule(v.delta2)) {
    v.relation = Relation::Connected;
    v.via = ParticleKind::Edge;
    std::vector<ChromaticCode> both{c1, c2};
    auto edge = divide(complex_code(both), 2);
    if (edge) v.evidence = {*edge};
    else v.notes.push_back("half sum is not a particle code");
  } else if (cc_joint_rule(v.delta2)) {
    v.relation = Relation::Joint;
    v.evidence = intersection(c2v(c1), c2v(c2));
    if (v.evidence.size() == 1) v.via = classify_kind(v.evidence[0]);
    else v.notes.push_back("joint distance but C2V intersection is " + code_list(v.evidence));
  }
  mark_realized(v, diagram);
  return v;
}

RelationVerdict relation(const ChromaticCode& a, const ChromaticCode& b, const FullOACD* diagram) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "codes differ in length");
  ParticleKind ka = classify_kind(a), kb = classify_kind(b);
  auto rank = [](ParticleKind k) { return k == ParticleKind::Cell ? 0 : k == ParticleKind::Edge ? 1 : 2; };
  const ChromaticCode* x = &a;
  const ChromaticCode* y = &b;
  if (rank(ka) > rank(kb)) {
    std::swap(x, y);
    std::swap(ka, kb);
  }
  int rx = rank(ka), ry = rank(kb);
  if (rx == 2) return vv_relation(*x, *y, diagram);
  if (rx == 1 && ry == 2) return ve_relation(*x, *y, diagram);
  if (rx == 1) {
    auto v = ee_joint(*x, *y, diagram);
    if (v.relation == Relation::Joint && ee_collinear(*x, *y)) v.notes.push_back("collinear");
    return v;
  }
  if (ry == 2) return vc_relation(*x, *y, diagram);
  if (ry == 1) return ec_relation(*x, *y, diagram);
  return cc_relation(*x, *y, diagram);
}

Connectivity conn(const Cluster& xi) {
  require_cluster(xi);
  const int m = static_cast<int>(xi.size());
  Connectivity out;
  std::vector<std::vector<int>> adj(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (chrom_dist(xi[a], xi[b]) == 4) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        out.links.emplace_back(a, b);
      }
  // Seed cell plus a waiting list, as in the flood description.
  std::vector<bool> seen(m, false);
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> waiting{s};
    seen[s] = true;
    while (!waiting.empty()) {
      int c = waiting.front();
      waiting.pop_front();
      comp.push_back(c);
      for (int nb : adj[c])
        if (!seen[nb]) {
          seen[nb] = true;
          waiting.push_back(nb);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.components.push_back(std::move(comp));
  }
  out.connected = out.components.size() == 1;
  return out;
}

std::vector<int> path_cells(const Cluster& xi, int a, int b) {
  require_cluster(xi);
  const int m = static_cast<int>(xi.size());
  std::vector<int> prev(m, -2);
  std::deque<int> q{a};
  prev[a] = -1;
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    if (c == b) break;
    for (int nb = 0; nb < m; ++nb)
      if (prev[nb] == -2 && chrom_dist(xi[c], xi[nb]) == 4) {
        prev[nb] = c;
        q.push_back(nb);
      }
  }
  if (prev[b] == -2) return {};
  std::vector<int> path;
  for (int c = b; c != -1; c = prev[c]) path.push_back(c);
  std::reverse(path.begin(), path.end());
  return path;
}

DistanceMatrix dmatrix(const std::vector<ChromaticCode>& t1, const std::vector<ChromaticCode>& t2) {
  DistanceMatrix dm{t1, t2, {}};
  dm.doubled.assign(t1.size(), std::vector<int>(t2.size(), 0));
  for (std::size_t i = 0; i < t1.size(); ++i)
    for (std::size_t j = 0; j < t2.size(); ++j) dm.doubled[i][j] = chrom_dist(t1[i], t2[j]);
  return dm;
}

DistanceMatrix imatrix(const std::vector<ChromaticCode>& t) { return dmatrix(t, t); }

BoolMatrix amatrix(const Cluster& xi) {
  require_cluster(xi);
  auto im = imatrix(xi);
  BoolMatrix a(xi.size(), std::vector<int>(xi.size(), 0));
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (std::size_t j = 0; j < xi.size(); ++j) a[i][j] = im.doubled[i][j] == 4 ? 1 : 0;
  return a;
}

BoolMatrix rmatrix(const Cluster& xi) {
  BoolMatrix r = amatrix(xi);
  const std::size_t m = r.size();
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < m; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

int cdn(const DistanceMatrix& dm, const std::function<bool(int)>& condition) {
  int count = 0;
  for (const auto& row : dm.doubled)
    for (int d : row) count += condition(d) ? 1 : 0;
  return count;
}

int cdn_shared(const Cluster& xi1, const Cluster& xi2, CdnReading reading) {
  if (reading == CdnReading::Cross) return cdn(dmatrix(xi1, xi2), [](int d) { return d == 0; });
  Cluster all = xi1;
  all.insert(all.end(), xi2.begin(), xi2.end());
  int zeros = cdn(imatrix(all), [](int d) { return d == 0; });
  return (zeros - static_cast<int>(all.size())) / 2;
}

RelationVerdict cscs_relation_sets(const Cluster& xi1, const Cluster& xi2) {
  require_cluster(xi1);
  require_cluster(xi2);
  RelationVerdict v;
  std::set<ChromaticCode> s1(xi1.begin(), xi1.end()), s2(xi2.begin(), xi2.end());
  std::vector<ChromaticCode> shared;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(shared));
  if (shared.size() == s1.size() && shared.size() == s2.size()) {
    v.relation = Relation::Equal;
  } else if (shared.size() == s2.size()) {
    v.relation = Relation::Contains;
  } else if (shared.size() == s1.size()) {
    v.relation = Relation::Contains;
    v.converse = true;
  } else if (!shared.empty()) {
    v.relation = Relation::Overlaps;
    v.evidence = shared;
  } else {
    std::vector<ChromaticCode> e1, e2, p1, p2;
    for (const auto& c : s1) {
      auto es = c2e(c);
      e1.insert(e1.end(), es.begin(), es.end());
      auto vs = c2v(c);
      p1.insert(p1.end(), vs.begin(), vs.end());
    }
    for (const auto& c : s2) {
      auto es = c2e(c);
      e2.insert(e2.end(), es.begin(), es.end());
      auto vs = c2v(c);
      p2.insert(p2.end(), vs.begin(), vs.end());
    }
    auto edges = intersection(e1, e2);
    if (!edges.empty()) {
      v.relation = Relation::Touch;
      v.via = ParticleKind::Edge;
      v.evidence = edges;
    } else {
      auto verts = intersection(p1, p2);
      if (!verts.empty()) {
        v.relation = Relation::Joint;
        v.evidence = verts;
      } else {
        v.relation = Relation::Disjoint;
      }
    }
  }
  return v;
}

RelationVerdict cscs_relation_cdn(const Cluster& xi1, const Cluster& xi2, CdnReading reading) {
  require_cluster(xi1);
  require_cluster(xi2);
  RelationVerdict v;
  const int n1 = static_cast<int>(xi1.size()), n2 = static_cast<int>(xi2.size());
  const int shared = cdn_shared(xi1, xi2, reading);
  auto dm = dmatrix(xi1, xi2);
  if (shared == n1 && shared == n2) {
    v.relation = Relation::Equal;
  } else if (shared == n2 && n2 < n1) {
    v.relation = Relation::Contains;
  } else if (shared == n1 && n1 < n2) {
    v.relation = Relation::Contains;
    v.converse = true;
  } else if (shared >= 1 && shared < std::min(n1, n2)) {
    v.relation = Relation::Overlaps;
  } else if (cdn(dm, [](int d) { return d == 0; }) == 0 && cdn(dm, [](int d) { return d == 4; }) > 0) {
    v.relation = Relation::Touch;
  } else if (cdn(dm, [](int d) { return d <= 4; }) == 0 && cdn(dm, [](int d) { return d == 8; }) > 0) {
    v.relation = Relation::Joint;
  } else if (cdn(dm, [](int d) { return d <= 8; }) == 0) {
    v.relation = Relation::Disjoint;
  } else {
    v.relation = Relation::Disjoint;
    v.notes.push_back("no cdn rule matched");
  }
  return v;
}

RelationVerdict cscs_relation(const Cluster& xi1, const Cluster& xi2, CdnReading reading) {
  RelationVerdict v = cscs_relation_sets(xi1, xi2);
  RelationVerdict w = cscs_relation_cdn(xi1, xi2, reading);
  if (v.relation != w.relation || v.converse != w.converse)
    v.notes.push_back(std::string("cdn rules (") + std::string(to_string(reading)) + ") give " +
                      std::string(to_string(w.relation)) + (w.converse ? " (converse)" : ""));
  for (auto& n : w.notes) v.notes.push_back(n);
  return v;
}

}  // namespace oacd
