#include "oacd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace oacd {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

json codes_json(std::initializer_list<const ChromaticCode*> cs) {
  json a = json::array();
  for (const auto* c : cs) a.push_back(format_code(*c));
  return a;
}

json payload(const FullOACD& d, const std::string& what, json codes = json::array()) {
  return json{{"what", what}, {"generators", generators_json(d.generators())}, {"codes", std::move(codes)}};
}

std::vector<long> scaled(const ChromaticCode& c, long m) {
  std::vector<long> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = m * c[i];
  return v;
}

std::vector<long> sum_of(const std::vector<const ChromaticCode*>& cs) {
  std::vector<long> v(cs.front()->size(), 0);
  for (const auto* c : cs)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += (*c)[i];
  return v;
}

std::vector<int> intersect_ids(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool has_id(const std::vector<int>& v, int id) { return std::binary_search(v.begin(), v.end(), id); }

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); }
};

CheckResult make(const std::string& name, const FullOACD& d, bool conjecture = false) {
  CheckResult r;
  r.name = name;
  r.n = static_cast<int>(d.n());
  r.instances = 1;
  r.conjecture = conjecture;
  return r;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Warn: return "WARN";
    case Status::Fail: return "FAIL";
  }
  return "?";
}

void CheckResult::fail(const std::string& what, json p) {
  ++violations;
  status = conjecture ? Status::Warn : Status::Fail;
  if (counterexample.is_null()) {
    detail = what;
    counterexample = std::move(p);
  }
}

bool VerificationReport::hard_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; });
}

std::size_t VerificationReport::warnings() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Warn; }));
}

json VerificationReport::to_json(bool timing) const {
  json out;
  out["seed"] = seed;
  std::size_t pass = 0, warn = 0, fail = 0;
  json arr = json::array();
  for (const auto& c : checks) {
    (c.status == Status::Pass ? pass : c.status == Status::Warn ? warn : fail)++;
    json j{{"name", c.name},           {"n", c.n},
           {"status", to_string(c.status)}, {"conjecture", c.conjecture},
           {"instances", c.instances}, {"evaluated", c.evaluated},
           {"violations", c.violations}, {"detail", c.detail},
           {"counterexample", c.counterexample}};
    if (c.seed) j["seed"] = c.seed;
    if (timing) j["millis"] = c.millis;
    arr.push_back(std::move(j));
  }
  out["summary"] = {{"pass", pass}, {"warn", warn}, {"fail", fail}};
  out["checks"] = std::move(arr);
  return out;
}

std::string VerificationReport::to_table(bool timing) const {
  std::ostringstream os;
  os << std::left << std::setw(6) << "stat" << std::setw(34) << "check" << std::setw(4) << "n" << std::right
     << std::setw(6) << "sets" << std::setw(12) << "evaluated" << std::setw(8) << "bad";
  if (timing) os << std::setw(10) << "ms";
  os << "  detail\n";
  for (const auto& c : checks) {
    os << std::left << std::setw(6) << to_string(c.status) << std::setw(34) << c.name << std::setw(4) << c.n << std::right
       << std::setw(6) << c.instances << std::setw(12) << c.evaluated << std::setw(8) << c.violations;
    if (timing) os << std::setw(10) << std::fixed << std::setprecision(1) << c.millis;
    os << "  " << c.detail << "\n";
  }
  os << "seed " << seed << ": " << checks.size() << " checks, " << warnings() << " warnings, "
     << (hard_failure() ? "FAILED" : "ok") << "\n";
  return os.str();
}

json generators_json(const GeneratorSet& g) {
  json a = json::array();
  for (const auto& p : g.points()) a.push_back({to_string(p.x), to_string(p.y)});
  return a;
}

ChromaticCode rank_code_at(const Point2& p, const GeneratorSet& g) {
  const std::size_t n = g.size();
  std::vector<Rational> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational dx = p.x - g[i].x, dy = p.y - g[i].y;
    d2[i] = dx * dx + dy * dy;
  }
  std::vector<int> t(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int c = cmp(d2[i], d2[j]);
      if (c < 0) t[i] += 2;
      else if (c > 0) t[j] += 2;
      else {
        t[i] += 1;
        t[j] += 1;
      }
    }
  return ChromaticCode(std::move(t));
}

std::optional<ChromaticCode> inverse_rank_code(const Point2& p, const GeneratorSet& g) {
  const std::size_t n = g.size();
  std::vector<Rational> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational dx = p.x - g[i].x, dy = p.y - g[i].y;
    d2[i] = dx * dx + dy * dy;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d2[a] > d2[b]; });
  for (std::size_t r = 1; r < n; ++r)
    if (d2[order[r]] == d2[order[r - 1]]) return std::nullopt;
  std::vector<int> t(n);
  for (std::size_t r = 0; r < n; ++r) t[order[r]] = static_cast<int>(2 * r);
  return ChromaticCode(std::move(t));
}

CheckResult check_counts(const FullOACD& d) {
  Timer tm;
  CheckResult r = make("counts", d);
  const long long n = static_cast<long long>(d.n());
  const long long k = choose(n, 2), c3 = choose(n, 3);
  const long long cells = k * (k + 1) / 2 - c3 + 1;
  const long long edges = k * k - 3 * c3;
  const long long v3 = c3;
  const long long v2 = k * choose(n - 2, 2) / 2;
  const auto& a = d.arrangement();
  long long got2 = 0, got3 = 0;
  for (const auto& v : a.vertices()) (v.kind == VertexKind::TwoI ? got2 : got3)++;
  const long long f = static_cast<long long>(a.faces().size()), e = static_cast<long long>(a.edges().size());
  r.evaluated = 5;
  std::ostringstream os;
  os << "cells " << f << "/" << cells << " edges " << e << "/" << edges << " 3-I " << got3 << "/" << v3 << " 2-I " << got2 << "/" << v2;
  if (f != cells || e != edges || got3 != v3 || got2 != v2) r.fail(os.str(), payload(d, os.str()));
  if (got2 + got3 - e + f != 1) r.fail("Euler relation V-E+F != 1", payload(d, "euler"));
  if (r.status == Status::Pass) r.detail = os.str();
  r.millis = tm.ms();
  return r;
}

CheckResult check_bases(const FullOACD& d) {
  Timer tm;
  CheckResult r = make("bases+kinds", d);
  std::map<ParticleKind, std::vector<Base>> forms;
  for (auto k : {ParticleKind::Cell, ParticleKind::Edge, ParticleKind::Vertex2I, ParticleKind::Vertex3I})
    forms[k] = closed_form_bases(k, d.n());
  for (const auto& p : d.particles()) {
    ++r.evaluated;
    auto k = try_classify_kind(p.code);
    if (!k || *k != p.kind) {
      r.fail("classify_kind disagrees with geometry for " + format_code(p.code), payload(d, "kind", codes_json({&p.code})));
      continue;
    }
    const auto& fs = forms[p.kind];
    if (std::find(fs.begin(), fs.end(), base(p.code)) == fs.end())
      r.fail("base off the closed form for " + format_code(p.code), payload(d, "base", codes_json({&p.code})));
  }
  r.millis = tm.ms();
  return r;
}

CheckResult check_uniqueness(const FullOACD& d) {
  Timer tm;
  CheckResult r = make("uniqueness", d);
  std::map<ChromaticCode, int> seen;
  for (const auto& p : d.particles()) {
    ++r.evaluated;
    if (++seen[p.code] == 2) r.fail("duplicate code " + format_code(p.code), payload(d, "duplicate", codes_json({&p.code})));
  }
  r.millis = tm.ms();
  return r;
}

CheckResult check_units(const FullOACD& d) {
  Timer tm;
  CheckResult r = make("unit identities", d);
  const auto& a = d.arrangement();
  auto code = [&](Dim dim, int id) -> const ChromaticCode& { return d.particles()[d.particle_of({dim, id})].code; };
  for (const auto& u : enumerate_units(a)) {
    const ChromaticCode& phi = code(Dim::Vertex, u.vertex);
    std::vector<const ChromaticCode*> es, cs;
    for (int e : u.edges) es.push_back(&code(Dim::Edge, e));
    for (int f : u.faces) cs.push_back(&code(Dim::Face, f));
    const std::size_t deg = es.size();
    const std::size_t half = deg / 2;
    auto check = [&](const std::vector<long>& lhs, const std::vector<const ChromaticCode*>& parts, const std::string& what) {
      ++r.evaluated;
      if (lhs != sum_of(parts)) {
        json cj = codes_json({&phi});
        for (const auto* c : parts) cj.push_back(format_code(*c));
        r.fail(what + " fails at vertex " + format_code(phi), payload(d, what, cj));
      }
    };
    for (std::size_t i = 0; i < half; ++i) {
      check(scaled(phi, 2), {es[i], es[i + half]}, "vertex = half of opposite edges");
      check(scaled(phi, 2), {cs[i], cs[i + half]}, "vertex = half of opposite cells");
    }
    if (u.kind == VertexKind::ThreeI) {
      check(scaled(phi, 3), {es[0], es[2], es[4]}, "vertex = third of interval edges");
      check(scaled(phi, 3), {es[1], es[3], es[5]}, "vertex = third of interval edges");
      check(scaled(phi, 3), {cs[0], cs[2], cs[4]}, "vertex = third of interval cells");
      check(scaled(phi, 3), {cs[1], cs[3], cs[5]}, "vertex = third of interval cells");
    }
    check(scaled(phi, static_cast<long>(deg)), es, "vertex = mean of unit edges");
    check(scaled(phi, static_cast<long>(deg)), cs, "vertex = mean of unit cells");
  }
  for (std::size_t e = 0; e < a.edges().size(); ++e) {
    auto fs = a.faces_of_edge(static_cast<int>(e));
    const ChromaticCode& eta = code(Dim::Edge, static_cast<int>(e));
    ++r.evaluated;
    if (scaled(eta, 2) != sum_of({&code(Dim::Face, fs[0]), &code(Dim::Face, fs[1])}))
      r.fail("edge != half sum of its cells at " + format_code(eta),
             payload(d, "edge half sum", codes_json({&eta, &code(Dim::Face, fs[0]), &code(Dim::Face, fs[1])})));
  }
  r.millis = tm.ms();
  return r;
}

std::string_view to_string(PairType p) {
  switch (p) {
    case PairType::VE: return "vertex-edge";
    case PairType::VC: return "vertex-cell";
    case PairType::EE: return "edge-edge";
    case PairType::EC: return "edge-cell";
    case PairType::CC: return "cell-cell";
  }
  return "?";
}

std::string_view to_string(UnitRelation r) {
  switch (r) {
    case UnitRelation::None: return "-";
    case UnitRelation::Adjacent: return "adjacent";
    case UnitRelation::Interval: return "interval";
    case UnitRelation::Opposite: return "opposite";
  }
  return "?";
}

const std::vector<Table1Row>& table1() {
  using P = PairType;
  using R = UnitRelation;
  constexpr auto T = VertexKind::TwoI;
  constexpr auto H = VertexKind::ThreeI;
  static const std::vector<Table1Row> rows = {
      {P::VE, R::None, T, 2, 2, false},     {P::VE, R::None, H, 4, 3, false},
      {P::VC, R::None, T, 4, 4, false},     {P::VC, R::None, H, 4, 2, false},
      {P::EE, R::Adjacent, T, 4, 4, false}, {P::EE, R::Adjacent, H, 4, 3, false},
      {P::EE, R::Opposite, T, 4, 2, true},  {P::EE, R::Opposite, H, 8, 3, false},
      {P::EE, R::Interval, H, 6, 2, true},
      {P::EC, R::Adjacent, T, 2, 2, false}, {P::EC, R::Adjacent, H, 2, 2, false},
      {P::EC, R::Opposite, T, 6, 4, false}, {P::EC, R::Opposite, H, 8, 3, false},
      {P::EC, R::Interval, H, 6, 3, false},
      {P::CC, R::Adjacent, T, 4, 2, true},  {P::CC, R::Adjacent, H, 4, 2, true},
      {P::CC, R::Opposite, T, 8, 4, true},  {P::CC, R::Opposite, H, 8, 2, true},
      {P::CC, R::Interval, H, 8, 3, true},
  };
  return rows;
}

UnitRelation unit_relation(VertexKind unit, int pos_a, int pos_b) {
  const int ring = unit == VertexKind::TwoI ? 8 : 12;
  int dist = std::abs(pos_a - pos_b) % ring;
  dist = std::min(dist, ring - dist);
  if (dist == 0) return UnitRelation::None;
  if (dist <= 2) return UnitRelation::Adjacent;
  if (unit == VertexKind::TwoI || dist >= 5) return UnitRelation::Opposite;
  return UnitRelation::Interval;
}

CheckResult check_table1(const FullOACD& d) {
  Timer tm;
  CheckResult r = make("unit distance table", d);
  const auto& a = d.arrangement();
  auto code = [&](Dim dim, int id) -> const ChromaticCode& { return d.particles()[d.particle_of({dim, id})].code; };
  auto lookup = [](PairType p, UnitRelation rel, VertexKind k) -> const Table1Row* {
    for (const auto& row : table1())
      if (row.pair == p && row.relation == rel && row.unit == k) return &row;
    return nullptr;
  };
  auto compare = [&](PairType p, UnitRelation rel, VertexKind k, const ChromaticCode& x, const ChromaticCode& y) {
    ++r.evaluated;
    const Table1Row* row = lookup(p, rel, k);
    int d2 = chrom_dist(x, y), g = code_dist(x, y);
    bool eb = equi_base(x, y);
    if (!row || row->delta2 != d2 || row->gamma != g || row->equi_base != eb) {
      std::ostringstream os;
      os << to_string(p) << " " << to_string(rel) << " in " << (k == VertexKind::TwoI ? "2-I" : "3-I") << " unit: got (delta " << format_half(d2)
         << ", gamma " << g << ", " << (eb ? "equi-base" : "not equi-base") << ")";
      r.fail(os.str(), payload(d, os.str(), codes_json({&x, &y})));
    }
  };
  for (const auto& u : enumerate_units(a)) {
    const ChromaticCode& phi = code(Dim::Vertex, u.vertex);
    const int deg = static_cast<int>(u.edges.size());
    // Interleaved positions: edge i at 2i, face i at 2i+1.
    std::vector<std::pair<bool, const ChromaticCode*>> ring;
    for (int i = 0; i < deg; ++i) {
      ring.push_back({true, &code(Dim::Edge, u.edges[i])});
      ring.push_back({false, &code(Dim::Face, u.faces[i])});
    }
    for (const auto& [is_edge, c] : ring) compare(is_edge ? PairType::VE : PairType::VC, UnitRelation::None, u.kind, phi, *c);
    for (int x = 0; x < 2 * deg; ++x)
      for (int y = x + 1; y < 2 * deg; ++y) {
        bool ex = ring[x].first, ey = ring[y].first;
        PairType p = ex && ey ? PairType::EE : (!ex && !ey ? PairType::CC : PairType::EC);
        compare(p, unit_relation(u.kind, x, y), u.kind, *ring[x].second, *ring[y].second);
      }
  }
  r.millis = tm.ms();
  return r;
}

CheckResult check_oracle(const FullOACD& d) {
  Timer tm;
  CheckResult r = make("rank oracle", d);
  const auto& a = d.arrangement();
  for (const auto& p : d.particles()) {
    ++r.evaluated;
    const Point2& rp = representative_point(a, *p.geom);
    ChromaticCode oracle = rank_code_at(rp, d.generators());
    if (oracle != p.code) {
      r.fail("arrangement code " + format_code(p.code) + " != rank code " + format_code(oracle), payload(d, "oracle", codes_json({&p.code, &oracle})));
      continue;
    }
    if (sign_vector(a, *p.geom) != a.label(*p.geom))
      r.fail("representative point leaves its particle for " + format_code(p.code), payload(d, "rep point", codes_json({&p.code})));
    if (p.kind == ParticleKind::Cell) {
      auto inv = inverse_rank_code(rp, d.generators());
      if (!inv || *inv != p.code) r.fail("cell code is not the inverse distance ranking: " + format_code(p.code), payload(d, "rank", codes_json({&p.code})));
    }
  }
  r.millis = tm.ms();
  return r;
}

std::vector<HiddenParticle> hidden_particles(const FullOACD& d) {
  std::map<ChromaticCode, HiddenParticle> out;
  std::set<ChromaticCode> edges;
  for (const auto& p : d.particles()) {
    if (p.kind != ParticleKind::Cell) continue;
    for (auto& e : c2e(p.code)) {
      if (!d.realized(e) && !out.count(e)) out.emplace(e, HiddenParticle{e, ParticleKind::Edge, "C2E(" + format_code(p.code) + ")"});
      edges.insert(e);
    }
  }
  for (const auto& e : edges)
    for (auto& v : e2v(e))
      if (!d.realized(v) && !out.count(v)) out.emplace(v, HiddenParticle{v, classify_kind(v), "E2V(" + format_code(e) + ")"});
  std::vector<HiddenParticle> list;
  for (auto& [c, h] : out) list.push_back(h);
  return list;
}

CrossValidation cross_validate_topology(const FullOACD& d, std::uint64_t cluster_seed) {
  Timer tm;
  CrossValidation cv;
  CheckResult sound = make("topology soundness", d);
  CheckResult complete = make("topology completeness", d);
  CheckResult exact = make("topology exact in plane", d);
  CheckResult routes = make("topology routes", d);
  CheckResult seg_sig = make("segment signature 2I-3I/3I-3I", d, true);
  CheckResult seg_conv = make("segment converse 2I-3I/3I-3I", d, true);
  CheckResult clusters = make("cluster rules", d);
  CheckResult reading = make("cdn reading", d, true);

  const auto& a = d.arrangement();
  const auto& P = d.particles();
  const int NP = static_cast<int>(P.size());
  const std::size_t n = d.n();

  // Integer ids for codes: realized particles keep their index, candidates get fresh ids.
  std::map<ChromaticCode, int> extra;
  std::vector<ChromaticCode> extra_codes;
  auto id_of = [&](const ChromaticCode& c) {
    if (auto f = d.find(c)) return *f;
    auto [it, fresh] = extra.emplace(c, NP + static_cast<int>(extra_codes.size()));
    if (fresh) extra_codes.push_back(c);
    return it->second;
  };
  auto code_of = [&](int id) -> const ChromaticCode& { return id < NP ? P[id].code : extra_codes[id - NP]; };
  auto ids_of = [&](const std::vector<ChromaticCode>& cs) {
    std::vector<int> v;
    for (const auto& c : cs) v.push_back(id_of(c));
    std::sort(v.begin(), v.end());
    return v;
  };
  auto codes_of = [&](const std::vector<int>& ids) {
    json j = json::array();
    for (int id : ids) j.push_back(format_code(code_of(id)));
    return j;
  };
  auto all_hidden = [&](const std::vector<int>& ids) {
    return !ids.empty() && std::all_of(ids.begin(), ids.end(), [&](int id) { return id >= NP; });
  };

  std::vector<int> cells, edges, verts;
  for (int p = 0; p < NP; ++p) (P[p].kind == ParticleKind::Cell ? cells : P[p].kind == ParticleKind::Edge ? edges : verts).push_back(p);
  const int nc = static_cast<int>(cells.size()), ne = static_cast<int>(edges.size()), nv = static_cast<int>(verts.size());
  // Particle id -> local index within its kind list.
  std::vector<int> local(NP);
  for (int i = 0; i < nc; ++i) local[cells[i]] = i;
  for (int i = 0; i < ne; ++i) local[edges[i]] = i;
  for (int i = 0; i < nv; ++i) local[verts[i]] = i;

  std::vector<std::vector<int>> e2v_ids(ne), c2e_ids(nc), c2v_ids(nc), v2e_ids(nv);
  for (int i = 0; i < ne; ++i) e2v_ids[i] = ids_of(e2v(P[edges[i]].code));
  for (int i = 0; i < nc; ++i) {
    c2e_ids[i] = ids_of(c2e(P[cells[i]].code));
    c2v_ids[i] = ids_of(c2v(P[cells[i]].code));
  }
  for (int i = 0; i < nv; ++i) v2e_ids[i] = ids_of(v2e(P[verts[i]].code));

  // Geometric incidences by local index.
  std::vector<std::vector<char>> ve(nv, std::vector<char>(ne, 0)), vc(nv, std::vector<char>(nc, 0)),
      ec(ne, std::vector<char>(nc, 0)), cc_edge(nc, std::vector<char>(nc, 0)), cc_vert(nc, std::vector<char>(nc, 0));
  std::vector<std::vector<int>> ends(ne);
  for (int i = 0; i < ne; ++i) {
    GeomRef g = d.geom_of(edges[i]);
    const auto& ed = a.edges()[g.id];
    for (int v : {ed.from, ed.to})
      if (v >= 0) {
        int lv = local[d.particle_of({Dim::Vertex, v})];
        ends[i].push_back(lv);
        ve[lv][i] = 1;
      }
    auto fs = a.faces_of_edge(g.id);
    int f0 = local[d.particle_of({Dim::Face, fs[0]})], f1 = local[d.particle_of({Dim::Face, fs[1]})];
    ec[i][f0] = ec[i][f1] = 1;
    cc_edge[f0][f1] = cc_edge[f1][f0] = 1;
  }
  for (int i = 0; i < nv; ++i) {
    GeomRef g = d.geom_of(verts[i]);
    std::vector<int> fs;
    for (int f : a.vertex_faces(g.id)) fs.push_back(local[d.particle_of({Dim::Face, f})]);
    for (int f : fs) vc[i][f] = 1;
    for (int x : fs)
      for (int y : fs) cc_vert[x][y] = 1;
    // The unit's edges read off the vertex code must be exactly its incident edges.
    std::vector<int> inc;
    for (int e : a.vertex_edges(g.id)) inc.push_back(d.particle_of({Dim::Edge, e}));
    std::sort(inc.begin(), inc.end());
    ++routes.evaluated;
    if (inc != v2e_ids[i]) routes.fail("V2E of " + format_code(P[verts[i]].code) + " differs from incident edges", payload(d, "v2e", codes_of(v2e_ids[i])));
  }

  // API spot check on pairs with a positive answer.
  auto api = [&](const ChromaticCode& x, const ChromaticCode& y, Relation want, const std::vector<int>& want_ids) {
    ++routes.evaluated;
    RelationVerdict v = relation(x, y, &d);
    std::vector<int> got = ids_of(v.evidence);
    bool ok = v.relation == want && got == want_ids && v.notes.size() <= (v.notes.size() == 1 && v.notes[0] == "collinear" ? 1u : 0u);
    for (std::size_t q = 0; ok && q < v.evidence.size(); ++q) ok = v.realized[q] == d.realized(v.evidence[q]);
    if (!ok) {
      std::string note = v.notes.empty() ? "" : " (" + v.notes.front() + ")";
      routes.fail("relation(" + format_code(x) + ", " + format_code(y) + ") gave " + std::string(to_string(v.relation)) + note,
                  payload(d, "api", codes_json({&x, &y})));
    }
  };

  auto note_hidden = [&](const char* kind, const ChromaticCode& x, const ChromaticCode& y, int cand) {
    cv.hidden_joints.push_back({kind, x, y, code_of(cand)});
  };

  // Vertex-vertex: equality and segmentation.
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      ++exact.evaluated;
      const auto& x = P[verts[i]].code;
      const auto& y = P[verts[j]].code;
      if ((vv_relation(x, y).relation == Relation::Equal) != (i == j)) exact.fail("vertex equality mismatch", payload(d, "vv", codes_json({&x, &y})));
      if (j <= i) continue;
      // Converse of the segment signature via the unit edges of both ends.
      int sig = segment_signature(P[verts[i]].kind, P[verts[j]].kind);
      if (chrom_dist(x, y) != sig) continue;
      bool two2 = P[verts[i]].kind == ParticleKind::Vertex2I && P[verts[j]].kind == ParticleKind::Vertex2I;
      CheckResult& target = two2 ? complete : seg_conv;
      ++target.evaluated;
      auto common = intersect_ids(v2e_ids[i], v2e_ids[j]);
      bool geo = false;
      for (int e = 0; e < ne && !geo; ++e) geo = ve[i][e] && ve[j][e];
      if (common.empty()) target.fail("signature distance without a common edge: " + format_code(x) + " " + format_code(y), payload(d, "segment converse", codes_json({&x, &y})));
      else if (!geo && !all_hidden(common)) target.fail("signature distance, realized common edge, no segment: " + format_code(x) + " " + format_code(y), payload(d, "segment converse", codes_json({&x, &y})));
    }

  // Edge-vertex containment and segmentation.
  for (int e = 0; e < ne; ++e) {
    const auto& eta = P[edges[e]].code;
    for (int v = 0; v < nv; ++v) {
      const auto& phi = P[verts[v]].code;
      int d2 = chrom_dist(eta, phi);
      bool rule = ve_contains_rule(d2), geo = ve[v][e] != 0, route = has_id(e2v_ids[e], verts[v]);
      ++sound.evaluated;
      ++exact.evaluated;
      ++routes.evaluated;
      if (geo && !rule) sound.fail("endpoint not Contains: " + format_code(eta) + " " + format_code(phi), payload(d, "ve", codes_json({&eta, &phi})));
      if (rule && !geo) exact.fail("Contains without incidence: " + format_code(eta) + " " + format_code(phi), payload(d, "ve", codes_json({&eta, &phi})));
      if (rule && !geo) complete.fail("Contains with realized vertex off the edge: " + format_code(eta) + " " + format_code(phi), payload(d, "ve", codes_json({&eta, &phi})));
      if (rule != route) routes.fail("delta rule vs E2V membership: " + format_code(eta) + " " + format_code(phi), payload(d, "ve route", codes_json({&eta, &phi})));
      if (rule) api(eta, phi, Relation::Contains, {verts[v]});
    }
    // Segmentation over realized candidates of this edge.
    std::vector<int> rv;
    for (int id : e2v_ids[e])
      if (id < NP) rv.push_back(local[id]);
    for (std::size_t x = 0; x < rv.size(); ++x)
      for (std::size_t y = x + 1; y < rv.size(); ++y) {
        const auto& p1 = P[verts[rv[x]]].code;
        const auto& p2 = P[verts[rv[y]]].code;
        ++exact.evaluated;
        bool geo = ends[e].size() == 2 && ve[rv[x]][e] && ve[rv[y]][e];
        if (ve_segmented(eta, p1, p2).segmented != geo) exact.fail("segmented mismatch on " + format_code(eta), payload(d, "segmented", codes_json({&eta, &p1, &p2})));
      }
    if (ends[e].size() == 2) {
      const auto& p1 = P[verts[ends[e][0]]].code;
      const auto& p2 = P[verts[ends[e][1]]].code;
      auto s = ve_segmented(eta, p1, p2);
      ++sound.evaluated;
      if (!s.segmented) sound.fail("edge ends not segmented: " + format_code(eta), payload(d, "segmented", codes_json({&eta, &p1, &p2})));
      bool two2 = P[verts[ends[e][0]]].kind == ParticleKind::Vertex2I && P[verts[ends[e][1]]].kind == ParticleKind::Vertex2I;
      CheckResult& target = two2 ? sound : seg_sig;
      ++target.evaluated;
      if (!s.signature_ok)
        target.fail("end distance " + format_half(s.delta2) + " != " + format_half(s.expected_delta2.value_or(0)) + " on " + format_code(eta),
                    payload(d, "segment signature", codes_json({&eta, &p1, &p2})));
    }
  }

  // Cell-vertex.
  for (int c = 0; c < nc; ++c) {
    const auto& zeta = P[cells[c]].code;
    for (int v = 0; v < nv; ++v) {
      const auto& phi = P[verts[v]].code;
      int d2 = chrom_dist(zeta, phi);
      bool rule = vc_contains_rule(d2), geo = vc[v][c] != 0;
      ++sound.evaluated;
      ++exact.evaluated;
      ++routes.evaluated;
      if (d2 < 4) routes.fail("cell-vertex distance below 2", payload(d, "vc", codes_json({&zeta, &phi})));
      if (geo && !rule) sound.fail("cell vertex not Contains: " + format_code(zeta) + " " + format_code(phi), payload(d, "vc", codes_json({&zeta, &phi})));
      if (rule && !geo) {
        exact.fail("Contains without incidence: " + format_code(zeta) + " " + format_code(phi), payload(d, "vc", codes_json({&zeta, &phi})));
        complete.fail("Contains with realized vertex off the cell", payload(d, "vc", codes_json({&zeta, &phi})));
      }
      if (rule != has_id(c2v_ids[c], verts[v])) routes.fail("delta rule vs C2V membership", payload(d, "vc route", codes_json({&zeta, &phi})));
      if (rule) api(zeta, phi, Relation::Contains, {verts[v]});
    }
  }

  // Edge-edge.
  for (int e1 = 0; e1 < ne; ++e1)
    for (int e2 = e1 + 1; e2 < ne; ++e2) {
      const auto& x = P[edges[e1]].code;
      const auto& y = P[edges[e2]].code;
      int d2 = chrom_dist(x, y);
      if (d2 > 8) {
        // No rule fires beyond 4; geometry must agree.
        bool geo = false;
        for (int v : ends[e1]) geo = geo || ve[v][e2];
        ++sound.evaluated;
        if (geo) sound.fail("edges share an end at distance > 4", payload(d, "ee", codes_json({&x, &y})));
        continue;
      }
      int g = code_dist(x, y);
      auto rule = ee_joint_rule(d2, g, equi_base(x, y));
      bool geo = false;
      for (int v : ends[e1]) geo = geo || ve[v][e2];
      auto common = intersect_ids(e2v_ids[e1], e2v_ids[e2]);
      ++sound.evaluated;
      ++complete.evaluated;
      ++routes.evaluated;
      if (geo && !rule) sound.fail("edges share an end but no joint signature: " + format_code(x) + " " + format_code(y), payload(d, "ee", codes_json({&x, &y})));
      if (rule.has_value() != !common.empty() || common.size() > 1)
        routes.fail("joint signature vs E2V intersection: " + format_code(x) + " " + format_code(y), payload(d, "ee route", codes_json({&x, &y})));
      if (rule && !geo) {
        if (all_hidden(common)) note_hidden("edge-edge", x, y, common.front());
        else complete.fail("joint edges, realized candidate, no shared end: " + format_code(x) + " " + format_code(y), payload(d, "ee", codes_json({&x, &y})));
      }
      if (rule) api(x, y, Relation::Joint, common);
      ++exact.evaluated;
      bool same_line = a.edges()[d.geom_of(edges[e1]).id].carrier == a.edges()[d.geom_of(edges[e2]).id].carrier;
      if (ee_collinear(x, y) != same_line) exact.fail("collinear mismatch: " + format_code(x) + " " + format_code(y), payload(d, "collinear", codes_json({&x, &y})));
    }

  // Edge-cell.
  for (int c = 0; c < nc; ++c) {
    const auto& zeta = P[cells[c]].code;
    for (int e = 0; e < ne; ++e) {
      const auto& eta = P[edges[e]].code;
      int d2 = chrom_dist(zeta, eta);
      bool contains_geo = ec[e][c] != 0;
      bool joint_geo = false;
      if (!contains_geo)
        for (int v : ends[e]) joint_geo = joint_geo || vc[v][c];
      bool contains_rule = ec_contains_rule(d2), joint_rule = ec_joint_rule(d2);
      bool in_c2e = has_id(c2e_ids[c], edges[e]);
      ++sound.evaluated;
      ++exact.evaluated;
      ++routes.evaluated;
      if (contains_geo && !contains_rule) sound.fail("boundary edge not Contains: " + format_code(zeta) + " " + format_code(eta), payload(d, "ec", codes_json({&zeta, &eta})));
      if (joint_geo && !joint_rule) sound.fail("edge touching cell corner not Joint: " + format_code(zeta) + " " + format_code(eta), payload(d, "ec", codes_json({&zeta, &eta})));
      if (contains_rule && !contains_geo) {
        exact.fail("Contains without incidence: " + format_code(zeta) + " " + format_code(eta), payload(d, "ec", codes_json({&zeta, &eta})));
        complete.fail("Contains with realized edge off the cell", payload(d, "ec", codes_json({&zeta, &eta})));
      }
      if (contains_rule != in_c2e) routes.fail("delta rule vs C2E membership: " + format_code(zeta) + " " + format_code(eta), payload(d, "ec route", codes_json({&zeta, &eta})));
      if (contains_rule) api(zeta, eta, Relation::Contains, {edges[e]});
      if (d2 > 8) continue;
      auto common = intersect_ids(c2v_ids[c], e2v_ids[e]);
      bool set_rule = !in_c2e && !common.empty();
      if (joint_rule != set_rule) routes.fail("joint distance vs C2V/E2V rule: " + format_code(zeta) + " " + format_code(eta), payload(d, "ec route", codes_json({&zeta, &eta})));
      if (joint_rule) {
        ++complete.evaluated;
        if (!joint_geo) {
          if (all_hidden(common)) note_hidden("edge-cell", zeta, eta, common.front());
          else complete.fail("joint edge-cell, realized candidate, no shared vertex: " + format_code(zeta) + " " + format_code(eta), payload(d, "ec", codes_json({&zeta, &eta})));
        }
        api(zeta, eta, Relation::Joint, common);
      }
    }
  }

  // Cell-cell.
  for (int c1 = 0; c1 < nc; ++c1)
    for (int c2 = c1 + 1; c2 < nc; ++c2) {
      const auto& x = P[cells[c1]].code;
      const auto& y = P[cells[c2]].code;
      int d2 = chrom_dist(x, y);
      bool conn_geo = cc_edge[c1][c2] != 0;
      bool joint_geo = !conn_geo && cc_vert[c1][c2];
      ++sound.evaluated;
      ++exact.evaluated;
      if (conn_geo && !cc_connected_rule(d2)) sound.fail("cells sharing an edge not Connected: " + format_code(x) + " " + format_code(y), payload(d, "cc", codes_json({&x, &y})));
      if (joint_geo && !cc_joint_rule(d2)) sound.fail("cells sharing a vertex not Joint: " + format_code(x) + " " + format_code(y), payload(d, "cc", codes_json({&x, &y})));
      if (cc_connected_rule(d2)) {
        std::vector<ChromaticCode> both{x, y};
        auto edge = divide(complex_code(both), 2);
        std::vector<int> ev;
        if (edge) ev.push_back(id_of(*edge));
        if (!conn_geo) {
          exact.fail("Connected without shared edge: " + format_code(x) + " " + format_code(y), payload(d, "cc", codes_json({&x, &y})));
          if (!all_hidden(ev)) complete.fail("Connected, realized edge code, no shared edge", payload(d, "cc", codes_json({&x, &y})));
        }
        api(x, y, Relation::Connected, ev);
      }
      if (cc_joint_rule(d2)) {
        auto common = intersect_ids(c2v_ids[c1], c2v_ids[c2]);
        ++complete.evaluated;
        ++routes.evaluated;
        if (common.size() != 1) routes.fail("joint distance but C2V intersection size " + std::to_string(common.size()), payload(d, "cc route", codes_json({&x, &y})));
        if (!joint_geo) {
          if (all_hidden(common)) note_hidden("cell-cell", x, y, common.front());
          else complete.fail("joint cells, realized candidate, no shared vertex: " + format_code(x) + " " + format_code(y), payload(d, "cc", codes_json({&x, &y})));
        }
        api(x, y, Relation::Joint, common);
      } else if (d2 <= 8) {
        ++routes.evaluated;
        if (d2 != 4 && !intersect_ids(c2v_ids[c1], c2v_ids[c2]).empty()) routes.fail("C2V intersection without joint distance", payload(d, "cc route", codes_json({&x, &y})));
      }
    }

  // E2V output sizes.
  for (int e = 0; e < ne; ++e) {
    const auto& eta = P[edges[e]].code;
    int h = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (eta[i] % 2) h = eta[i];
    int z = (h - 1) / 2;
    std::size_t want = (z == 0 || z == static_cast<int>(n) - 2) ? n - 3 : n - 4;
    ++routes.evaluated;
    if (e2v_2I(eta).size() != want) routes.fail("E2V 2-I size off for " + format_code(eta), payload(d, "e2v size", codes_json({&eta})));
  }

  // Clusters drawn from face adjacency.
  {
    std::mt19937_64 rng(cluster_seed);
    std::vector<std::vector<int>> adj(nc);
    for (int x = 0; x < nc; ++x)
      for (int y = 0; y < nc; ++y)
        if (cc_edge[x][y]) adj[x].push_back(y);
    auto grow = [&](int size) {
      std::set<int> s{static_cast<int>(rng() % nc)};
      while (static_cast<int>(s.size()) < size) {
        auto it = s.begin();
        std::advance(it, rng() % s.size());
        const auto& nb = adj[*it];
        s.insert(nb[rng() % nb.size()]);
      }
      return std::vector<int>(s.begin(), s.end());
    };
    auto scatter = [&](int size) {
      std::set<int> s;
      while (static_cast<int>(s.size()) < std::min(size, nc)) s.insert(static_cast<int>(rng() % nc));
      return std::vector<int>(s.begin(), s.end());
    };
    auto to_cluster = [&](const std::vector<int>& ids) {
      Cluster xi;
      for (int id : ids) xi.push_back(P[cells[id]].code);
      return xi;
    };
    auto geo_connected = [&](const std::vector<int>& ids) {
      std::set<int> in(ids.begin(), ids.end()), seen{ids.front()};
      std::vector<int> stack{ids.front()};
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int nb : adj[c])
          if (in.count(nb) && seen.insert(nb).second) stack.push_back(nb);
      }
      return seen.size() == in.size();
    };
    std::vector<std::vector<int>> pool;
    for (int t = 0; t < 12; ++t) pool.push_back(grow(1 + static_cast<int>(rng() % std::min(6, nc))));
    for (int t = 0; t < 4; ++t) pool.push_back(scatter(2 + static_cast<int>(rng() % 4)));
    for (const auto& ids : pool) {
      Cluster xi = to_cluster(ids);
      auto cn = conn(xi);
      auto rm = rmatrix(xi);
      bool all_pos = true;
      for (std::size_t i = 0; i < rm.size(); ++i)
        for (std::size_t j = 0; j < rm.size(); ++j)
          if (i != j && !rm[i][j]) all_pos = false;
      ++clusters.evaluated;
      if (cn.connected != all_pos) clusters.fail("Conn disagrees with reachability matrix", payload(d, "conn", json(xi.size())));
      if (cn.connected != geo_connected(ids)) clusters.fail("Conn disagrees with face adjacency", payload(d, "conn", json(xi.size())));
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (std::size_t i = 0; i + 1 < pool.size(); ++i) pairs.push_back({pool[i], pool[i + 1]});
    for (std::size_t i = 0; i < pool.size(); ++i) {
      pairs.push_back({pool[i], pool[i]});
      std::vector<int> sub(pool[i].begin(), pool[i].begin() + (pool[i].size() + 1) / 2);
      pairs.push_back({pool[i], sub});
      std::vector<int> merged = pool[i];
      merged.insert(merged.end(), pool[(i + 3) % pool.size()].begin(), pool[(i + 3) % pool.size()].end());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      pairs.push_back({sub, merged});
    }
    std::size_t bad_union = 0, bad_cross = 0;
    for (const auto& [i1, i2] : pairs) {
      Cluster x1 = to_cluster(i1), x2 = to_cluster(i2);
      auto sets = cscs_relation_sets(x1, x2);
      // Geometric ground truth for disjoint clusters.
      std::set<int> s1(i1.begin(), i1.end()), s2(i2.begin(), i2.end());
      bool disjoint = std::none_of(i1.begin(), i1.end(), [&](int c) { return s2.count(c) > 0; });
      if (disjoint) {
        bool touch = false, joint = false;
        for (int p : i1)
          for (int q : i2) {
            touch = touch || cc_edge[p][q];
            joint = joint || cc_vert[p][q];
          }
        ++clusters.evaluated;
        Relation want = touch ? Relation::Touch : joint ? Relation::Joint : Relation::Disjoint;
        if ((touch || joint) && sets.relation != want)
          clusters.fail("cluster relation " + std::string(to_string(sets.relation)) + " but geometry gives " + std::string(to_string(want)), payload(d, "cscs", json::array()));
      }
      for (CdnReading rd : {CdnReading::Union, CdnReading::Cross}) {
        auto c = cscs_relation_cdn(x1, x2, rd);
        if (c.relation != sets.relation || c.converse != sets.converse) (rd == CdnReading::Union ? bad_union : bad_cross)++;
      }
      ++reading.evaluated;
    }
    std::ostringstream os;
    os << "cdn vs set rules mismatches: union " << bad_union << ", cross " << bad_cross << " of " << pairs.size();
    reading.detail = os.str();
    if (bad_cross > 0) reading.fail(os.str(), payload(d, "cdn reading", json::array()));
  }

  if (!cv.hidden_joints.empty() && complete.status == Status::Pass) {
    const auto& h = cv.hidden_joints.front();
    complete.detail = "hidden joints seen, e.g. " + h.pair + " " + format_code(h.a) + " / " + format_code(h.b) + " at " + format_code(h.candidate);
  }
  double ms = tm.ms();
  for (CheckResult* c : {&sound, &complete, &exact, &routes, &seg_sig, &seg_conv, &clusters, &reading}) {
    c->millis = ms / 8;
    cv.checks.push_back(std::move(*c));
  }
  return cv;
}

std::uint64_t derive_seed(std::uint64_t base, std::size_t n, std::size_t trial) {
  return splitmix(splitmix(base) ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(trial));
}

GeneratorSet sample_general_position(std::size_t n, std::uint64_t seed, int range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-range, range);
  for (;;) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(Point2{coord(rng), coord(rng)});
    GeneratorSet g(std::move(pts));
    auto rep = validate_general_position(g);
    if (rep.clean() && rep.parallel_pairs.empty()) return g;
  }
}

namespace {

void run_all(const FullOACD& d, bool topology, std::uint64_t seed, std::vector<CheckResult>& out) {
  out.push_back(check_counts(d));
  out.push_back(check_bases(d));
  out.push_back(check_uniqueness(d));
  out.push_back(check_units(d));
  out.push_back(check_table1(d));
  out.push_back(check_oracle(d));
  if (topology) {
    auto cv = cross_validate_topology(d, seed);
    for (auto& c : cv.checks) out.push_back(std::move(c));
  }
  for (auto& c : out) c.seed = seed;
}

}  // namespace

VerificationReport verify_diagram(const FullOACD& d) {
  VerificationReport rep;
  run_all(d, true, 1, rep.checks);
  for (auto& c : rep.checks) c.seed = 0;
  return rep;
}

VerificationReport run_suite(const SuiteConfig& config) {
  VerificationReport rep;
  rep.seed = config.seed;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    std::vector<CheckResult> agg;
    for (std::size_t t = 0; t < config.trials; ++t) {
      std::uint64_t s = derive_seed(config.seed, n, t);
      FullOACD d = FullOACD::build(sample_general_position(n, s));
      std::vector<CheckResult> one;
      run_all(d, config.topology && n <= config.exhaustive_max_n, s, one);
      if (agg.empty()) {
        agg = std::move(one);
        continue;
      }
      for (std::size_t c = 0; c < one.size(); ++c) {
        CheckResult& a = agg[c];
        const CheckResult& b = one[c];
        a.instances += b.instances;
        a.evaluated += b.evaluated;
        a.millis += b.millis;
        if (b.violations > 0 && a.violations == 0) {
          a.detail = b.detail;
          a.counterexample = b.counterexample;
          a.seed = b.seed;
        }
        a.violations += b.violations;
        if (static_cast<int>(b.status) > static_cast<int>(a.status)) a.status = b.status;
        if (a.violations == 0 && a.detail.empty()) a.detail = b.detail;
      }
    }
    for (auto& c : agg) {
      if (c.violations == 0) c.seed = 0;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace oacd
