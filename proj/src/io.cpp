#include "oacd/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace oacd {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Rational json_number(const json& v) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Rational(std::to_string(v.get<std::uint64_t>())) : Rational(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    double x = v.get<double>();
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
    Rational shortest = parse_rational(std::string(buf, res.ptr));
    Rational exact(x);
    if (shortest != exact)
      throw Error(ErrorCode::BadInput, "float " + std::string(buf, res.ptr) + " is not exactly representable; pass it as a string");
    return exact;
  }
  throw Error(ErrorCode::BadInput, "coordinate must be a number or string, got " + v.dump());
}

std::string edge_type(const ArrEdge& e) {
  if (e.bounded()) return "segment";
  if (e.from < 0 && e.to < 0) return "line";
  return "ray";
}

}  // namespace

GeneratorSet read_points_csv(std::istream& in) {
  std::vector<Point2> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::string lower = t;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "x,y") continue;
    auto comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
      throw Error(ErrorCode::BadInput, "line " + std::to_string(lineno) + ": expected x,y");
    try {
      pts.push_back(Point2{parse_rational(t.substr(0, comma)), parse_rational(t.substr(comma + 1))});
    } catch (const Error& e) {
      throw Error(ErrorCode::BadInput, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return GeneratorSet(std::move(pts));
}

GeneratorSet read_points_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected a JSON array of [x,y] pairs");
  std::vector<Point2> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::BadInput, "expected [x,y], got " + p.dump());
    pts.push_back(Point2{json_number(p[0]), json_number(p[1])});
  }
  return GeneratorSet(std::move(pts));
}

GeneratorSet read_points(std::istream& in, PointFormat format) {
  if (format == PointFormat::Csv) return read_points_csv(in);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("JSON: ") + e.what());
  }
  return read_points_json(j);
}

GeneratorSet read_points_file(const std::string& path, std::optional<PointFormat> format) {
  PointFormat f = format.value_or(path.size() > 5 && path.substr(path.size() - 5) == ".json" ? PointFormat::Json : PointFormat::Csv);
  if (path == "-") return read_points(std::cin, f);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  return read_points(in, f);
}

json point_json(const Point2& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json particle_json(const FullOACD& d, int particle) {
  const Particle& p = d.particles()[particle];
  const auto& a = d.arrangement();
  json geom;
  GeomRef ref = *p.geom;
  switch (ref.dim) {
    case Dim::Vertex:
      geom = {{"type", "vertex"}, {"location", point_json(a.vertices()[ref.id].location)}};
      break;
    case Dim::Edge: {
      const auto& e = a.edges()[ref.id];
      const auto& l = a.bisectors()[e.carrier];
      geom = {{"type", edge_type(e)},
              {"bisector", json::array({l.i, l.j})},
              {"from", e.from >= 0 ? point_json(a.vertices()[e.from].location) : json(nullptr)},
              {"to", e.to >= 0 ? point_json(a.vertices()[e.to].location) : json(nullptr)}};
      break;
    }
    case Dim::Face:
      geom = {{"type", "face"}, {"bounded", a.faces()[ref.id].bounded}, {"point", point_json(a.rep_point(ref))}};
      break;
  }
  return json{{"kind", to_string(p.kind)}, {"code", p.code.doubled()}, {"code_str", format_code(p.code)}, {"geom_id", ref.id}, {"geometry", geom}};
}

json diagram_json(const FullOACD& d) {
  json parts = json::array();
  for (int i = 0; i < static_cast<int>(d.particles().size()); ++i) parts.push_back(particle_json(d, i));
  const auto& a = d.arrangement();
  std::size_t v2 = 0, v3 = 0;
  for (const auto& v : a.vertices()) (v.kind == VertexKind::TwoI ? v2 : v3)++;
  json gens = json::array();
  for (const auto& p : d.generators().points()) gens.push_back(point_json(p));
  return json{{"n", d.n()},
              {"generators", gens},
              {"counts", {{"cells", a.faces().size()}, {"edges", a.edges().size()}, {"vertices2I", v2}, {"vertices3I", v3}}},
              {"particles", parts}};
}

std::string diagram_table(const FullOACD& d) {
  std::ostringstream os;
  os << "kind      code            components\n";
  for (const auto& p : d.particles()) {
    std::string k(to_string(p.kind));
    std::string c = format_code(p.code);
    os << k << std::string(k.size() < 10 ? 10 - k.size() : 1, ' ') << c << std::string(c.size() < 16 ? 16 - c.size() : 1, ' ') << format_tuple(p.code) << "\n";
  }
  return os.str();
}

std::vector<Particle> particles_from_json(const json& j) {
  std::vector<Particle> out;
  for (const auto& rec : j.at("particles")) {
    Particle p;
    p.code = ChromaticCode(rec.at("code").get<std::vector<int>>());
    std::string k = rec.at("kind").get<std::string>();
    if (k == "cell") p.kind = ParticleKind::Cell;
    else if (k == "edge") p.kind = ParticleKind::Edge;
    else if (k == "vertex2I") p.kind = ParticleKind::Vertex2I;
    else if (k == "vertex3I") p.kind = ParticleKind::Vertex3I;
    else throw Error(ErrorCode::BadInput, "unknown kind " + k);
    if (format_code(p.code) != rec.at("code_str").get<std::string>()) throw Error(ErrorCode::BadCode, "code_str mismatch");
    out.push_back(std::move(p));
  }
  return out;
}

json verdict_json(const RelationVerdict& v) {
  json ev = json::array();
  for (const auto& c : v.evidence) ev.push_back(format_code(c));
  json j{{"relation", to_string(v.relation)}, {"evidence", ev}, {"realized", v.realized},
         {"delta", format_half(v.delta2)}, {"gamma", v.gamma}};
  if (v.via) j["via"] = to_string(*v.via);
  if (v.converse) j["converse"] = true;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

std::string verdict_table(const RelationVerdict& v) {
  std::ostringstream os;
  os << "relation: " << to_string(v.relation);
  if (v.via) os << " (" << to_string(*v.via) << ")";
  if (v.converse) os << " (converse)";
  os << "\ndelta: " << format_half(v.delta2) << "\ngamma: " << v.gamma << "\n";
  for (std::size_t i = 0; i < v.evidence.size(); ++i) {
    os << "evidence: " << format_code(v.evidence[i]) << " " << format_tuple(v.evidence[i]);
    if (i < v.realized.size()) os << (v.realized[i] ? " realized" : " hidden");
    os << "\n";
  }
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

json validation_json(const ValidationReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) {
    json b = json::array();
    for (auto [i, j] : v.bisectors) b.push_back({i, j});
    json rec{{"kind", to_string(v.kind)}, {"generators", v.generators}, {"bisectors", b}};
    if (v.location) rec["location"] = point_json(*v.location);
    vs.push_back(std::move(rec));
  }
  return json{{"general_position", r.clean()}, {"violations", vs}};
}

}  // namespace oacd
