#include "oacd/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "oacd/io.hpp"
#include "oacd/render.hpp"
#include "oacd/verify.hpp"

namespace oacd {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t n_min = 3, n_max = 7, trials = 50, exhaustive_max_n = 7;
  bool timing = false;
  std::string bbox;
  bool edge_labels = false;
  std::string cdn_reading = "cross";
  std::vector<std::string> codes, with;
};

GeneratorSet load(const Options& o, std::istream& in) {
  std::optional<PointFormat> f;
  if (o.format == "csv") f = PointFormat::Csv;
  else if (o.format == "json") f = PointFormat::Json;
  if (o.input.empty() || o.input == "-") return read_points(in, f.value_or(PointFormat::Csv));
  return read_points_file(o.input, f);
}

void add_input(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--input,-i", o.input, "points file, '-' for stdin");
  if (required) opt->required(false);
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

int cmd_build(const Options& o, std::ostream& out, std::istream& in) {
  FullOACD d = FullOACD::build(load(o, in));
  if (o.out == "table") out << diagram_table(d);
  else out << diagram_json(d).dump(2) << "\n";
  return 0;
}

int cmd_query(const Options& o, std::ostream& out, std::istream& in) {
  ChromaticCode a = parse_code(o.codes.at(0));
  ChromaticCode b = parse_code(o.codes.at(1));
  std::optional<FullOACD> d;
  if (!o.input.empty()) {
    d = FullOACD::build(load(o, in));
    if (a.size() != d->n() || b.size() != d->n()) throw Error(ErrorCode::LengthMismatch, "codes do not match the diagram's n");
  }
  RelationVerdict v = relation(a, b, d ? &*d : nullptr);
  if (o.out == "table") {
    out << format_code(a) << " " << to_string(classify_kind(a)) << "\n" << format_code(b) << " " << to_string(classify_kind(b)) << "\n" << verdict_table(v);
  } else {
    json j = verdict_json(v);
    j["a"] = {{"code", format_code(a)}, {"kind", to_string(classify_kind(a))}};
    j["b"] = {{"code", format_code(b)}, {"kind", to_string(classify_kind(b))}};
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::istream& in) {
  VerificationReport rep;
  if (!o.input.empty()) {
    rep = verify_diagram(FullOACD::build(load(o, in)));
  } else {
    SuiteConfig cfg;
    cfg.n_min = o.n_min;
    cfg.n_max = o.n_max;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.exhaustive_max_n = o.exhaustive_max_n;
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw Error(ErrorCode::BadInput, "need 2 <= n-min <= n-max");
    rep = run_suite(cfg);
  }
  if (o.out == "json") out << rep.to_json(o.timing).dump(2) << "\n";
  else out << rep.to_table(o.timing);
  return rep.hard_failure() ? 1 : 0;
}

int cmd_render(const Options& o, std::ostream& out, std::istream& in) {
  FullOACD d = FullOACD::build(load(o, in));
  RenderOptions r;
  if (!o.bbox.empty()) r.bbox = parse_bbox(o.bbox);
  r.edge_labels = o.edge_labels;
  out << render_svg(d, r);
  return 0;
}

json matrix_json(const std::vector<std::vector<int>>& m, bool halves) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (int v : r) row.push_back(halves ? json(format_half(v)) : json(v));
    rows.push_back(row);
  }
  return rows;
}

void matrix_table(std::ostream& out, const std::string& title, const std::vector<std::vector<int>>& m, bool halves) {
  out << title << "\n";
  for (const auto& r : m) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      std::string s = halves ? format_half(r[j]) : std::to_string(r[j]);
      out << (j ? " " : "") << std::string(s.size() < 4 ? 4 - s.size() : 0, ' ') << s;
    }
    out << "\n";
  }
}

int cmd_matrix(const Options& o, std::ostream& out) {
  Cluster xi1, xi2;
  for (const auto& s : o.codes) xi1.push_back(parse_code(s));
  for (const auto& s : o.with) xi2.push_back(parse_code(s));
  CdnReading reading = o.cdn_reading == "union" ? CdnReading::Union : CdnReading::Cross;
  auto dm = xi2.empty() ? imatrix(xi1) : dmatrix(xi1, xi2);
  auto am = amatrix(xi1);
  auto rm = rmatrix(xi1);
  auto cn = conn(xi1);
  std::optional<RelationVerdict> v;
  if (!xi2.empty()) v = cscs_relation(xi1, xi2, reading);
  if (o.out == "table") {
    matrix_table(out, xi2.empty() ? "iM" : "dM", dm.doubled, true);
    matrix_table(out, "aM", am, false);
    matrix_table(out, "rM", rm, false);
    out << "conn: " << (cn.connected ? 1 : 0) << " (" << cn.components.size() << " components)\n";
    if (v) out << verdict_table(*v);
  } else {
    json comps = cn.components;
    json j{{xi2.empty() ? "iM" : "dM", matrix_json(dm.doubled, true)}, {"aM", matrix_json(am, false)}, {"rM", matrix_json(rm, false)},
           {"conn", cn.connected}, {"components", comps}, {"cdn_reading", to_string(reading)}};
    if (v) j["relation"] = verdict_json(*v);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_hidden(const Options& o, std::ostream& out, std::istream& in) {
  FullOACD d = FullOACD::build(load(o, in));
  auto hs = hidden_particles(d);
  if (o.out == "table") {
    for (const auto& h : hs) out << format_code(h.code) << " " << to_string(h.kind) << " " << h.provenance << "\n";
    out << hs.size() << " hidden\n";
  } else {
    json a = json::array();
    for (const auto& h : hs) a.push_back({{"code", format_code(h.code)}, {"kind", to_string(h.kind)}, {"provenance", h.provenance}});
    out << a.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Full-coded chromatic diagrams of planar point sets"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> outs{"json", "table", "svg"};

  auto* build = app.add_subcommand("build", "build a diagram and list its particles");
  add_input(build, o, true);
  build->add_option("--out", o.out)->check(CLI::IsMember(outs));

  auto* query = app.add_subcommand("query", "relation between two particle codes");
  query->add_option("codes", o.codes, "two codes, e.g. 36A038 25A058")->required()->expected(2);
  add_input(query, o, false);
  query->add_option("--out", o.out)->check(CLI::IsMember(outs));

  auto* verify = app.add_subcommand("verify", "run the property suite, or check one input");
  add_input(verify, o, false);
  verify->add_option("--seed", o.seed);
  verify->add_option("--n-min", o.n_min);
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--trials", o.trials);
  verify->add_option("--exhaustive-max-n", o.exhaustive_max_n, "skip pairwise scans above this n");
  verify->add_flag("--timing", o.timing, "include timings in the report");
  verify->add_option("--out", o.out)->check(CLI::IsMember(outs));

  auto* render = app.add_subcommand("render", "draw the diagram as SVG");
  add_input(render, o, true);
  render->add_option("--bbox", o.bbox, "x0,y0,x1,y1");
  render->add_flag("--edge-labels", o.edge_labels);
  render->add_option("--out", o.out)->check(CLI::IsMember({"svg"}));

  auto* matrix = app.add_subcommand("matrix", "distance, adjacency and reachability matrices of a cluster");
  matrix->add_option("codes", o.codes, "cell codes of the cluster")->required();
  matrix->add_option("--with", o.with, "cell codes of a second cluster");
  matrix->add_option("--cdn-reading", o.cdn_reading)->check(CLI::IsMember({"union", "cross"}));
  matrix->add_option("--out", o.out)->check(CLI::IsMember(outs));

  auto* hidden = app.add_subcommand("hidden", "candidate codes missing from the plane");
  add_input(hidden, o, true);
  hidden->add_option("--out", o.out)->check(CLI::IsMember(outs));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(o, out, in);
    if (*query) return cmd_query(o, out, in);
    if (*verify) {
      if (o.out.empty()) o.out = "table";
      return cmd_verify(o, out, in);
    }
    if (*render) return cmd_render(o, out, in);
    if (*matrix) return cmd_matrix(o, out);
    if (*hidden) return cmd_hidden(o, out, in);
  } catch (const DegenerateInputError& e) {
    if (o.out == "json") out << json{{"error", "DegenerateInput"}, {"validation", validation_json(e.report())}}.dump(2) << "\n";
    err << "degenerate input:\n" << e.report().describe() << "\n";
    return 2;
  } catch (const Error& e) {
    if (o.out == "json") out << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace oacd
