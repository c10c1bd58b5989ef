#include "oacd/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace oacd {

namespace {

using Poly = std::vector<Point2>;

// Keeps the part of poly where sgn(eval) is 0 or matches want.
Poly clip(const Poly& poly, const Bisector& l, int want) {
  Poly out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % m];
    Rational fa = l.eval(a), fb = l.eval(b);
    bool ina = sgn(fa) * want >= 0, inb = sgn(fb) * want >= 0;
    if (ina) out.push_back(a);
    if (ina != inb && fa != fb) {
      Rational t = fa / (fa - fb);
      Point2 p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      if (!(p == a) && !(p == b)) out.push_back(p);
    }
  }
  return out;
}

Poly box_poly(const BBox& b) { return {{b.x0, b.y0}, {b.x1, b.y0}, {b.x1, b.y1}, {b.x0, b.y1}}; }

// Chord of a line through the box, ordered along its direction.
std::optional<std::pair<Point2, Point2>> chord(const Bisector& l, const BBox& b) {
  Poly p = clip(box_poly(b), l, 1);
  std::vector<Point2> on;
  for (const auto& q : p)
    if (sgn(l.eval(q)) == 0 && std::find(on.begin(), on.end(), q) == on.end()) on.push_back(q);
  if (on.size() < 2) return std::nullopt;
  Point2 dir = l.direction();
  auto t = [&](const Point2& q) { return Rational(q.x * dir.x + q.y * dir.y); };
  auto [lo, hi] = std::minmax_element(on.begin(), on.end(), [&](const Point2& x, const Point2& y) { return t(x) < t(y); });
  return std::make_pair(*lo, *hi);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

BBox parse_bbox(std::string_view text) {
  std::vector<Rational> v;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 4 || v[0] >= v[2] || v[1] >= v[3]) throw Error(ErrorCode::BadInput, "bbox must be x0,y0,x1,y1 with x0<x1, y0<y1");
  return {v[0], v[1], v[2], v[3]};
}

BBox default_bbox(const FullOACD& d) {
  std::vector<Point2> pts = d.generators().points();
  for (const auto& v : d.arrangement().vertices()) pts.push_back(v.location);
  BBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  Rational w = b.x1 - b.x0, h = b.y1 - b.y0;
  Rational pad = std::max(w, h) / 5 + 1;
  b.x0 -= pad;
  b.y0 -= pad;
  b.x1 += pad;
  b.y1 += pad;
  return b;
}

std::string render_svg(const FullOACD& d, const RenderOptions& options) {
  const BBox b = options.bbox.value_or(default_bbox(d));
  for (const auto& p : d.generators().points())
    if (!(p.x > b.x0 && p.x < b.x1 && p.y > b.y0 && p.y < b.y1))
      throw Error(ErrorCode::BboxTooSmall, "generator " + to_string(p) + " is not strictly inside the box");
  const auto& a = d.arrangement();
  const double x0 = to_double(b.x0), y1 = to_double(b.y1);
  const double scale = options.width / to_double(b.x1 - b.x0);
  const double height = to_double(b.y1 - b.y0) * scale;
  auto sx = [&](const Rational& x) { return num((to_double(x) - x0) * scale); };
  auto sy = [&](const Rational& y) { return num((y1 - to_double(y)) * scale); };
  auto code_at = [&](Dim dim, int id) { return format_code(d.particles()[d.particle_of({dim, id})].code); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(options.width) << " " << num(height) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(options.width) << "\" height=\"" << num(height) << "\" fill=\"white\" stroke=\"black\"/>\n";

  os << "<g id=\"cells\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (std::size_t f = 0; f < a.faces().size(); ++f) {
    const SignVector& sv = a.label({Dim::Face, static_cast<int>(f)});
    Poly poly = box_poly(b);
    for (std::size_t l = 0; l < sv.size() && poly.size() >= 3; ++l) poly = clip(poly, a.bisectors()[l], sv[l] == Sign::Neg ? -1 : 1);
    if (poly.size() < 3) continue;
    double cx = 0, cy = 0;
    os << "<polygon fill=\"none\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      os << (i ? " " : "") << sx(poly[i].x) << "," << sy(poly[i].y);
      cx += to_double(poly[i].x);
      cy += to_double(poly[i].y);
    }
    cx /= static_cast<double>(poly.size());
    cy /= static_cast<double>(poly.size());
    os << "\"/>\n<text x=\"" << num((cx - x0) * scale) << "\" y=\"" << num((y1 - cy) * scale) << "\">" << code_at(Dim::Face, static_cast<int>(f)) << "</text>\n";
  }
  os << "</g>\n";

  os << "<g id=\"bisectors\" stroke=\"#1f4e9c\" stroke-width=\"1.2\">\n";
  for (const auto& l : a.bisectors()) {
    auto c = chord(l, b);
    if (!c) continue;
    os << "<line data-bisector=\"" << l.i << "," << l.j << "\" x1=\"" << sx(c->first.x) << "\" y1=\"" << sy(c->first.y) << "\" x2=\"" << sx(c->second.x)
       << "\" y2=\"" << sy(c->second.y) << "\"/>\n";
  }
  os << "</g>\n";

  if (options.edge_labels) {
    os << "<g id=\"edges\" font-family=\"monospace\" font-size=\"9\" fill=\"#555\" text-anchor=\"middle\">\n";
    for (std::size_t e = 0; e < a.edges().size(); ++e) {
      const auto& ed = a.edges()[e];
      const auto& l = a.bisectors()[ed.carrier];
      auto c = chord(l, b);
      if (!c) continue;
      Point2 dir = l.direction();
      auto t = [&](const Point2& q) { return Rational(q.x * dir.x + q.y * dir.y); };
      Point2 lo = c->first, hi = c->second;
      if (ed.from >= 0 && t(a.vertices()[ed.from].location) > t(lo)) lo = a.vertices()[ed.from].location;
      if (ed.to >= 0 && t(a.vertices()[ed.to].location) < t(hi)) hi = a.vertices()[ed.to].location;
      if (!(t(lo) < t(hi))) continue;
      Point2 m{(lo.x + hi.x) / 2, (lo.y + hi.y) / 2};
      os << "<text x=\"" << sx(m.x) << "\" y=\"" << sy(m.y) << "\">" << code_at(Dim::Edge, static_cast<int>(e)) << "</text>\n";
    }
    os << "</g>\n";
  }

  os << "<g id=\"vertices\">\n";
  for (std::size_t v = 0; v < a.vertices().size(); ++v) {
    const auto& vx = a.vertices()[v];
    const Point2& p = vx.location;
    if (!(p.x >= b.x0 && p.x <= b.x1 && p.y >= b.y0 && p.y <= b.y1)) continue;
    if (vx.kind == VertexKind::TwoI)
      os << "<circle class=\"v2I\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" fill=\"black\"/>\n";
    else
      os << "<circle class=\"v3I\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"5\" fill=\"white\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"generators\" font-family=\"monospace\" font-size=\"11\" fill=\"#c0392b\">\n";
  for (std::size_t i = 0; i < d.n(); ++i) {
    const Point2& p = d.generators()[i];
    os << "<rect x=\"" << num((to_double(p.x) - x0) * scale - 3) << "\" y=\"" << num((y1 - to_double(p.y)) * scale - 3)
       << "\" width=\"6\" height=\"6\"/>\n";
    os << "<text x=\"" << num((to_double(p.x) - x0) * scale + 5) << "\" y=\"" << num((y1 - to_double(p.y)) * scale - 5) << "\">p" << i << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace oacd
