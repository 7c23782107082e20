#include "lf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "lf/error.hpp"

namespace lf {

namespace {

struct P {
  double x, y;
};

P operator+(P a, P b) { return {a.x + b.x, a.y + b.y}; }
P operator-(P a, P b) { return {a.x - b.x, a.y - b.y}; }
P operator*(double s, P a) { return {s * a.x, s * a.y}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

std::string pt(P p) { return fmt(p.x) + "," + fmt(p.y); }

constexpr double kSize = 600, kMargin = 40, kGap = 9, kDot = 4;

std::vector<P> layout(const Diagram& d) {
  const int n = d.node_count();
  std::vector<P> pos(n);
  bool all = true;
  for (const auto& node : d.nodes) all = all && node.position.has_value();
  if (all) {
    for (int i = 0; i < n; ++i) pos[i] = {d.nodes[i].position->x.get_d(), -d.nodes[i].position->y.get_d()};
  } else {
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) pos[i] = {std::cos(2 * pi * i / n), std::sin(2 * pi * i / n)};
  }
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || pos[i].x < minx) minx = pos[i].x;
    if (i == 0 || pos[i].x > maxx) maxx = pos[i].x;
    if (i == 0 || pos[i].y < miny) miny = pos[i].y;
    if (i == 0 || pos[i].y > maxy) maxy = pos[i].y;
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  for (auto& p : pos) p = {kMargin + (p.x - minx) * scale, kMargin + (p.y - miny) * scale};
  return pos;
}

// Point of the quadratic Bezier (a, c, b) at t.
P bezier(P a, P c, P b, double t) { return (1 - t) * (1 - t) * a + 2 * (1 - t) * t * c + t * t * b; }

}  // namespace

std::string render_svg(const Diagram& d) {
  const std::vector<P> pos = layout(d);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
      << kSize << ' ' << kSize << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Parallel edges and loops get separate bends.
  std::map<std::pair<int, int>, int> multiplicity;
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const DiagramEdge& ed = d.edges[e];
    const P a = pos[ed.tail], b = pos[ed.head];
    const int k = multiplicity[{std::min(ed.tail, ed.head), std::max(ed.tail, ed.head)}]++;
    P c;
    P bb = b;
    if (ed.tail == ed.head) {
      const double ang = 0.9 * (k + 1);
      const double r = 60;
      c = a + P{r * std::cos(ang), r * std::sin(ang)};
      bb = a;
      // A loop is drawn as two bends through the far point c.
    } else {
      const P mid = 0.5 * (a + b);
      const P dir = b - a;
      const double len = std::hypot(dir.x, dir.y);
      const double bend = (k == 0 ? 0.0 : (k % 2 ? 1.0 : -1.0) * 30.0 * ((k + 1) / 2));
      c = mid + (bend / std::max(len, 1e-9)) * P{-dir.y, dir.x};
    }
    double t0 = 0, t1 = 1;
    const double len = std::hypot((bb - a).x, (bb - a).y) + std::hypot((c - a).x, (c - a).y);
    const double gap = ed.tail == ed.head ? 0 : kGap / std::max(len, 1e-9);
    if (d.nodes[ed.tail].kind == NodeKind::Crossing && d.nodes[ed.tail].crossing.under_out == static_cast<int>(e)) t0 = gap;
    if (d.nodes[ed.head].kind == NodeKind::Crossing && d.nodes[ed.head].crossing.under_in == static_cast<int>(e)) t1 = 1 - gap;
    out << "<path d=\"";
    if (ed.tail == ed.head) {
      const P side = P{-(c - a).y, (c - a).x};
      const P c1 = c + 0.5 * side, c2 = c - 0.5 * side;
      out << "M " << pt(a) << " Q " << pt(c1) << ' ' << pt(c) << " Q " << pt(c2) << ' ' << pt(a);
    } else {
      // Control point of the sub-curve on [t0, t1].
      const P s = bezier(a, c, bb, t0), f = bezier(a, c, bb, t1);
      const P cc = (1 - t0) * (1 - t1) * a + ((1 - t0) * t1 + t0 * (1 - t1)) * c + t0 * t1 * bb;
      out << "M " << pt(s) << " Q " << pt(cc) << ' ' << pt(f);
    }
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    if (ed.tail != ed.head) {
      const P m = bezier(a, c, bb, 0.5);
      const P tan = (bb - a);
      const double tl = std::max(std::hypot(tan.x, tan.y), 1e-9);
      const P u = (1 / tl) * tan, nrm = {-u.y, u.x};
      const P tip = m + 6 * u, l = m - 4 * u + 4 * nrm, r = m - 4 * u - 4 * nrm;
      out << "<polygon points=\"" << pt(tip) << ' ' << pt(l) << ' ' << pt(r) << "\" fill=\"black\"/>\n";
    }
  }
  for (int i = 0; i < d.node_count(); ++i) {
    if (d.nodes[i].kind != NodeKind::Graph) continue;
    out << "<circle cx=\"" << fmt(pos[i].x) << "\" cy=\"" << fmt(pos[i].y) << "\" r=\"" << kDot << "\" fill=\"black\"/>\n";
    out << "<text x=\"" << fmt(pos[i].x + 6) << "\" y=\"" << fmt(pos[i].y - 6)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << d.nodes[i].name << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const PlanarScene& scene) { return render_svg(build_diagram(scene)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IOError, "cannot open " + path);
  f << text;
  if (!f) throw Error(ErrorCode::IOError, "cannot write " + path);
}

void write_svg(const Diagram& d, const std::string& path) { write_text_file(path, render_svg(d)); }

}  // namespace lf
