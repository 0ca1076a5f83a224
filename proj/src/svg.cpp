#include "yao/svg.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace yao {

namespace {

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  return fmt::format("{:.6f}", v);
}

}  // namespace

std::string render_svg(const YaoGraph& g, const Walk* overlay) {
  const PointSet& pts = g.points();
  auto sx = [&](const Point& p) { return pts.to_input_units(p.x); };
  auto sy = [&](const Point& p) { return -pts.to_input_units(p.y); };

  double min_x = sx(pts[0]), max_x = min_x, min_y = sy(pts[0]), max_y = min_y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, sx(p));
    max_x = std::max(max_x, sx(p));
    min_y = std::min(min_y, sy(p));
    max_y = std::max(max_y, sy(p));
  }
  double extent = std::max(max_x - min_x, max_y - min_y);
  if (extent <= 0.0) extent = 1.0;
  const double w = std::max(max_x - min_x, extent * 1e-3);
  const double h = std::max(max_y - min_y, extent * 1e-3);
  const double mx = 0.05 * w;
  const double my = 0.05 * h;
  const double radius = 0.006 * extent;
  const double stroke = 0.002 * extent;

  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"800\" "
      "height=\"{}\">\n",
      num(min_x - mx), num(min_y - my), num(w + 2 * mx), num(h + 2 * my),
      static_cast<int>(800.0 * (h + 2 * my) / (w + 2 * mx) + 0.5));
  out += fmt::format(
      "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
      "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
      "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555555\"/></marker></defs>\n");
  out += fmt::format(
      "<g class=\"edges\" stroke=\"#555555\" stroke-width=\"{}\" fill=\"none\">\n", num(stroke));
  for (const DirectedEdge& e : g.edges()) {
    const Point& a = g.point(e.source);
    const Point& b = g.point(e.target);
    out += fmt::format(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" marker-end=\"url(#arrow)\"/>\n",
        num(sx(a)), num(sy(a)), num(sx(b)), num(sy(b)));
  }
  out += "</g>\n";
  if (overlay) {
    std::string coords;
    for (NodeId id : overlay->nodes()) {
      if (!coords.empty()) coords += ' ';
      coords += num(sx(g.point(id))) + "," + num(sy(g.point(id)));
    }
    out += fmt::format(
        "<polyline class=\"overlay\" points=\"{}\" stroke=\"#d62728\" stroke-width=\"{}\" "
        "fill=\"none\"/>\n",
        coords, num(3 * stroke));
  }
  out += "<g class=\"nodes\" fill=\"#1f77b4\">\n";
  for (const Point& p : pts) {
    out += fmt::format("<circle id=\"n{}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", p.id, num(sx(p)),
                       num(sy(p)), num(radius));
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace yao
