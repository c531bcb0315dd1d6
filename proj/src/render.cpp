#include "visguard/render.hpp"

#include <cstdio>

namespace visguard {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void line(std::string& svg, Point a, Point b, const char* stroke, double width,
          const char* extra = "") {
  svg += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
         num(b.x) + "\" y2=\"" + num(b.y) + "\" stroke=\"" + stroke +
         "\" stroke-width=\"" + num(width) + "\"" + extra + "/>\n";
}

void circle(std::string& svg, Point c, double r, const char* fill,
            const char* cls) {
  svg += "  <circle class=\"" + std::string(cls) + "\" cx=\"" + num(c.x) +
         "\" cy=\"" + num(c.y) + "\" r=\"" + num(r) + "\" fill=\"" + fill +
         "\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& scene, const GuardSet* guards) {
  const Polygon& poly = scene.polygon;
  const Point lo = poly.bbox_min();
  const Point hi = poly.bbox_max();
  const double w = hi.x - lo.x;
  const double h = hi.y - lo.y;
  const double margin = 0.05 * std::max(w, h);
  const double stroke = std::max(w, h) / 400.0;
  const double marker = std::max(w, h) / 80.0;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         num(lo.x - margin) + " " + num(-(hi.y + margin)) + " " +
         num(w + 2.0 * margin) + " " + num(h + 2.0 * margin) + "\">\n";
  // Flip y so the rendering matches the usual mathematical convention.
  svg += "<g transform=\"scale(1,-1)\">\n";

  svg += "  <path fill=\"#f4f1e8\" stroke=\"#333333\" stroke-width=\"" +
         num(stroke * 2.0) + "\" d=\"M";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly.vertex(i);
    if (i) svg += " L";
    svg += " " + num(p.x) + " " + num(p.y);
  }
  svg += " Z\"/>\n";

  for (std::size_t i : poly.reflex_indices()) {
    circle(svg, poly.vertex(i), marker * 0.8, "#c0392b", "reflex");
  }

  line(svg, scene.source.a, scene.source.b, "#1f618d", stroke * 3.0);
  line(svg, scene.target.a, scene.target.b, "#1e8449", stroke * 3.0);

  if (guards) {
    for (const IterationRecord& rec : guards->trace) {
      if (rec.lbv_x.present() && rec.t_x) {
        line(svg, rec.x_point, *rec.lbv_x.vertex, "#8e44ad", stroke,
             " stroke-dasharray=\"0.12 0.08\"");
        line(svg, *rec.lbv_x.vertex, *rec.t_x, "#8e44ad", stroke,
             " stroke-dasharray=\"0.12 0.08\"");
      }
      if (rec.rbv_y.present() && rec.t_y) {
        line(svg, rec.y_point, *rec.rbv_y.vertex, "#d35400", stroke,
             " stroke-dasharray=\"0.12 0.08\"");
        line(svg, *rec.rbv_y.vertex, *rec.t_y, "#d35400", stroke,
             " stroke-dasharray=\"0.12 0.08\"");
      }
    }
    for (const Point& g : guards->guards) {
      circle(svg, g, marker, "#1f618d", "guard");
    }
  }

  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace visguard
