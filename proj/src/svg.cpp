#include "poncelet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace poncelet {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

void SvgScene::grow(Point p) {
  if (!p.finite()) return;
  xmin_ = std::min(xmin_, p.x);
  xmax_ = std::max(xmax_, p.x);
  ymin_ = std::min(ymin_, p.y);
  ymax_ = std::max(ymax_, p.y);
}

void SvgScene::polyline(const std::vector<Point>& pts, const std::string& stroke, double width, bool closed,
                        const std::string& dash) {
  for (const auto& p : pts) grow(p);
  items_.push_back({Item::poly, pts, 0.0, stroke, dash, "", width, closed});
}

void SvgScene::circle(const Circle& c, const std::string& stroke, double width, const std::string& dash) {
  grow(c.center + Point{c.radius, c.radius});
  grow(c.center - Point{c.radius, c.radius});
  items_.push_back({Item::circ, {c.center}, c.radius, stroke, dash, "", width, false});
}

void SvgScene::dot(Point p, const std::string& fill, double radius_px) {
  grow(p);
  items_.push_back({Item::pt, {p}, radius_px, fill, "", "", 0.0, false});
}

void SvgScene::segment(Point p, Point q, const std::string& stroke, double width) {
  polyline({p, q}, stroke, width);
}

void SvgScene::label(Point p, const std::string& text, const std::string& fill) {
  items_.push_back({Item::text, {p}, 0.0, fill, "", text, 0.0, false});
}

std::string SvgScene::render() const {
  double x0 = xmin_, x1 = xmax_, y0 = ymin_, y1 = ymax_;
  if (!(x1 > x0)) x0 -= 1, x1 += 1;
  if (!(y1 > y0)) y0 -= 1, y1 += 1;
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  const double s = width_ / (x1 - x0);
  const double height = (y1 - y0) * s;
  auto X = [&](double x) { return num((x - x0) * s); };
  auto Y = [&](double y) { return num((y1 - y) * s); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width_) << ' ' << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  for (const auto& it : items_) {
    const std::string dash = it.dash.empty() ? "" : " stroke-dasharray=\"" + it.dash + "\"";
    switch (it.kind) {
      case Item::poly: {
        std::ostringstream d;
        bool pen = false;
        for (const auto& p : it.pts) {
          if (!p.finite()) {
            pen = false;
            continue;
          }
          d << (pen ? " L" : (d.tellp() > 0 ? " M" : "M")) << X(p.x) << ' ' << Y(p.y);
          pen = true;
        }
        if (it.closed) d << " Z";
        out << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\"" << it.color << "\" stroke-width=\""
            << num(it.width) << "\"" << dash << "/>\n";
        break;
      }
      case Item::circ:
        out << "<circle cx=\"" << X(it.pts[0].x) << "\" cy=\"" << Y(it.pts[0].y) << "\" r=\"" << num(it.r * s)
            << "\" fill=\"none\" stroke=\"" << it.color << "\" stroke-width=\"" << num(it.width) << "\"" << dash
            << "/>\n";
        break;
      case Item::pt:
        out << "<circle cx=\"" << X(it.pts[0].x) << "\" cy=\"" << Y(it.pts[0].y) << "\" r=\"" << num(it.r)
            << "\" fill=\"" << it.color << "\"/>\n";
        break;
      case Item::text:
        out << "<text x=\"" << X(it.pts[0].x) << "\" y=\"" << Y(it.pts[0].y) << "\" font-size=\"12\" fill=\""
            << it.color << "\">" << it.text_value << "</text>\n";
        break;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace poncelet
