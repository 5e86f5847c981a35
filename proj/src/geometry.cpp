#include "poncelet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace poncelet {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::identically_zero: return "identically_zero";
    case ErrorCode::degenerate_triangle: return "degenerate_triangle";
    case ErrorCode::degenerate_segment: return "degenerate_segment";
    case ErrorCode::concentric_circles: return "concentric_circles";
    case ErrorCode::not_an_ellipse: return "not_an_ellipse";
    case ErrorCode::rank_deficient: return "rank_deficient";
    case ErrorCode::stationary_family: return "stationary_family";
    case ErrorCode::no_poncelet_family: return "no_poncelet_family";
    case ErrorCode::degenerate_caustic: return "degenerate_caustic";
    case ErrorCode::undefined_center: return "undefined_center";
    case ErrorCode::conjugate_at_infinity: return "conjugate_at_infinity";
    case ErrorCode::on_side_line: return "on_side_line";
    case ErrorCode::denominator_vanishes: return "denominator_vanishes";
    case ErrorCode::pole: return "pole";
    case ErrorCode::degenerate_locus: return "degenerate_locus";
    case ErrorCode::q_at_infinity: return "q_at_infinity";
    case ErrorCode::not_on_equilateral_locus: return "not_on_equilateral_locus";
    case ErrorCode::undefined_envelope: return "undefined_envelope";
    case ErrorCode::inseparable: return "inseparable";
  }
  return "unknown";
}

Line Line::normalized() const {
  const double s = std::hypot(l, m);
  return {l / s, m / s, n / s};
}

Point EllipseSpec::at(double t) const {
  const double c = std::cos(rotation), s = std::sin(rotation);
  const double x = semi_major * std::cos(t), y = semi_minor * std::sin(t);
  return {center.x + c * x - s * y, center.y + s * x + c * y};
}

std::array<Point, 2> EllipseSpec::foci() const {
  const double e = std::sqrt(std::max(0.0, semi_major * semi_major - semi_minor * semi_minor));
  const Point d{e * std::cos(rotation), e * std::sin(rotation)};
  return {center - d, center + d};
}

double EllipseSpec::support(Point n) const {
  const double c = std::cos(rotation), s = std::sin(rotation);
  const double u = c * n.x + s * n.y, v = -s * n.x + c * n.y;
  return std::sqrt(semi_major * semi_major * u * u + semi_minor * semi_minor * v * v);
}

Triangle::Triangle(Point A, Point B, Point C) : v_{A, B, C} {
  for (const auto& p : v_) {
    if (!p.finite()) throw Error(ErrorCode::non_finite, "triangle vertex is not finite");
  }
  l_ = {distance(B, C), distance(C, A), distance(A, B)};
}

double Triangle::signed_area() const { return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]); }

double Triangle::diameter() const { return std::max({l_[0], l_[1], l_[2]}); }

Line Triangle::side_line(int i) const {
  return line_through(v_[static_cast<std::size_t>((i + 1) % 3)], v_[static_cast<std::size_t>((i + 2) % 3)]);
}

Circle circumcircle_of(Point A, Point B, Point C) {
  const Point b = B - A, c = C - A;
  const double d = 2.0 * cross(b, c);
  const double diam = std::max({distance(A, B), distance(B, C), distance(C, A)});
  if (std::abs(d) / 4.0 <= 1e-12 * diam * diam || diam == 0.0)
    throw Error(ErrorCode::degenerate_triangle, "degenerate triangle");
  const double b2 = b.squared_norm(), c2 = c.squared_norm();
  const Point o{(c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d};
  const Point center = A + o;
  const double r = (distance(center, A) + distance(center, B) + distance(center, C)) / 3.0;
  return {center, r};
}

Circle circumcircle_of(const Triangle& T) { return circumcircle_of(T.A(), T.B(), T.C()); }

Point foot_of_perpendicular(Point P, Point z, Point z2) {
  const Point d = z2 - z;
  const double dd = d.squared_norm();
  if (dd == 0.0) throw Error(ErrorCode::degenerate_segment, "degenerate segment");
  return z + (dot(P - z, d) / dd) * d;
}

Line line_through(Point p, Point q) {
  const Point d = q - p;
  if (d.squared_norm() == 0.0) throw Error(ErrorCode::degenerate_segment, "degenerate segment");
  return Line{d.y, -d.x, d.x * p.y - d.y * p.x}.normalized();
}

Point intersect(const Line& L1, const Line& L2) {
  const double det = L1.l * L2.m - L2.l * L1.m;
  if (det == 0.0) throw Error(ErrorCode::degenerate_segment, "parallel lines");
  return {(L1.m * L2.n - L2.m * L1.n) / det, (L2.l * L1.n - L1.l * L2.n) / det};
}

Line radical_axis(const Circle& c1, const Circle& c2) {
  const Point d = c2.center - c1.center;
  if (d.norm() <= 1e-12) throw Error(ErrorCode::concentric_circles, "concentric circles");
  // power1 - power2 = 0 is linear in (x, y)
  const double l = 2.0 * d.x, m = 2.0 * d.y;
  const double n = c1.center.squared_norm() - c2.center.squared_norm() - c1.radius * c1.radius +
                   c2.radius * c2.radius;
  return Line{l, m, n}.normalized();
}

double line_angle(Point direction) {
  double t = std::atan2(direction.y, direction.x);
  if (t < 0.0) t += std::numbers::pi;
  if (t >= std::numbers::pi) t -= std::numbers::pi;
  return t;
}

double angle_between_axes(double t1, double t2) {
  double d = std::fmod(std::abs(t1 - t2), std::numbers::pi);
  return std::min(d, std::numbers::pi - d);
}

}  // namespace poncelet
