#pragma once

#include <array>

#include "poncelet/types.hpp"

namespace poncelet {

struct Circle {
  Point center;
  double radius = 0.0;

  double power(Point p) const { return (p - center).squared_norm() - radius * radius; }
};

// l x + m y + n = 0
struct Line {
  double l = 0.0;
  double m = 1.0;
  double n = 0.0;

  double eval(Point p) const { return l * p.x + m * p.y + n; }
  double distance(Point p) const { return std::abs(eval(p)) / std::hypot(l, m); }
  Point normal() const { return {l, m}; }
  Point direction() const { return {-m, l}; }
  // Scaled so that (l, m) is a unit vector.
  Line normalized() const;
};

struct EllipseSpec {
  Point center;
  double semi_major = 1.0;
  double semi_minor = 1.0;
  double rotation = 0.0;

  Point at(double t) const;
  std::array<Point, 2> foci() const;
  // Distance from the center of the tangent line with outward unit normal n.
  double support(Point n) const;
};

struct AffineMap {
  double a = 1.0;
  double b = 1.0;

  Point operator()(Point p) const { return {a * p.x, b * p.y}; }
  Point operator()(Complex z) const { return {a * z.real(), b * z.imag()}; }
  Point inverse(Point p) const { return {p.x / a, p.y / b}; }
};

class Triangle {
 public:
  Triangle(Point A, Point B, Point C);

  const Point& A() const { return v_[0]; }
  const Point& B() const { return v_[1]; }
  const Point& C() const { return v_[2]; }
  const Point& vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
  const std::array<Point, 3>& vertices() const { return v_; }

  // l1 = |BC|, l2 = |CA|, l3 = |AB|
  double l1() const { return l_[0]; }
  double l2() const { return l_[1]; }
  double l3() const { return l_[2]; }
  double side(int i) const { return l_[static_cast<std::size_t>(i)]; }

  double signed_area() const;
  double diameter() const;
  // Side opposite vertex i.
  Line side_line(int i) const;

 private:
  std::array<Point, 3> v_;
  std::array<double, 3> l_;
};

Circle circumcircle_of(Point A, Point B, Point C);
Circle circumcircle_of(const Triangle& T);

Point foot_of_perpendicular(Point P, Point z, Point z2);

Line line_through(Point p, Point q);
Point intersect(const Line& L1, const Line& L2);
Line radical_axis(const Circle& c1, const Circle& c2);

// Angle of the line direction in [0, pi).
double line_angle(Point direction);
// Difference of two undirected directions, in [0, pi/2].
double angle_between_axes(double t1, double t2);

}  // namespace poncelet
