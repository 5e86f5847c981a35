#pragma once

#include <array>
#include <string>

#include "poncelet/geometry.hpp"

namespace poncelet {

enum class ConicType {
  real_ellipse,
  circle,
  parabola,
  hyperbola,
  intersecting_lines,
  parallel_lines,
  single_line,
  point,
  empty,
};

const char* to_string(ConicType t);

// A x^2 + B xy + C y^2 + D x + E y + F = 0, kept at unit norm with the first
// nonzero coefficient positive.
struct ConicCoeffs {
  std::array<double, 6> k{0, 0, 0, 0, 0, 0};

  ConicCoeffs() = default;
  ConicCoeffs(double A, double B, double C, double D, double E, double F);
  static ConicCoeffs raw(const std::array<double, 6>& k);

  double A() const { return k[0]; }
  double B() const { return k[1]; }
  double C() const { return k[2]; }
  double D() const { return k[3]; }
  double E() const { return k[4]; }
  double F() const { return k[5]; }

  double eval(Point p) const;
  Point gradient(Point p) const;
  // B^2 - 4AC of the stored (unit norm) coefficients.
  double discriminant() const { return k[1] * k[1] - 4.0 * k[0] * k[2]; }
  // Center of a central conic; throws for parabolic ones.
  Point center() const;
  // Coefficients after substituting x -> x + t.x, y -> y + t.y (the curve moves by -t).
  ConicCoeffs translated(Point t) const;
};

// Distance between coefficient vectors, minimized over the sign ambiguity.
double coefficient_distance(const ConicCoeffs& p, const ConicCoeffs& q);

ConicType classify_conic(const ConicCoeffs& c, double eps_class = 1e-8);

EllipseSpec ellipse_from_conic(const ConicCoeffs& c, double eps_class = 1e-8);
ConicCoeffs conic_from_ellipse(const EllipseSpec& e);
ConicCoeffs conic_from_circle(const Circle& c);

// Direction angle in [0, pi) of the principal axis: the major axis of an
// ellipse, the transverse axis of a hyperbola, the symmetry axis of a parabola.
double principal_axis_angle(const ConicCoeffs& c);

// Pulls a conic through the affine map, giving the conic {p : A(p) in c}.
ConicCoeffs pullback(const ConicCoeffs& c, const AffineMap& map);

}  // namespace poncelet
