#pragma once

#include <array>
#include <optional>

#include "poncelet/conic.hpp"
#include "poncelet/geometry.hpp"

namespace poncelet {

struct CircularCaustic {
  Point center;
  double radius = 0.0;
};

// Outer ellipse x^2/a^2 + y^2/b^2 = 1 and the foci f, g of the caustic's
// preimage under (x, y) -> (a x, b y).
struct PonceletConfig {
  double a = 1.0;
  double b = 1.0;
  Complex f{0.0, 0.0};
  Complex g{0.0, 0.0};
  std::optional<CircularCaustic> circular;

  double c2() const { return a * a - b * b; }
  AffineMap map() const { return {a, b}; }
  Point caustic_center() const { return map()((f + g) / 2.0); }
  Point outer_point(double t) const { return {a * std::cos(t), b * std::sin(t)}; }
};

PonceletConfig make_config(double a, double b, Complex f, Complex g);
PonceletConfig config_circular_caustic(double a, double b, double xc, double yc);

struct SymmetricTriple {
  Complex s1, s2, s3;
};

SymmetricTriple symmetric_triple(Complex f, Complex g, Complex lambda);

// Unit-circle preimages of the vertices at lambda = e^{i theta}, by argument.
std::array<Complex, 3> preimage_vertices(const PonceletConfig& cfg, double theta);
Triangle triangle_at(const PonceletConfig& cfg, double theta);

// The caustic recovered as the conic tangent to sampled side lines.
EllipseSpec caustic_recover(const PonceletConfig& cfg, int thetas = 16);

// Foci of the preimage of an ellipse under (x, y) -> (a x, b y), ordered by
// imaginary part and then real part.
std::array<Complex, 2> preimage_foci(const EllipseSpec& e, double a, double b);

// Largest distance between a side line and the parallel tangent of the caustic.
double closure_residual(const Triangle& T, const EllipseSpec& caustic);

// The parameter theta at which a point of the outer ellipse is a vertex.
double vertex_theta(const PonceletConfig& cfg, Point Z);

EllipseSpec equilateral_centroid_locus(double a, double b);

}  // namespace poncelet
