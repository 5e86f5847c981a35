#pragma once

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "poncelet/conic.hpp"
#include "poncelet/family.hpp"
#include "poncelet/fit.hpp"

namespace poncelet {

struct LocusTarget {
  enum class Kind { center, isogonal };
  Kind kind = Kind::center;
  int k = 2;
  Point P;

  static LocusTarget center_of(int k) { return {Kind::center, k, {}}; }
  static LocusTarget isogonal_of(Point P) { return {Kind::isogonal, 0, P}; }
};

struct LocusSamples {
  std::vector<double> theta;
  std::vector<Point> points;
  std::vector<bool> defined;
  std::size_t undefined = 0;
  // more than 20% of the samples were undefined
  bool mostly_at_infinity = false;

  std::vector<Point> defined_points() const;
};

// Samples at theta_k = 2 pi (k + 1/2) / N. Isogonal images use the pedal
// construction; samples farther than `far_cutoff` from the origin count as undefined.
LocusSamples sample_locus(const PonceletConfig& cfg, const LocusTarget& target, int N,
                          double far_cutoff = std::numeric_limits<double>::infinity());

struct OrthoLocusSpec {
  Point C4;
  double a4 = 0.0;  // along y
  double b4 = 0.0;  // along x
  double sigma = 0.0;

  EllipseSpec ellipse() const;
};

OrthoLocusSpec predict_x4_locus(const PonceletConfig& cfg);

struct IsogCircleSpec {
  Complex O_dag;
  double r_dag = 0.0;

  Circle circle() const { return {Point(O_dag), r_dag}; }
};

IsogCircleSpec predict_isog_circle(Complex f, Complex g, Complex P);

enum class Region { interior_R, exterior_R_inner, exterior_R_outer, boundary_R };

const char* to_string(Region r);

struct RegionVerdict {
  Region membership = Region::interior_R;
  std::optional<double> witness_u;
  double min_h = 0.0;
  double max_h = 0.0;
  double u_min = 0.0;
  double u_max = 0.0;
};

// |P - O(u)| - R(u) for the circumcircle of the family triangle at u.
double region_h(const PonceletConfig& cfg, Point P, double u);
RegionVerdict region_membership(const PonceletConfig& cfg, Point P, double tol = 1e-9, int grid = 512);

// Point of the region boundary on the ray from the caustic center along `direction`:
// the inner boundary leaves the set of points inside every circumcircle, the
// outer one the set of points inside some circumcircle.
Point region_boundary_point(const PonceletConfig& cfg, Point direction, bool inner);

struct ZPoint {
  Point z;
  double t = 0.0;
  double theta = 0.0;
  // distance from P to the side opposite z in the family triangle at theta
  double incidence = 0.0;
  bool tangent = false;
};

struct IsogLocusReport {
  LocusFit quartic;
  LocusFit conic_fit;
  ConicType type = ConicType::real_ellipse;
  // B^2 - 4AC of the unit conic in the fitting frame
  double discriminant = 0.0;
  std::vector<ZPoint> z_points;
  std::size_t excluded = 0;
};

IsogLocusReport classify_isog_locus(const PonceletConfig& cfg, Point P, int N = 256,
                                    double parabola_eps = 1e-6);

double boundary_quartic_eval(const PonceletConfig& cfg, double x, double y);
// Natural magnitude of the boundary quartic, a^8.
double boundary_quartic_scale(const PonceletConfig& cfg);

struct TangencyPoint {
  double t = 0.0;
  Point p;
  bool at_infinity = false;
};

struct TangencyReport {
  std::array<double, 5> quartic{};  // coefficient of t^k at index k
  std::vector<TangencyPoint> points;
  // real roots counted with multiplicity, plus the root at infinity on degree drop
  int real_roots = 0;
};

TangencyReport tangency_points(const PonceletConfig& cfg);

Point outer_rational_point(const PonceletConfig& cfg, double t);

struct LineLocus {
  Line line;
  Point Q;
  double delta = 0.0;
};

LineLocus degenerate_line_locus(const PonceletConfig& cfg, double t);

struct LineEnvelopeReport {
  LocusFit fit;
  ConicCoeffs numeric;
  ConicCoeffs closed_form;
  ConicCoeffs restored;
  double distance_closed_form = 0.0;
  double distance_restored = 0.0;
  Point center;
  Point caustic_center;
  // xy coefficient of the unit numeric conic
  double xy_term = 0.0;
  std::size_t points = 0;
  std::size_t gaps = 0;
};

LineEnvelopeReport line_locus_envelope(const PonceletConfig& cfg, int N = 256);

struct CircumLocusSpec {
  Point F3, F3p;
  double a3 = 0.0, b3 = 0.0, delta3 = 0.0, delta3p = 0.0;

  EllipseSpec ellipse() const;
};

CircumLocusSpec predict_x3_locus_circular(const PonceletConfig& cfg);

}  // namespace poncelet
