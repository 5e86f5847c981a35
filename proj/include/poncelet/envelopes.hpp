#pragma once

#include <array>
#include <string>
#include <vector>

#include "poncelet/conic.hpp"
#include "poncelet/envelope.hpp"
#include "poncelet/family.hpp"
#include "poncelet/fit.hpp"

namespace poncelet {

// Circumcircle of the family triangle at lambda = e^{iu}, from the closed form.
Circle circumcircle_at(const PonceletConfig& cfg, double u);

struct CircumEnvelope {
  Circle K1, K2;
  std::array<Point, 2> touch1, touch2;
};

CircumEnvelope circum_envelope_circles(const PonceletConfig& cfg);

// Radical axis of incircle and circumcircle at u, and its u-derivative.
Line radical_axis_at(const PonceletConfig& cfg, double u);
Line radical_axis_derivative(const PonceletConfig& cfg, double u);

// (x_c / a_tri)^2 + (y_c / b_tri)^2 - 1: negative inside the ellipse of equilateral centroids.
double equilateral_locus_level(const PonceletConfig& cfg);

struct RadicalEnvelopeReport {
  LocusFit fit;
  ConicCoeffs conic;
  ConicType type = ConicType::real_ellipse;
  double discriminant = 0.0;
  double rms = 0.0;
  double axis_angle = 0.0;
  // direction of F3F3', NaN when the two points coincide
  double focal_angle = 0.0;
  double axis_error = 0.0;
  double level = 0.0;
  std::vector<Point> points;
  std::vector<double> gaps;
};

RadicalEnvelopeReport radical_axis_envelope(const PonceletConfig& cfg, int N = 512, double parabola_eps = 1e-6);

Line x36_degenerate_line(const PonceletConfig& cfg, double tol = 1e-9);

struct L101Report {
  double max_tangency = 0.0;  // | dist(C, L101) - r |
  double max_x11 = 0.0;       // | foot of C on L101 - X11 |
  std::size_t samples = 0;
};

L101Report l101_envelope_check(const PonceletConfig& cfg, int N = 256);

struct AxisEnvelope {
  LocusFit fit;
  ConicType type = ConicType::real_ellipse;
  double discriminant = 0.0;
  double axis_angle = 0.0;
  std::size_t gaps = 0;
};

struct OrthicAxesReport {
  AxisEnvelope L3, L1;
};

OrthicAxesReport orthic_axes_envelope_probe(const PonceletConfig& cfg, int N = 512, double parabola_eps = 1e-6);

enum class ConjectureKind { circum_envelope, radical_axis };
const char* to_string(ConjectureKind k);

struct ConjectureReport {
  ConjectureKind which = ConjectureKind::circum_envelope;
  std::vector<double> residuals;
  bool conic_component = false;
  bool inseparable = false;
  double threshold = 1e-6;
  std::size_t gaps = 0;
};

ConjectureReport conjecture_probe(const PonceletConfig& cfg, ConjectureKind which, int N = 1024,
                                  double threshold = 1e-6);

}  // namespace poncelet
