#pragma once

#include <vector>

#include "poncelet/conic.hpp"

namespace poncelet {

enum class Basis { conic6, quartic9 };

const char* to_string(Basis b);

// Result of an algebraic least-squares fit.
//
// conic6 coefficients are (A, B, C, D, E, F); quartic9 coefficients are
// (k40, k22, k04, k20, k11, k02, k10, k01, k00). Both are unit norm with the
// first nonzero entry positive. `normalized` holds the same curve written in
// the fitting frame p' = (p - frame_center) / frame_scale.
struct LocusFit {
  Basis basis = Basis::conic6;
  std::vector<double> coeffs;
  std::vector<double> normalized;
  Point frame_center;
  double frame_scale = 1.0;
  double residual = 0.0;
  std::size_t samples = 0;
  bool collinear = false;

  ConicCoeffs conic() const;
  ConicCoeffs normalized_conic() const;
  // (|k40| + |k22| + |k04|) / norm, measured in the fitting frame; 0 for conic6.
  double quartic_weight() const;
  ConicType type(double eps_class = 1e-8) const { return classify_conic(conic(), eps_class); }
};

LocusFit fit_curve(const std::vector<Point>& points, Basis basis);

// Root-mean-square of the geometric distance from points to a circle.
double circle_rms(const std::vector<Point>& points, const Circle& c);

}  // namespace poncelet
