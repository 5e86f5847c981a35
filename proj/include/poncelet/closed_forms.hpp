#pragma once

// Closed-form polynomials evaluated term by term. Arguments are the outer
// semi-axes a, b, the caustic preimage foci (fx, fy), (gx, gy) and the
// evaluation point.

namespace poncelet::closed_form {

// Boundary of the region swept by the circumcircle.
double boundary_quartic(double a, double b, double fx, double fy, double gx, double gy, double x, double y);

// Line containing the isogonal locus of the outer-ellipse point with parameter t.
double line_locus(double a, double b, double fx, double fy, double gx, double gy, double t, double x, double y);

struct ExcludedPoint {
  double qx, qy, delta;
};

// Raw numerators and denominator of the excluded point [qx, qy / 2] / delta.
ExcludedPoint excluded_point(double a, double b, double fx, double fy, double gx, double gy, double t);

// Envelope of the line loci. `restored` adds the 3 (gx^2 + gy^2)^2 term that
// mirrors the f-side term of the a^4 b^4 block.
double line_envelope(double a, double b, double fx, double fy, double gx, double gy, double x, double y,
                     bool restored);

}  // namespace poncelet::closed_form
