#pragma once

#include <array>

#include "poncelet/family.hpp"
#include "poncelet/geometry.hpp"

namespace poncelet {

struct Barycentric {
  double u = 1.0, v = 1.0, w = 1.0;
};

// Signed-area barycentrics normalized to u + v + w = 1.
Barycentric barycentric_of(const Triangle& T, Point P);
Point from_barycentric(const Triangle& T, const Barycentric& b);

bool is_supported_center(int k);
const std::array<int, 8>& supported_centers();

// Homogeneous table coordinates of X_k (k in 1, 2, 3, 4, 5, 11, 36, 40).
Barycentric center_barycentric(const Triangle& T, int k);
Point center(const Triangle& T, int k);

Point isogonal_pedal(Point P, const Triangle& T);
Point isogonal_barycentric(Point P, const Triangle& T);
// Triangle inscribed in the unit circle, given by its symmetric functions.
Point isogonal_weaver(Point P, const SymmetricTriple& st);

struct RationalIsogCoeffs {
  Complex s0, s1, s2, t0, t1, t2;
};

RationalIsogCoeffs rational_isog_coeffs(double a, double b, Complex f, Complex g, Point P);
Point isogonal_rational(const RationalIsogCoeffs& c, Complex lambda);

struct SpecialCircles {
  Circle incircle, circumcircle, ninepoint, bevan;
};

SpecialCircles special_circles(const Triangle& T);

}  // namespace poncelet
