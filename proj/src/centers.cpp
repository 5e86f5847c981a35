#include "poncelet/centers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace poncelet {

namespace {

void require_nondegenerate(const Triangle& T) {
  const double d = T.diameter();
  if (!(std::abs(T.signed_area()) > 1e-12 * d * d))
    throw Error(ErrorCode::degenerate_triangle, "degenerate triangle");
}

// Homogeneous degree of each table entry, for the "point at infinity" test.
int table_degree(int k) {
  switch (k) {
    case 1: return 1;
    case 2: return 0;
    case 3: return 4;
    case 4: return -2;
    case 5: return 4;
    case 11: return 3;
    case 36: return 4;
    case 40: return 1;
  }
  return 0;
}

double first_coordinate(int k, double l1, double l2, double l3) {
  switch (k) {
    case 1: return l1;
    case 2: return 1.0;
    case 3: return l1 * l1 * (l2 * l2 + l3 * l3 - l1 * l1);
    case 4: return 1.0 / (l2 * l2 + l3 * l3 - l1 * l1);
    case 5: return l1 * l1 * (l2 * l2 + l3 * l3) - (l2 * l2 - l3 * l3) * (l2 * l2 - l3 * l3);
    case 11: return (l2 + l3 - l1) * (l2 - l3) * (l2 - l3);
    case 36: return l1 * l1 * (l2 * l2 + l3 * l3 - l1 * l1 - l2 * l3);
    // the tabulated entry is trilinear; barycentrics carry the extra l1
    case 40: return l1 * (l2 / (l3 + l1 - l2) + l3 / (l1 + l2 - l3) - l1 / (l2 + l3 - l1));
  }
  throw Error(ErrorCode::invalid_argument, "unsupported center index X" + std::to_string(k));
}

Point orthocenter_by_altitudes(const Triangle& T) {
  // altitudes through the two vertices whose angles are farthest from right
  std::array<double, 3> d{};
  for (int i = 0; i < 3; ++i) {
    const double a = T.side(i), b = T.side((i + 1) % 3), c = T.side((i + 2) % 3);
    d[static_cast<std::size_t>(i)] = std::abs(b * b + c * c - a * a);
  }
  const int skip = static_cast<int>(std::min_element(d.begin(), d.end()) - d.begin());
  const int i = (skip + 1) % 3, j = (skip + 2) % 3;
  auto altitude = [&](int v) {
    const Point dir = T.vertex((v + 2) % 3) - T.vertex((v + 1) % 3);
    const Point p = T.vertex(v);
    return Line{dir.x, dir.y, -dot(dir, p)};
  };
  return intersect(altitude(i), altitude(j));
}

}  // namespace

const std::array<int, 8>& supported_centers() {
  static const std::array<int, 8> ks{1, 2, 3, 4, 5, 11, 36, 40};
  return ks;
}

bool is_supported_center(int k) {
  const auto& ks = supported_centers();
  return std::find(ks.begin(), ks.end(), k) != ks.end();
}

Barycentric barycentric_of(const Triangle& T, Point P) {
  const double area = T.signed_area();
  if (area == 0.0) throw Error(ErrorCode::degenerate_triangle, "degenerate triangle");
  const double u = 0.5 * cross(T.B() - P, T.C() - P) / area;
  const double v = 0.5 * cross(T.C() - P, T.A() - P) / area;
  const double w = 0.5 * cross(T.A() - P, T.B() - P) / area;
  return {u, v, w};
}

Point from_barycentric(const Triangle& T, const Barycentric& b) {
  const double s = b.u + b.v + b.w;
  return (b.u * T.A() + b.v * T.B() + b.w * T.C()) / s;
}

Barycentric center_barycentric(const Triangle& T, int k) {
  if (!is_supported_center(k))
    throw Error(ErrorCode::invalid_argument, "unsupported center index X" + std::to_string(k));
  const double l1 = T.l1(), l2 = T.l2(), l3 = T.l3();
  return {first_coordinate(k, l1, l2, l3), first_coordinate(k, l2, l3, l1), first_coordinate(k, l3, l1, l2)};
}

Point center(const Triangle& T, int k) {
  require_nondegenerate(T);
  if (k == 4) {
    const double l1 = T.l1(), l2 = T.l2(), l3 = T.l3();
    const double m = std::min({std::abs(l2 * l2 + l3 * l3 - l1 * l1), std::abs(l3 * l3 + l1 * l1 - l2 * l2),
                               std::abs(l1 * l1 + l2 * l2 - l3 * l3)});
    if (m <= 1e-9 * T.diameter() * T.diameter()) return orthocenter_by_altitudes(T);
  }
  const Barycentric b = center_barycentric(T, k);
  const double s = b.u + b.v + b.w;
  const double unit = std::pow(T.l1() + T.l2() + T.l3(), table_degree(k));
  if (!std::isfinite(s) || std::abs(s) <= 1e-12 * unit)
    throw Error(ErrorCode::undefined_center, "undefined center X" + std::to_string(k));
  return from_barycentric(T, b);
}

Point isogonal_pedal(Point P, const Triangle& T) {
  require_nondegenerate(T);
  const Point f1 = foot_of_perpendicular(P, T.B(), T.C());
  const Point f2 = foot_of_perpendicular(P, T.C(), T.A());
  const Point f3 = foot_of_perpendicular(P, T.A(), T.B());
  Circle pedal;
  try {
    pedal = circumcircle_of(f1, f2, f3);
  } catch (const Error&) {
    throw Error(ErrorCode::conjugate_at_infinity, "conjugate at infinity");
  }
  return 2.0 * pedal.center - P;
}

Point isogonal_barycentric(Point P, const Triangle& T) {
  require_nondegenerate(T);
  const Barycentric b = barycentric_of(T, P);
  const double eps = 1e-14;
  const bool zu = std::abs(b.u) <= eps, zv = std::abs(b.v) <= eps, zw = std::abs(b.w) <= eps;
  const int zeros = int(zu) + int(zv) + int(zw);
  if (zeros >= 2) throw Error(ErrorCode::on_side_line, "point is a vertex");
  if (zu) return T.A();
  if (zv) return T.B();
  if (zw) return T.C();
  const double l1 = T.l1(), l2 = T.l2(), l3 = T.l3();
  const Barycentric c{l1 * l1 * b.v * b.w, l2 * l2 * b.w * b.u, l3 * l3 * b.u * b.v};
  const double s = c.u + c.v + c.w;
  const double scale = std::abs(c.u) + std::abs(c.v) + std::abs(c.w);
  if (std::abs(s) <= 1e-13 * scale) throw Error(ErrorCode::conjugate_at_infinity, "conjugate at infinity");
  return from_barycentric(T, c);
}

Point isogonal_weaver(Point P, const SymmetricTriple& st) {
  const Complex p = P.complex(), pb = std::conj(p);
  const double den = 1.0 - std::norm(p);
  if (std::abs(den) <= 1e-12) throw Error(ErrorCode::denominator_vanishes, "denominator vanishes");
  return Point((pb * pb * st.s3 - pb * st.s2 + st.s1 - p) / den);
}

RationalIsogCoeffs rational_isog_coeffs(double a, double b, Complex f, Complex g, Point Pt) {
  const Complex P = Pt.complex();
  const Complex fb = std::conj(f), gb = std::conj(g), Pb = std::conj(P);
  const double a2 = a * a, b2 = b * b, a3 = a2 * a, b3 = b2 * b;
  const double apb = a + b, amb = a - b;
  const Complex fg = fb * gb * amb - a - b;
  RationalIsogCoeffs c;
  c.s2 = -(a2 - b2) * fg * Pb * P - (2 * a + 2 * b) * a * b * (fb + gb) * fg * Pb -
         (2 * a + 2 * b) * a * b * (fb + gb) * amb * P + apb * apb * fg * Pb * Pb +
         apb * a * b *
             ((gb * gb + 1.0) * (fb * fb + 1.0) * a2 - 2.0 * (fb + gb) * (fb + gb) * a * b -
              (1.0 - gb * gb) * (1.0 - fb * fb) * b2);
  c.s1 = -2 * a * b * (a2 - b2) * f * g * P - 2 * a * b * apb * fg * f * g * Pb +
         2 * a * b * apb * amb * amb * (fb + gb) * f * g - apb * amb * amb * f * P * Pb +
         amb * apb * apb * f * Pb * Pb - (2 * a + 2 * b) * a * b * (fb + gb) * amb * Pb * f +
         2 * a * b * apb * (fb * gb * amb * apb - a2 - b2) * f - apb * amb * amb * g * P * Pb +
         amb * apb * apb * g * Pb * Pb - (2 * a + 2 * b) * a * b * (fb + gb) * amb * Pb * g +
         2 * a * b * apb * (fb * gb * amb * apb - a2 - b2) * g + amb * apb * apb * (fb + gb) * Pb * P -
         2 * a * b * (fb * gb * amb * apb - 2 * a2 - 2 * b2) * P - apb * amb * amb * (fb + gb) * Pb * Pb +
         2 * a * b * amb * fg * Pb - 2 * a * b * amb * (a2 + b2) * (fb + gb);
  c.s0 = a * b * apb * amb * amb * f * f * g * g - 2 * a * b * amb * apb * f * f * g * Pb +
         amb * amb * amb * Pb * Pb + a * b * apb * amb * amb + a * b * amb * apb * apb * f * f -
         2 * a * b * amb * apb * f * g * g * Pb + amb * apb * apb * f * g * P * Pb -
         apb * amb * amb * f * g * Pb * Pb + 4 * a2 * b2 * amb * f * g - 2 * a * b * (a2 - b2) * f * P +
         2 * b * a * amb * amb * f * Pb + a * b * amb * apb * apb * g * g - 2 * a * b * (a2 - b2) * g * P +
         2 * a * b * amb * amb * Pb * g - apb * amb * amb * Pb * P;
  c.t2 = (a2 - b2) * (2.0 * (fb + gb) * a * b - (P - Pb) * (fb * gb - 1.0) * a - (P + Pb) * (fb * gb + 1.0) * b);
  c.t1 = (2.0 * f * g + 2.0 * fb * gb - 4.0) * a3 * b - (P - Pb) * (f + g - fb - gb) * a3 -
         (P + Pb) * (f + g + fb + gb) * a2 * b + (-2.0 * f * g - 2.0 * fb * gb - 4.0) * a * b3 +
         (P - Pb) * (f + g - fb - gb) * b2 * a + 8 * a * b * P * Pb + (P + Pb) * (f + g + fb + gb) * b3;
  c.t0 = (2.0 * f + 2.0 * g) * a3 * b + (P - Pb) * (f * g - 1.0) * a3 - (P + Pb) * (f * g + 1.0) * a2 * b +
         (-2.0 * f - 2.0 * g) * a * b3 - (P - Pb) * (f * g - 1.0) * b2 * a + (P + Pb) * (f * g + 1.0) * b3;
  return c;
}

Point isogonal_rational(const RationalIsogCoeffs& c, Complex lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw Error(ErrorCode::invalid_argument, "lambda must lie on the unit circle");
  const Complex num = c.s2 * lambda * lambda + c.s1 * lambda + c.s0;
  const Complex den = c.t2 * lambda * lambda + c.t1 * lambda + c.t0;
  const double scale = std::abs(c.t2) + std::abs(c.t1) + std::abs(c.t0);
  if (std::abs(den) <= 1e-12 * scale) throw Error(ErrorCode::pole, "pole at lambda");
  return Point(num / den);
}

SpecialCircles special_circles(const Triangle& T) {
  require_nondegenerate(T);
  SpecialCircles s;
  s.circumcircle = circumcircle_of(T);
  const double R = s.circumcircle.radius;
  s.incircle = {center(T, 1), 2.0 * std::abs(T.signed_area()) / (T.l1() + T.l2() + T.l3())};
  s.ninepoint = {center(T, 5), R / 2.0};
  s.bevan = {center(T, 40), 2.0 * R};
  return s;
}

}  // namespace poncelet
