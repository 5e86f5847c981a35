#include "poncelet/conic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace poncelet {

const char* to_string(ConicType t) {
  switch (t) {
    case ConicType::real_ellipse: return "real_ellipse";
    case ConicType::circle: return "circle";
    case ConicType::parabola: return "parabola";
    case ConicType::hyperbola: return "hyperbola";
    case ConicType::intersecting_lines: return "intersecting_lines";
    case ConicType::parallel_lines: return "parallel_lines";
    case ConicType::single_line: return "single_line";
    case ConicType::point: return "point";
    case ConicType::empty: return "empty";
  }
  return "unknown";
}

ConicCoeffs ConicCoeffs::raw(const std::array<double, 6>& k) {
  double s = 0.0;
  for (double v : k) s += v * v;
  s = std::sqrt(s);
  if (!(s > 0.0) || !std::isfinite(s))
    throw Error(ErrorCode::identically_zero, "conic coefficients vanish");
  ConicCoeffs c;
  double sign = 0.0;
  for (double v : k) {
    if (std::abs(v) > 1e-14 * s) {
      sign = v > 0 ? 1.0 : -1.0;
      break;
    }
  }
  for (std::size_t i = 0; i < 6; ++i) c.k[i] = sign * k[i] / s;
  return c;
}

ConicCoeffs::ConicCoeffs(double A, double B, double C, double D, double E, double F)
    : ConicCoeffs(raw({A, B, C, D, E, F})) {}

double ConicCoeffs::eval(Point p) const {
  return k[0] * p.x * p.x + k[1] * p.x * p.y + k[2] * p.y * p.y + k[3] * p.x + k[4] * p.y + k[5];
}

Point ConicCoeffs::gradient(Point p) const {
  return {2.0 * k[0] * p.x + k[1] * p.y + k[3], k[1] * p.x + 2.0 * k[2] * p.y + k[4]};
}

Point ConicCoeffs::center() const {
  const double det = 4.0 * k[0] * k[2] - k[1] * k[1];
  if (det == 0.0) throw Error(ErrorCode::invalid_argument, "conic has no center");
  return {(k[1] * k[4] - 2.0 * k[2] * k[3]) / det, (k[1] * k[3] - 2.0 * k[0] * k[4]) / det};
}

ConicCoeffs ConicCoeffs::translated(Point t) const {
  const double A = k[0], B = k[1], C = k[2], D = k[3], E = k[4];
  return raw({A, B, C, 2 * A * t.x + B * t.y + D, B * t.x + 2 * C * t.y + E, eval(t)});
}

double coefficient_distance(const ConicCoeffs& p, const ConicCoeffs& q) {
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    plus += (p.k[i] - q.k[i]) * (p.k[i] - q.k[i]);
    minus += (p.k[i] + q.k[i]) * (p.k[i] + q.k[i]);
  }
  return std::sqrt(std::min(plus, minus));
}

ConicType classify_conic(const ConicCoeffs& c, double eps) {
  const double A = c.A(), B = c.B(), C = c.C(), D = c.D(), E = c.E(), F = c.F();
  const double q = std::sqrt(A * A + 0.5 * B * B + C * C);
  if (q <= eps) {
    if (std::hypot(D, E) <= eps) return ConicType::empty;
    return ConicType::single_line;
  }
  const double disc = (B * B - 4.0 * A * C) / (q * q);
  if (std::abs(disc) <= eps) {
    const double det = A * (C * F - E * E / 4) - B / 2 * (B / 2 * F - E * D / 4) +
                       D / 2 * (B / 2 * E / 2 - C * D / 2);
    if (std::abs(det) > eps * q) return ConicType::parabola;
    const double K = (A * F - D * D / 4) + (C * F - E * E / 4);
    if (std::abs(K) <= eps) return ConicType::single_line;
    return K < 0 ? ConicType::parallel_lines : ConicType::empty;
  }
  const Point o = c.center();
  const double Fc = F + 0.5 * (D * o.x + E * o.y);
  const double level = eps * std::max(1.0, q * o.squared_norm());
  if (disc > 0) return std::abs(Fc) <= level ? ConicType::intersecting_lines : ConicType::hyperbola;
  if (std::abs(Fc) <= level) return ConicType::point;
  if (Fc * (A + C) > 0) return ConicType::empty;
  if (std::abs(A - C) <= eps * q && std::abs(B) <= eps * q) return ConicType::circle;
  return ConicType::real_ellipse;
}

EllipseSpec ellipse_from_conic(const ConicCoeffs& c, double eps) {
  const ConicType t = classify_conic(c, eps);
  if (t != ConicType::real_ellipse && t != ConicType::circle)
    throw Error(ErrorCode::not_an_ellipse, std::string("not an ellipse (") + to_string(t) + ")");
  const Point o = c.center();
  const double Fc = c.F() + 0.5 * (c.D() * o.x + c.E() * o.y);
  Eigen::Matrix2d M;
  M << c.A(), c.B() / 2, c.B() / 2, c.C();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(M);
  // eigenvalues ascending in magnitude once the sign is fixed by -Fc
  const double s = Fc < 0 ? 1.0 : -1.0;
  double l0 = s * es.eigenvalues()(0), l1 = s * es.eigenvalues()(1);
  Eigen::Vector2d v0 = es.eigenvectors().col(0), v1 = es.eigenvectors().col(1);
  if (l1 < l0) {
    std::swap(l0, l1);
    std::swap(v0, v1);
  }
  EllipseSpec e;
  e.center = o;
  e.semi_major = std::sqrt(std::abs(Fc) / l0);
  e.semi_minor = std::sqrt(std::abs(Fc) / l1);
  e.rotation = t == ConicType::circle ? 0.0 : std::atan2(v0(1), v0(0));
  if (e.rotation <= -std::numbers::pi / 2) e.rotation += std::numbers::pi;
  if (e.rotation > std::numbers::pi / 2) e.rotation -= std::numbers::pi;
  return e;
}

ConicCoeffs conic_from_ellipse(const EllipseSpec& e) {
  if (!(e.semi_major > 0 && e.semi_minor > 0))
    throw Error(ErrorCode::invalid_argument, "ellipse semi-axes must be positive");
  const double c = std::cos(e.rotation), s = std::sin(e.rotation);
  const double ia = 1.0 / (e.semi_major * e.semi_major), ib = 1.0 / (e.semi_minor * e.semi_minor);
  // u = c x + s y, v = -s x + c y about the center
  const double A = ia * c * c + ib * s * s;
  const double B = 2.0 * c * s * (ia - ib);
  const double C = ia * s * s + ib * c * c;
  const double x0 = e.center.x, y0 = e.center.y;
  const double D = -2.0 * A * x0 - B * y0;
  const double E = -2.0 * C * y0 - B * x0;
  const double F = A * x0 * x0 + B * x0 * y0 + C * y0 * y0 - 1.0;
  return {A, B, C, D, E, F};
}

ConicCoeffs conic_from_circle(const Circle& c) {
  const Point o = c.center;
  return {1.0, 0.0, 1.0, -2.0 * o.x, -2.0 * o.y, o.squared_norm() - c.radius * c.radius};
}

double principal_axis_angle(const ConicCoeffs& c) {
  Eigen::Matrix2d M;
  M << c.A(), c.B() / 2, c.B() / 2, c.C();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(M);
  const Eigen::Vector2d ev = es.eigenvalues();
  const double q = std::sqrt(c.A() * c.A() + 0.5 * c.B() * c.B() + c.C() * c.C());
  Eigen::Vector2d axis;
  if (std::abs(ev(0) * ev(1)) <= 1e-8 * q * q) {
    // parabolic: the axis is the null direction of the quadratic part
    axis = std::abs(ev(0)) < std::abs(ev(1)) ? es.eigenvectors().col(0) : es.eigenvectors().col(1);
  } else {
    const Point o = c.center();
    const double Fc = c.F() + 0.5 * (c.D() * o.x + c.E() * o.y);
    if (ev(0) * ev(1) > 0) {
      axis = std::abs(ev(0)) < std::abs(ev(1)) ? es.eigenvectors().col(0) : es.eigenvectors().col(1);
    } else {
      // transverse axis: lambda * t^2 + Fc = 0 has real t
      axis = ev(0) * Fc < 0 ? es.eigenvectors().col(0) : es.eigenvectors().col(1);
    }
  }
  return line_angle({axis(0), axis(1)});
}

ConicCoeffs pullback(const ConicCoeffs& c, const AffineMap& m) {
  return ConicCoeffs::raw({c.A() * m.a * m.a, c.B() * m.a * m.b, c.C() * m.b * m.b, c.D() * m.a,
                           c.E() * m.b, c.F()});
}

}  // namespace poncelet
