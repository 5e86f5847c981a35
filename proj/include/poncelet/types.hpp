#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace poncelet {

using Complex = std::complex<double>;

enum class ErrorCode {
  invalid_argument,
  non_finite,
  identically_zero,
  degenerate_triangle,
  degenerate_segment,
  concentric_circles,
  not_an_ellipse,
  rank_deficient,
  stationary_family,
  no_poncelet_family,
  degenerate_caustic,
  undefined_center,
  conjugate_at_infinity,
  on_side_line,
  denominator_vanishes,
  pole,
  degenerate_locus,
  q_at_infinity,
  not_on_equilateral_locus,
  undefined_envelope,
  inseparable,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// is stable, `what()` is a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point() = default;
  constexpr Point(double x_, double y_) : x(x_), y(y_) {}
  explicit Point(Complex z) : x(z.real()), y(z.imag()) {}

  Complex complex() const { return {x, y}; }

  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }

  Point& operator+=(Point o) { x += o.x; y += o.y; return *this; }
  Point& operator-=(Point o) { x -= o.x; y -= o.y; return *this; }
  Point& operator*=(double s) { x *= s; y *= s; return *this; }

  friend Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator-(Point p) { return {-p.x, -p.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double distance(Point p, Point q) { return (p - q).norm(); }
inline Point perp(Point p) { return {-p.y, p.x}; }

}  // namespace poncelet
