#include "poncelet/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace poncelet {

namespace {

double sort_angle(Complex z) {
  double t = std::arg(z);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  // -0.0 and values a hair below 2pi belong to the first slot
  if (t >= 2.0 * std::numbers::pi - 1e-15) t = 0.0;
  return t;
}

template <class T>
void polish(std::vector<T> const& c, Complex& z, int steps) {
  for (int it = 0; it < steps; ++it) {
    Complex p = 0.0, dp = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
      dp = dp * z + p;
      p = p * z + Complex(c[k]);
    }
    if (dp == Complex(0.0) || p == Complex(0.0)) return;
    Complex next = z - p / dp;
    Complex pn = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) pn = pn * next + Complex(c[k]);
    if (!(std::abs(pn) < std::abs(p))) return;
    z = next;
  }
}

}  // namespace

double eval_poly(const std::vector<double>& coeffs, double x) {
  double p = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) p = p * x + coeffs[k];
  return p;
}

Complex eval_poly(const std::vector<Complex>& coeffs, Complex z) {
  Complex p = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
  return p;
}

std::array<Complex, 3> solve_cubic_complex(Complex c2, Complex c1, Complex c0) {
  for (Complex c : {c2, c1, c0}) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::non_finite, "cubic coefficients must be finite");
  }
  const Complex s = c2 / 3.0;
  const Complex p = c1 - 3.0 * s * s;
  const Complex q = -2.0 * s * s * s + c1 * s - c0;
  const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex u3 = -q / 2.0 + disc;
  Complex alt = -q / 2.0 - disc;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;

  std::array<Complex, 3> roots;
  if (std::abs(u3) == 0.0) {
    roots = {s, s, s};
  } else {
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    Complex uk = u;
    for (int k = 0; k < 3; ++k) {
      roots[k] = uk - p / (3.0 * uk) + s;
      uk *= omega;
    }
  }
  const std::vector<Complex> c{-c0, c1, -c2, Complex(1.0)};
  for (auto& z : roots) polish(c, z, 3);
  std::sort(roots.begin(), roots.end(),
            [](Complex x, Complex y) { return sort_angle(x) < sort_angle(y); });
  return roots;
}

std::vector<Complex> polynomial_roots(const std::vector<double>& coeffs) {
  double scale = 0.0;
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw Error(ErrorCode::non_finite, "polynomial coefficients must be finite");
    scale = std::max(scale, std::abs(c));
  }
  if (scale == 0.0) throw Error(ErrorCode::identically_zero, "identically zero polynomial");
  std::size_t n = coeffs.size() - 1;
  while (n > 0 && std::abs(coeffs[n]) <= 1e-14 * scale) --n;
  if (n == 0) return {};

  std::vector<double> c(coeffs.begin(), coeffs.begin() + static_cast<long>(n) + 1);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
  for (std::size_t i = 1; i < n; ++i) comp(static_cast<long>(i), static_cast<long>(i) - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) comp(static_cast<long>(i), static_cast<long>(n) - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<Complex> roots;
  for (long i = 0; i < static_cast<long>(n); ++i) {
    Complex z = es.eigenvalues()(i);
    polish(c, z, 3);
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

std::vector<double> solve_quartic_real(const std::array<double, 5>& coeffs) {
  std::vector<double> c(coeffs.begin(), coeffs.end());
  std::vector<double> out;
  for (Complex z : polynomial_roots(c)) {
    if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
    Complex r(z.real(), 0.0);
    polish(c, r, 4);
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace poncelet
