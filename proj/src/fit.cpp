#include "poncelet/fit.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace poncelet {

namespace {

std::vector<double> unit_with_sign(std::vector<double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  double sign = 1.0;
  for (double x : v) {
    if (std::abs(x) > 1e-14 * s) {
      sign = x > 0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& x : v) x *= sign / s;
  return v;
}

// Conic in the frame p' = (p - m) / s mapped back to world coordinates.
std::vector<double> conic_to_world(const std::vector<double>& k, Point m, double s) {
  const double A = k[0], B = k[1], C = k[2], D = k[3], E = k[4], F = k[5];
  const double s2 = s * s;
  return {A / s2,
          B / s2,
          C / s2,
          (-2 * A * m.x - B * m.y) / s2 + D / s,
          (-2 * C * m.y - B * m.x) / s2 + E / s,
          (A * m.x * m.x + B * m.x * m.y + C * m.y * m.y) / s2 - (D * m.x + E * m.y) / s + F};
}

LocusFit fit_collinear(const std::vector<Point>& pts, Point m, double s, Eigen::Vector2d normal,
                       double rms) {
  // the double line (n . (p - m))^2 = 0
  const double nx = normal(0), ny = normal(1);
  std::vector<double> frame{nx * nx, 2 * nx * ny, ny * ny, 0, 0, 0};
  LocusFit fit;
  fit.basis = Basis::conic6;
  fit.normalized = unit_with_sign(frame);
  fit.coeffs = unit_with_sign(conic_to_world(fit.normalized, m, s));
  fit.frame_center = m;
  fit.frame_scale = s;
  fit.residual = rms;
  fit.samples = pts.size();
  fit.collinear = true;
  return fit;
}

}  // namespace

const char* to_string(Basis b) { return b == Basis::conic6 ? "conic6" : "quartic9"; }

ConicCoeffs LocusFit::conic() const {
  if (basis == Basis::conic6) return ConicCoeffs::raw({coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4], coeffs[5]});
  return ConicCoeffs::raw({coeffs[3], coeffs[4], coeffs[5], coeffs[6], coeffs[7], coeffs[8]});
}

ConicCoeffs LocusFit::normalized_conic() const {
  const auto& k = normalized;
  if (basis == Basis::conic6) return ConicCoeffs::raw({k[0], k[1], k[2], k[3], k[4], k[5]});
  return ConicCoeffs::raw({k[3], k[4], k[5], k[6], k[7], k[8]});
}

double LocusFit::quartic_weight() const {
  if (basis == Basis::conic6) return 0.0;
  return std::abs(normalized[0]) + std::abs(normalized[1]) + std::abs(normalized[2]);
}

LocusFit fit_curve(const std::vector<Point>& points, Basis basis) {
  const std::size_t n = basis == Basis::conic6 ? 6 : 9;
  if (points.size() < n + 2)
    throw Error(ErrorCode::invalid_argument, "too few points for the requested basis");
  for (const auto& p : points) {
    if (!p.finite()) throw Error(ErrorCode::non_finite, "fit input must be finite");
  }
  const double N = static_cast<double>(points.size());

  Point m{0, 0};
  for (const auto& p : points) m += p;
  m = m / N;
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const auto& p : points) {
    const Eigen::Vector2d d(p.x - m.x, p.y - m.y);
    cov += d * d.transpose();
  }
  cov /= N;
  const double spread = std::sqrt(cov.trace());
  if (!(spread > 0.0)) throw Error(ErrorCode::rank_deficient, "rank deficient beyond one");

  // the quartic monomials are only closed under scaling, so no centering there
  Point center = basis == Basis::conic6 ? m : Point{0, 0};
  double scale = 0.0;
  for (const auto& p : points) scale += (p - center).squared_norm();
  scale = std::sqrt(scale / N);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
  const bool collinear = es.eigenvalues()(0) <= 1e-24 * es.eigenvalues()(1);
  if (collinear && basis == Basis::conic6)
    return fit_collinear(points, m, scale, es.eigenvectors().col(0),
                         std::sqrt(std::max(0.0, es.eigenvalues()(0))) / scale);

  Eigen::MatrixXd M(static_cast<long>(points.size()), static_cast<long>(n));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = (points[i].x - center.x) / scale, y = (points[i].y - center.y) / scale;
    const long r = static_cast<long>(i);
    if (basis == Basis::conic6) {
      M.row(r) << x * x, x * y, y * y, x, y, 1.0;
    } else {
      M.row(r) << x * x * x * x, x * x * y * y, y * y * y * y, x * x, x * y, y * y, x, y, 1.0;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const long last = static_cast<long>(n) - 1;
  if (sv(last - 1) <= 1e-9 * sv(0)) throw Error(ErrorCode::rank_deficient, "rank deficient beyond one");

  std::vector<double> frame(n);
  for (std::size_t j = 0; j < n; ++j) frame[j] = svd.matrixV()(static_cast<long>(j), last);

  LocusFit fit;
  fit.basis = basis;
  fit.normalized = unit_with_sign(frame);
  if (basis == Basis::conic6) {
    fit.coeffs = unit_with_sign(conic_to_world(fit.normalized, center, scale));
  } else {
    static constexpr int degree[9] = {4, 4, 4, 2, 2, 2, 1, 1, 0};
    std::vector<double> world(9);
    for (std::size_t j = 0; j < 9; ++j) world[j] = fit.normalized[j] / std::pow(scale, degree[j]);
    fit.coeffs = unit_with_sign(world);
  }
  fit.frame_center = center;
  fit.frame_scale = scale;
  fit.residual = sv(last) / std::sqrt(N);
  fit.samples = points.size();
  return fit;
}

double circle_rms(const std::vector<Point>& points, const Circle& c) {
  double s = 0.0;
  for (const auto& p : points) {
    const double d = distance(p, c.center) - c.radius;
    s += d * d;
  }
  return points.empty() ? 0.0 : std::sqrt(s / static_cast<double>(points.size()));
}

}  // namespace poncelet
