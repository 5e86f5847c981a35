#include "poncelet/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "poncelet/polynomial.hpp"

namespace poncelet {

namespace {

bool focus_less(Complex p, Complex q) {
  return p.imag() != q.imag() ? p.imag() < q.imag() : p.real() < q.real();
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorCode::non_finite, std::string(what) + " must be finite");
}

}  // namespace

PonceletConfig make_config(double a, double b, Complex f, Complex g) {
  for (double v : {a, b, f.real(), f.imag(), g.real(), g.imag()}) require_finite(v, "configuration");
  if (!(b > 0.0) || !(a >= b))
    throw Error(ErrorCode::invalid_argument, "outer ellipse needs a >= b > 0");
  if (!(std::abs(f) < 1.0) || !(std::abs(g) < 1.0))
    throw Error(ErrorCode::invalid_argument, "f and g must lie in the open unit disk");
  PonceletConfig cfg;
  cfg.a = a;
  cfg.b = b;
  cfg.f = f;
  cfg.g = g;
  return cfg;
}

PonceletConfig config_circular_caustic(double a, double b, double xc, double yc) {
  for (double v : {a, b, xc, yc}) require_finite(v, "configuration");
  if (!(b > 0.0) || !(a > b))
    throw Error(ErrorCode::invalid_argument, "circular caustic needs a > b > 0");
  const double c2 = a * a - b * b, c = std::sqrt(c2);
  const double p = a * a * a * a - c2 * xc * xc, q = b * b * b * b + c2 * yc * yc;
  if (p < 0.0) throw Error(ErrorCode::no_poncelet_family, "no Poncelet triangle family");
  const double r = (b * std::sqrt(p) - a * std::sqrt(q)) / c2;
  if (!(r > 0.0)) throw Error(ErrorCode::no_poncelet_family, "no Poncelet triangle family");

  // foci of the preimage ellipse as roots of w^2 - S w + P
  const double delta = std::sqrt(p * q);
  const Complex S = 2.0 * Complex(xc / a, yc / b);
  const Complex P((a * a + b * b) / c2 - 2.0 * delta / (a * b * c2), 2.0 * xc * yc / (a * b));
  const Complex disc = std::sqrt(S * S - 4.0 * P);
  Complex f = (S - disc) / 2.0, g = (S + disc) / 2.0;
  if (focus_less(g, f)) std::swap(f, g);

  const Complex w(xc / a, yc / b);
  const double s = r * c / (a * b);
  const Complex lf = w - Complex(0, s), lg = w + Complex(0, s);
  if (std::abs(lf - f) > 1e-10 * (1.0 + std::abs(f)) || std::abs(lg - g) > 1e-10 * (1.0 + std::abs(g)))
    throw Error(ErrorCode::invalid_argument, "inconsistent circular caustic foci");
  if (!(std::abs(f) < 1.0) || !(std::abs(g) < 1.0))
    throw Error(ErrorCode::no_poncelet_family, "no Poncelet triangle family");

  PonceletConfig cfg = make_config(a, b, f, g);
  cfg.circular = CircularCaustic{{xc, yc}, r};
  return cfg;
}

SymmetricTriple symmetric_triple(Complex f, Complex g, Complex lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw Error(ErrorCode::invalid_argument, "lambda must lie on the unit circle");
  const Complex fb = std::conj(f), gb = std::conj(g);
  return {f + g + lambda * fb * gb, f * g + lambda * (fb + gb), lambda};
}

std::array<Complex, 3> preimage_vertices(const PonceletConfig& cfg, double theta) {
  const SymmetricTriple st = symmetric_triple(cfg.f, cfg.g, std::polar(1.0, theta));
  return solve_cubic_complex(st.s1, st.s2, st.s3);
}

Triangle triangle_at(const PonceletConfig& cfg, double theta) {
  const auto z = preimage_vertices(cfg, theta);
  const AffineMap A = cfg.map();
  return Triangle(A(z[0]), A(z[1]), A(z[2]));
}

EllipseSpec caustic_recover(const PonceletConfig& cfg, int thetas) {
  if (thetas < 4) throw Error(ErrorCode::invalid_argument, "caustic recovery needs at least 12 side lines");
  std::vector<Line> lines;
  for (int k = 0; k < thetas; ++k) {
    const Triangle T = triangle_at(cfg, 2.0 * std::numbers::pi * (k + 0.5) / thetas);
    for (int i = 0; i < 3; ++i) lines.push_back(T.side_line(i));
  }
  // tangent lines (l, m, n) satisfy the dual conic; n is scaled by 1/a
  Eigen::MatrixXd M(static_cast<long>(lines.size()), 6);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const double l = lines[i].l, m = lines[i].m, n = lines[i].n / cfg.a;
    M.row(static_cast<long>(i)) << l * l, l * m, m * m, l * n, m * n, n * n;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(4) <= 1e-9 * sv(0)) throw Error(ErrorCode::degenerate_caustic, "degenerate caustic");
  const Eigen::VectorXd d = svd.matrixV().col(5);
  Eigen::Matrix3d dual;
  dual << d(0), d(1) / 2, d(3) / 2, d(1) / 2, d(2), d(4) / 2, d(3) / 2, d(4) / 2, d(5);
  Eigen::Matrix3d adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      adj(j, i) = dual(i1, j1) * dual(i2, j2) - dual(i1, j2) * dual(i2, j1);
    }
  }
  const double a = cfg.a;
  try {
    const ConicCoeffs primal = ConicCoeffs::raw({adj(0, 0) / (a * a), 2 * adj(0, 1) / (a * a), adj(1, 1) / (a * a),
                                                 2 * adj(0, 2) / a, 2 * adj(1, 2) / a, adj(2, 2)});
    return ellipse_from_conic(primal);
  } catch (const Error&) {
    throw Error(ErrorCode::degenerate_caustic, "degenerate caustic");
  }
}

std::array<Complex, 2> preimage_foci(const EllipseSpec& e, double a, double b) {
  const EllipseSpec pre = ellipse_from_conic(pullback(conic_from_ellipse(e), AffineMap{a, b}));
  const auto F = pre.foci();
  std::array<Complex, 2> out{F[0].complex(), F[1].complex()};
  if (focus_less(out[1], out[0])) std::swap(out[0], out[1]);
  return out;
}

double closure_residual(const Triangle& T, const EllipseSpec& caustic) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Line L = T.side_line(i);
    const Point n = L.normal();
    const double offset = std::abs(L.eval(caustic.center));
    worst = std::max(worst, std::abs(offset - caustic.support(n)));
  }
  return worst;
}

double vertex_theta(const PonceletConfig& cfg, Point Z) {
  Complex z(Z.x / cfg.a, Z.y / cfg.b);
  z /= std::abs(z);
  const Complex lambda = z * (z - cfg.f) * (z - cfg.g) /
                         ((1.0 - std::conj(cfg.f) * z) * (1.0 - std::conj(cfg.g) * z));
  return std::arg(lambda);
}

EllipseSpec equilateral_centroid_locus(double a, double b) {
  if (!(b > 0.0) || !(a >= b)) throw Error(ErrorCode::invalid_argument, "need a >= b > 0");
  const double c2 = a * a - b * b;
  EllipseSpec e;
  e.center = {0, 0};
  e.semi_major = a * c2 / (a * a + 3 * b * b);
  e.semi_minor = b * c2 / (3 * a * a + b * b);
  e.rotation = 0.0;
  return e;
}

}  // namespace poncelet
