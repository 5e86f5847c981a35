#include "poncelet/loci.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "poncelet/closed_forms.hpp"
#include "poncelet/centers.hpp"
#include "poncelet/envelope.hpp"
#include "poncelet/parallel.hpp"
#include "poncelet/polynomial.hpp"

namespace poncelet {

namespace {

constexpr double kVertexGuard = 1e-6;

constexpr double kPi = std::numbers::pi;

const PonceletConfig& require_circular(const PonceletConfig& cfg) {
  if (!cfg.circular) throw Error(ErrorCode::invalid_argument, "configuration has no circular caustic");
  return cfg;
}

struct Extremum {
  double u, h;
};

// Global minimum of h over the grid, refined by Brent's method.
template <class F>
Extremum refine_min(const F& h, const std::vector<double>& us, const std::vector<double>& hs) {
  const std::size_t n = us.size();
  const std::size_t i = static_cast<std::size_t>(std::min_element(hs.begin(), hs.end()) - hs.begin());
  const double step = 2 * kPi / static_cast<double>(n);
  const auto r = boost::math::tools::brent_find_minima(h, us[i] - step, us[i] + step, 52);
  if (r.second < hs[i]) return {r.first, r.second};
  return {us[i], hs[i]};
}

}  // namespace

std::vector<Point> LocusSamples::defined_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (defined[i]) out.push_back(points[i]);
  }
  return out;
}

LocusSamples sample_locus(const PonceletConfig& cfg, const LocusTarget& target, int N, double far_cutoff) {
  if (N < 16) throw Error(ErrorCode::invalid_argument, "need at least 16 samples");
  if (target.kind == LocusTarget::Kind::center && !is_supported_center(target.k))
    throw Error(ErrorCode::invalid_argument, "unsupported center index");
  LocusSamples s;
  const std::size_t n = static_cast<std::size_t>(N);
  s.theta = uniform_grid(n, 0.5);
  s.points.assign(n, Point{std::nan(""), std::nan("")});
  std::vector<char> ok(n, 0);
  parallel_for(n, [&](std::size_t i) {
    const Triangle T = triangle_at(cfg, s.theta[i]);
    if (target.kind == LocusTarget::Kind::isogonal) {
      // the conjugate of a vertex is undefined and ill-conditioned next to one
      for (const Point& v : T.vertices())
        if (distance(v, target.P) <= kVertexGuard * T.diameter()) return;
    }
    try {
      const Point p = target.kind == LocusTarget::Kind::center ? center(T, target.k) : isogonal_pedal(target.P, T);
      if (p.finite() && p.norm() <= far_cutoff) {
        s.points[i] = p;
        ok[i] = 1;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::conjugate_at_infinity && e.code() != ErrorCode::undefined_center) throw;
    }
  });
  s.defined.assign(ok.begin(), ok.end());
  s.undefined = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
  s.mostly_at_infinity = s.undefined * 5 > n;
  return s;
}

EllipseSpec OrthoLocusSpec::ellipse() const {
  EllipseSpec e;
  e.center = C4;
  e.semi_major = std::max(a4, b4);
  e.semi_minor = std::min(a4, b4);
  e.rotation = a4 > b4 ? kPi / 2 : 0.0;
  return e;
}

OrthoLocusSpec predict_x4_locus(const PonceletConfig& cfg) {
  const double a = cfg.a, b = cfg.b, s = a * a + b * b;
  OrthoLocusSpec o;
  o.C4 = {s * (cfg.f.real() + cfg.g.real()) / (2 * a), s * (cfg.f.imag() + cfg.g.imag()) / (2 * b)};
  o.sigma = std::abs(cfg.f * cfg.g * s - cfg.c2());
  o.a4 = o.sigma / (2 * b);
  o.b4 = o.sigma / (2 * a);
  return o;
}

IsogCircleSpec predict_isog_circle(Complex f, Complex g, Complex P) {
  const double den = 1.0 - std::norm(P);
  if (std::abs(den) <= 1e-12) throw Error(ErrorCode::degenerate_locus, "degenerate (line locus)");
  const Complex Pb = std::conj(P);
  IsogCircleSpec s;
  s.O_dag = (f + g - f * g * Pb - P) / den;
  s.r_dag = std::abs((std::conj(g) - Pb) * (std::conj(f) - Pb)) / std::abs(den);
  return s;
}

const char* to_string(Region r) {
  switch (r) {
    case Region::interior_R: return "interior_R";
    case Region::exterior_R_inner: return "exterior_R_inner";
    case Region::exterior_R_outer: return "exterior_R_outer";
    case Region::boundary_R: return "boundary_R";
  }
  return "unknown";
}

double region_h(const PonceletConfig& cfg, Point P, double u) {
  const Circle K = circumcircle_of(triangle_at(cfg, u));
  return distance(P, K.center) - K.radius;
}

RegionVerdict region_membership(const PonceletConfig& cfg, Point P, double tol, int grid) {
  const std::vector<double> us = uniform_grid(static_cast<std::size_t>(grid));
  std::vector<double> hs(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) hs[i] = region_h(cfg, P, us[i]);
  auto h = [&](double u) { return region_h(cfg, P, u); };
  auto neg = [&](double u) { return -region_h(cfg, P, u); };
  std::vector<double> nhs(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) nhs[i] = -hs[i];
  const Extremum lo = refine_min(h, us, hs);
  const Extremum hi = refine_min(neg, us, nhs);

  RegionVerdict v;
  v.min_h = lo.h;
  v.max_h = -hi.h;
  v.u_min = lo.u;
  v.u_max = hi.u;
  const double eps = tol * cfg.a;
  if (std::abs(v.min_h) <= eps) {
    v.membership = Region::boundary_R;
    v.witness_u = v.u_min;
  } else if (std::abs(v.max_h) <= eps) {
    v.membership = Region::boundary_R;
    v.witness_u = v.u_max;
  } else if (v.min_h > 0) {
    v.membership = Region::exterior_R_outer;
  } else if (v.max_h < 0) {
    v.membership = Region::exterior_R_inner;
  } else {
    v.membership = Region::interior_R;
    v.witness_u = v.u_min;
  }
  return v;
}

Point region_boundary_point(const PonceletConfig& cfg, Point direction, bool inner) {
  const Point c = cfg.caustic_center();
  const Point d = direction / direction.norm();
  auto extremum = [&](double s) {
    const RegionVerdict v = region_membership(cfg, c + s * d, 0.0, 256);
    return inner ? v.max_h : v.min_h;
  };
  const double step = 0.02 * cfg.a;
  double s0 = 0.0, e0 = extremum(0.0);
  if (e0 >= 0) throw Error(ErrorCode::invalid_argument, "caustic center is not inside the circumcircles");
  for (int k = 1; k <= 2000; ++k) {
    const double s1 = k * step, e1 = extremum(s1);
    if (e1 > 0) {
      boost::uintmax_t iters = 200;
      const auto r = boost::math::tools::toms748_solve(extremum, s0, s1, e0, e1,
                                                       boost::math::tools::eps_tolerance<double>(52), iters);
      return c + 0.5 * (r.first + r.second) * d;
    }
    s0 = s1;
    e0 = e1;
  }
  throw Error(ErrorCode::invalid_argument, "no region boundary along the ray");
}

Point outer_rational_point(const PonceletConfig& cfg, double t) {
  const double T = 1 + t * t;
  return {cfg.a * (1 - t * t) / T, 2 * cfg.b * t / T};
}

IsogLocusReport classify_isog_locus(const PonceletConfig& cfg, Point P, int N, double parabola_eps) {
  const LocusSamples s = sample_locus(cfg, LocusTarget::isogonal_of(P), N, 100.0 * cfg.a);
  const std::vector<Point> pts = s.defined_points();
  IsogLocusReport r;
  r.excluded = s.undefined;
  try {
    r.quartic = fit_curve(pts, Basis::quartic9);
    r.conic_fit = fit_curve(pts, Basis::conic6);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::rank_deficient || e.code() == ErrorCode::invalid_argument)
      throw Error(ErrorCode::degenerate_locus, "degenerate locus, use degenerate_line_locus");
    throw;
  }
  const ConicCoeffs frame = r.conic_fit.normalized_conic();
  r.discriminant = frame.discriminant();
  r.type = std::abs(r.discriminant) < parabola_eps ? ConicType::parabola : classify_conic(frame);

  // intersections with the outer ellipse through x = a(1-t^2)/(1+t^2), y = 2bt/(1+t^2)
  const ConicCoeffs w = r.conic_fit.conic();
  const double a = cfg.a, b = cfg.b;
  const std::array<double, 5> q{w.A() * a * a + w.D() * a + w.F(), 2 * a * b * w.B() + 2 * b * w.E(),
                                -2 * w.A() * a * a + 4 * w.C() * b * b + 2 * w.F(), -2 * a * b * w.B() + 2 * b * w.E(),
                                w.A() * a * a - w.D() * a + w.F()};
  std::vector<double> ts;
  try {
    ts = solve_quartic_real(q);
  } catch (const Error&) {
  }
  std::vector<ZPoint> zs;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ZPoint z;
    z.t = ts[i];
    z.z = outer_rational_point(cfg, ts[i]);
    if (!zs.empty() && std::abs(zs.back().t - z.t) <= 1e-6 * (1 + std::abs(z.t))) {
      zs.back().tangent = true;
      continue;
    }
    zs.push_back(z);
  }
  const double qmax = std::max({std::abs(q[0]), std::abs(q[1]), std::abs(q[2]), std::abs(q[3]), std::abs(q[4])});
  if (std::abs(q[4]) <= 1e-12 * qmax) {
    ZPoint z;
    z.t = std::numeric_limits<double>::infinity();
    z.z = {-a, 0.0};
    zs.push_back(z);
  }
  for (auto& z : zs) {
    z.theta = vertex_theta(cfg, z.z);
    const Triangle T = triangle_at(cfg, z.theta);
    int best = 0;
    for (int i = 1; i < 3; ++i) {
      if (distance(T.vertex(i), z.z) < distance(T.vertex(best), z.z)) best = i;
    }
    z.incidence = T.side_line(best).distance(P);
  }
  r.z_points = zs;
  return r;
}

double boundary_quartic_eval(const PonceletConfig& cfg, double x, double y) {
  return closed_form::boundary_quartic(cfg.a, cfg.b, cfg.f.real(), cfg.f.imag(), cfg.g.real(), cfg.g.imag(), x, y);
}

double boundary_quartic_scale(const PonceletConfig& cfg) { return std::pow(cfg.a, 8); }

TangencyReport tangency_points(const PonceletConfig& cfg) {
  const double fx = cfg.f.real(), fy = cfg.f.imag(), gx = cfg.g.real(), gy = cfg.g.imag();
  TangencyReport r;
  r.quartic = {gy * fx + fy * gx - fy - gy, -2 * fx - 2 * gx + 4, 2 * fx * gy + 2 * fy * gx, -2 * fx - 2 * gx - 4,
               fx * gy + fy * gx + fy + gy};
  const double scale = std::max({std::abs(r.quartic[0]), std::abs(r.quartic[1]), std::abs(r.quartic[2]),
                                 std::abs(r.quartic[3]), std::abs(r.quartic[4])});
  for (double t : solve_quartic_real(r.quartic)) r.points.push_back({t, outer_rational_point(cfg, t), false});
  r.real_roots = static_cast<int>(r.points.size());
  if (std::abs(r.quartic[4]) <= 1e-14 * scale) {
    r.points.push_back({std::numeric_limits<double>::infinity(), {-cfg.a, 0.0}, true});
    ++r.real_roots;
  }
  return r;
}

LineLocus degenerate_line_locus(const PonceletConfig& cfg, double t) {
  const double a = cfg.a, b = cfg.b, fx = cfg.f.real(), fy = cfg.f.imag(), gx = cfg.g.real(), gy = cfg.g.imag();
  auto L = [&](double x, double y) { return closed_form::line_locus(a, b, fx, fy, gx, gy, t, x, y); };
  const double n = L(0, 0);
  LineLocus r;
  r.line = Line{L(1, 0) - n, L(0, 1) - n, n};
  if (!(std::hypot(r.line.l, r.line.m) > 0))
    throw Error(ErrorCode::degenerate_locus, "line locus coefficients vanish");
  const auto q = closed_form::excluded_point(a, b, fx, fy, gx, gy, t);
  r.delta = q.delta;
  if (std::abs(q.delta) <= 1e-12 * a * a * std::pow(1 + std::abs(t), 3))
    throw Error(ErrorCode::q_at_infinity, "Q at infinity");
  r.Q = {q.qx / q.delta, q.qy / (2 * q.delta)};
  return r;
}

LineEnvelopeReport line_locus_envelope(const PonceletConfig& cfg, int N) {
  const double a = cfg.a, b = cfg.b, fx = cfg.f.real(), fy = cfg.f.imag(), gx = cfg.g.real(), gy = cfg.g.imag();
  // the raw coefficients are quadratic in t = tan(phi/2); dividing by 1 + t^2 keeps them smooth in phi
  auto family = [&](double phi) {
    const double t = std::tan(phi / 2), T = 1 + t * t;
    auto L = [&](double x, double y) { return closed_form::line_locus(a, b, fx, fy, gx, gy, t, x, y) / T; };
    const double n = L(0, 0);
    return Line{L(1, 0) - n, L(0, 1) - n, n};
  };
  const LineEnvelope env = envelope_of_lines(family, uniform_grid(static_cast<std::size_t>(N), 0.5));
  LineEnvelopeReport r;
  r.points = env.points.size();
  r.gaps = env.gaps.size();
  r.fit = fit_curve(env.points, Basis::conic6);
  r.numeric = r.fit.conic();

  auto extract = [&](bool restored) {
    auto E = [&](double x, double y) { return closed_form::line_envelope(a, b, fx, fy, gx, gy, x, y, restored); };
    const double F = E(0, 0);
    const double xp = E(1, 0), xm = E(-1, 0), yp = E(0, 1), ym = E(0, -1);
    const double A = (xp + xm) / 2 - F, D = (xp - xm) / 2;
    const double C = (yp + ym) / 2 - F, Ey = (yp - ym) / 2;
    const double B = E(1, 1) - A - C - D - Ey - F;
    return ConicCoeffs::raw({A, B, C, D, Ey, F});
  };
  r.closed_form = extract(false);
  r.restored = extract(true);
  r.distance_closed_form = coefficient_distance(r.numeric, r.closed_form);
  r.distance_restored = coefficient_distance(r.numeric, r.restored);
  r.center = r.numeric.center();
  r.caustic_center = cfg.caustic_center();
  r.xy_term = r.numeric.B();
  return r;
}

EllipseSpec CircumLocusSpec::ellipse() const {
  EllipseSpec e;
  e.center = (F3 + F3p) / 2.0;
  e.semi_major = a3;
  e.semi_minor = b3;
  const Point d = F3p - F3;
  e.rotation = d.norm() > 0 ? std::atan2(d.y, d.x) : 0.0;
  return e;
}

CircumLocusSpec predict_x3_locus_circular(const PonceletConfig& cfg) {
  require_circular(cfg);
  const double a = cfg.a, b = cfg.b, c2 = cfg.c2();
  const double xc = cfg.circular->center.x, yc = cfg.circular->center.y;
  CircumLocusSpec s;
  s.F3 = {xc * (1 - (b / a) * (b / a)), 0.0};
  s.F3p = {0.0, yc * (1 - (a / b) * (a / b))};
  s.delta3 = std::sqrt(b * b * b * b + c2 * yc * yc) / (2 * b);
  s.delta3p = std::sqrt(a * a * a * a - c2 * xc * xc) / (2 * a);
  s.a3 = s.delta3 * (a / b) - s.delta3p * (b / a);
  s.b3 = s.delta3p - s.delta3;
  return s;
}

}  // namespace poncelet
