#include "poncelet/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "poncelet/centers.hpp"
#include "poncelet/loci.hpp"
#include "poncelet/parallel.hpp"

namespace poncelet {

namespace {

struct Circular {
  double a, b, c2, xc, yc, r, delta;
};

Circular circular_params(const PonceletConfig& cfg) {
  if (!cfg.circular) throw Error(ErrorCode::invalid_argument, "configuration has no circular caustic");
  Circular p;
  p.a = cfg.a;
  p.b = cfg.b;
  p.c2 = cfg.c2();
  p.xc = cfg.circular->center.x;
  p.yc = cfg.circular->center.y;
  p.r = cfg.circular->radius;
  p.delta = std::sqrt((std::pow(p.b, 4) + p.c2 * p.yc * p.yc) * (std::pow(p.a, 4) - p.c2 * p.xc * p.xc));
  return p;
}

AxisEnvelope axis_envelope(const LineFamily& family, int N, double parabola_eps) {
  const LineEnvelope env = envelope_of_lines(family, uniform_grid(static_cast<std::size_t>(N), 0.5));
  AxisEnvelope r;
  r.gaps = env.gaps.size();
  std::vector<Point> pts;
  for (const auto& p : env.points) {
    if (p.norm() < 1e3) pts.push_back(p);
  }
  r.fit = fit_curve(pts, Basis::conic6);
  const ConicCoeffs frame = r.fit.normalized_conic();
  r.discriminant = frame.discriminant();
  r.type = std::abs(r.discriminant) < parabola_eps ? ConicType::parabola : classify_conic(frame);
  r.axis_angle = principal_axis_angle(r.fit.conic());
  return r;
}

}  // namespace

Circle circumcircle_at(const PonceletConfig& cfg, double u) {
  const Circular p = circular_params(cfg);
  const double a = p.a, b = p.b, c2 = p.c2, xc = p.xc, yc = p.yc, d = p.delta;
  const double cu = std::cos(u), su = std::sin(u);
  // x^2 + y^2 + cx x + cy y + c0 = 0
  const double cx = -((a * a * a * b - d) * cu / (b * a * a) + c2 * yc * xc * su / (b * a * a) + c2 * xc / (a * a));
  const double cy = -c2 * xc * yc * cu / (a * b * b) + c2 * yc / (b * b) + (a * b * b * b - d) * su / (a * b * b);
  const double c0 = c2 * xc * cu / a + c2 * yc * su / b - d / (b * a);
  const Point O{-cx / 2, -cy / 2};
  return {O, std::sqrt(std::max(0.0, O.squared_norm() - c0))};
}

CircumEnvelope circum_envelope_circles(const PonceletConfig& cfg) {
  const Circular p = circular_params(cfg);
  const double a = p.a, b = p.b, c2 = p.c2, xc = p.xc, yc = p.yc;
  CircumEnvelope e;
  e.K1 = {{0.0, -yc * c2 / (b * b)}, (a / (b * b)) * std::sqrt(b * b * b * b + c2 * yc * yc)};
  e.K2 = {{xc * c2 / (a * a), 0.0}, (b / (a * a)) * std::sqrt(a * a * a * a - c2 * xc * xc)};
  const double x1 = (a / b) * std::sqrt(std::max(0.0, b * b - yc * yc));
  const double y2 = (b / a) * std::sqrt(std::max(0.0, a * a - xc * xc));
  e.touch1 = {Point{x1, yc}, Point{-x1, yc}};
  e.touch2 = {Point{xc, y2}, Point{xc, -y2}};
  return e;
}

Line radical_axis_at(const PonceletConfig& cfg, double u) {
  const Circular p = circular_params(cfg);
  const double a = p.a, b = p.b, c2 = p.c2, xc = p.xc, yc = p.yc, d = p.delta;
  const double cu = std::cos(u), su = std::sin(u), c4 = c2 * c2, c6 = c4 * c2;
  const double l = c4 * (-b * xc * yc * c2 * su + b * (d - a * a * a * b) * cu + b * b * (a * a + b * b) * xc);
  const double m = c4 * (a * (a * b * b * b - d) * su - a * xc * yc * c2 * cu + a * a * (a * a + b * b) * yc);
  const double n = a * a * b * yc * c6 * su + a * b * b * xc * c6 * cu +
                   a * a * b * b * c2 * (-a * a * xc * xc + b * b * yc * yc) +
                   std::pow(a, 4) * std::pow(b, 4) * (a * a + b * b) - a * b * (std::pow(a, 4) + std::pow(b, 4)) * d;
  return {l, m, n};
}

Line radical_axis_derivative(const PonceletConfig& cfg, double u) {
  const Circular p = circular_params(cfg);
  const double a = p.a, b = p.b, c2 = p.c2, xc = p.xc, yc = p.yc, d = p.delta;
  const double cu = std::cos(u), su = std::sin(u), c4 = c2 * c2, c6 = c4 * c2;
  return {c4 * (-b * xc * yc * c2 * cu - b * (d - a * a * a * b) * su),
          c4 * (a * (a * b * b * b - d) * cu + a * xc * yc * c2 * su),
          a * a * b * yc * c6 * cu - a * b * b * xc * c6 * su};
}

double equilateral_locus_level(const PonceletConfig& cfg) {
  const Circular p = circular_params(cfg);
  const EllipseSpec e = equilateral_centroid_locus(p.a, p.b);
  return std::pow(p.xc / e.semi_major, 2) + std::pow(p.yc / e.semi_minor, 2) - 1.0;
}

RadicalEnvelopeReport radical_axis_envelope(const PonceletConfig& cfg, int N, double parabola_eps) {
  circular_params(cfg);
  const LineFamily fam = [&](double u) { return radical_axis_at(cfg, u); };
  const LineFamily der = [&](double u) { return radical_axis_derivative(cfg, u); };
  const LineEnvelope env = envelope_of_lines(fam, uniform_grid(static_cast<std::size_t>(N), 0.5), der);
  RadicalEnvelopeReport r;
  r.gaps = env.gaps;
  // near the equilateral event the envelope runs off along the asymptotes or the parabola arms
  for (const auto& p : env.points) {
    if (p.norm() < 1e3 * cfg.a) r.points.push_back(p);
  }
  r.fit = fit_curve(r.points, Basis::conic6);
  r.conic = r.fit.conic();
  r.rms = r.fit.residual;
  const ConicCoeffs frame = r.fit.normalized_conic();
  r.discriminant = frame.discriminant();
  r.type = std::abs(r.discriminant) < parabola_eps ? ConicType::parabola : classify_conic(frame);
  r.axis_angle = principal_axis_angle(r.conic);
  const CircumLocusSpec x3 = predict_x3_locus_circular(cfg);
  const Point d = x3.F3p - x3.F3;
  if (d.norm() > 1e-12 * cfg.a) {
    r.focal_angle = line_angle(d);
    r.axis_error = angle_between_axes(r.axis_angle, r.focal_angle);
  } else {
    r.focal_angle = std::numeric_limits<double>::quiet_NaN();
    r.axis_error = std::numeric_limits<double>::quiet_NaN();
  }
  r.level = equilateral_locus_level(cfg);
  return r;
}

Line x36_degenerate_line(const PonceletConfig& cfg, double tol) {
  const Circular p = circular_params(cfg);
  if (std::abs(equilateral_locus_level(cfg)) > tol)
    throw Error(ErrorCode::not_on_equilateral_locus, "X36 locus is a circle, not a line");
  const double a = p.a, b = p.b, a2 = a * a, b2 = b * b, xc = p.xc, yc = p.yc;
  const double c4 = p.c2 * p.c2;
  const double rhs = (b2 * (a2 * a2 + 2 * a2 * b2 + 5 * b2 * b2) * xc * xc +
                      a2 * (5 * a2 * a2 + 2 * a2 * b2 + b2 * b2) * yc * yc) /
                     c4;
  return Line{b2 * xc, a2 * yc, -rhs};
}

L101Report l101_envelope_check(const PonceletConfig& cfg, int N) {
  const Circular p = circular_params(cfg);
  if (std::abs(equilateral_locus_level(cfg)) <= 1e-9) throw Error(ErrorCode::undefined_envelope, "undefined envelope");
  const Point C{p.xc, p.yc};
  const std::vector<double> us = uniform_grid(static_cast<std::size_t>(N), 0.5);
  std::vector<double> tang(us.size()), x11(us.size());
  parallel_for(us.size(), [&](std::size_t i) {
    const Triangle T = triangle_at(cfg, us[i]);
    const SpecialCircles s = special_circles(T);
    const Line L = radical_axis(s.incircle, s.ninepoint);
    tang[i] = std::abs(L.distance(C) - p.r);
    const Point foot = C - L.eval(C) * L.normal();
    x11[i] = distance(foot, center(T, 11));
  });
  L101Report r;
  r.samples = us.size();
  r.max_tangency = *std::max_element(tang.begin(), tang.end());
  r.max_x11 = *std::max_element(x11.begin(), x11.end());
  return r;
}

OrthicAxesReport orthic_axes_envelope_probe(const PonceletConfig& cfg, int N, double parabola_eps) {
  circular_params(cfg);
  auto axis = [&](bool bevan) -> LineFamily {
    return [&cfg, bevan](double u) {
      const SpecialCircles s = special_circles(triangle_at(cfg, u));
      return radical_axis(s.circumcircle, bevan ? s.bevan : s.ninepoint);
    };
  };
  OrthicAxesReport r;
  r.L3 = axis_envelope(axis(false), N, parabola_eps);
  r.L1 = axis_envelope(axis(true), N, parabola_eps);
  return r;
}

const char* to_string(ConjectureKind k) {
  return k == ConjectureKind::circum_envelope ? "circum_envelope" : "radical_axis";
}

ConjectureReport conjecture_probe(const PonceletConfig& cfg, ConjectureKind which, int N, double threshold) {
  ConjectureReport r;
  r.which = which;
  r.threshold = threshold;
  const std::vector<double> us = uniform_grid(static_cast<std::size_t>(N), 0.5);
  if (which == ConjectureKind::circum_envelope) {
    if (cfg.a == cfg.b)
      throw Error(ErrorCode::undefined_envelope, "circumcircle envelope is undefined for a circular outer conic");
    const CircleFamily fam = [&](double u) { return circumcircle_of(triangle_at(cfg, u)); };
    const CircleEnvelope env = envelope_of_circles(fam, us);
    r.gaps = env.gaps.size();
    // each tangency branch of the circle family traces one component
    std::vector<Point> outer, inner;
    for (const auto& pair : env.points) {
      if (distance(pair[0], pair[1]) <= 1e-9 * cfg.a) r.inseparable = true;
      outer.push_back(pair[0]);
      inner.push_back(pair[1]);
    }
    for (const auto* comp : {&outer, &inner}) r.residuals.push_back(fit_curve(*comp, Basis::conic6).residual);
  } else {
    const LineFamily fam = [&](double u) {
      const SpecialCircles s = special_circles(triangle_at(cfg, u));
      return radical_axis(s.incircle, s.circumcircle);
    };
    const LineEnvelope env = envelope_of_lines(fam, us);
    r.gaps = env.gaps.size();
    std::vector<Point> pts;
    for (const auto& p : env.points) {
      if (p.norm() < 1e3 * cfg.a) pts.push_back(p);
    }
    r.residuals.push_back(fit_curve(pts, Basis::conic6).residual);
  }
  r.conic_component = std::any_of(r.residuals.begin(), r.residuals.end(), [&](double v) { return v < threshold; });
  return r;
}

}  // namespace poncelet
