#include "poncelet/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "poncelet/centers.hpp"
#include "poncelet/envelope.hpp"
#include "poncelet/envelopes.hpp"
#include "poncelet/family.hpp"
#include "poncelet/fit.hpp"
#include "poncelet/loci.hpp"

namespace poncelet {

namespace {

constexpr double kPi = 3.14159265358979323846;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Complex disk(double radius) { return std::polar(radius * std::sqrt(uniform(0, 1)), uniform(0, 2 * kPi)); }

  // a in [1, 3], b in [0.3a, 0.9a], caustic foci preimages inside |z| < 0.7
  PonceletConfig config() {
    const double a = uniform(1, 3), b = uniform(0.3, 0.9) * a;
    const Complex f = disk(0.7), g = disk(0.7);
    return make_config(a, b, f, g);
  }

  // circular caustic with radius at least 0.02a; `level_gap` keeps C off the equilateral locus
  PonceletConfig circular(double level_gap = 0.0) {
    for (;;) {
      const double a = uniform(1, 3), b = uniform(0.3, 0.9) * a;
      const Complex z = disk(0.9);
      try {
        PonceletConfig cfg = config_circular_caustic(a, b, a * z.real(), b * z.imag());
        if (cfg.circular->radius < 0.02 * a) continue;
        if (std::abs(equilateral_locus_level(cfg)) < level_gap) continue;
        return cfg;
      } catch (const Error&) {
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

struct Context {
  const CheckOptions& opts;
  std::uint64_t seed;

  int trials(int fallback) const { return opts.trials > 0 ? opts.trials : fallback; }

  double tol(const std::string& name, double fallback) const {
    const auto it = opts.tol.find(name);
    return it == opts.tol.end() ? fallback : it->second;
  }
};

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

double ellipse_level(const PonceletConfig& cfg, Point p) {
  return std::abs(p.x * p.x / (cfg.a * cfg.a) + p.y * p.y / (cfg.b * cfg.b) - 1.0);
}

bool ellipse_like(ConicType t) { return t == ConicType::real_ellipse || t == ConicType::circle; }

// Poncelet closure and the Blaschke closed form of the caustic.
CheckResult check_closure(const Context& ctx) {
  const double tol = ctx.tol("closure", 1e-8);
  Sampler s(ctx.seed);
  double closure = 0, blaschke = 0, on_outer = 0;
  const int n = ctx.trials(20);
  for (int i = 0; i < n; ++i) {
    const PonceletConfig cfg = s.config();
    const EllipseSpec E = caustic_recover(cfg);
    for (double th : uniform_grid(64)) {
      const Triangle T = triangle_at(cfg, th);
      closure = std::max(closure, closure_residual(T, E) / cfg.a);
      for (int k = 0; k < 3; ++k) on_outer = std::max(on_outer, ellipse_level(cfg, T.vertex(k)));
    }
    // preimage of the caustic: |z - f| + |z - g| = |1 - conj(f) g|
    const double major = std::abs(1.0 - std::conj(cfg.f) * cfg.g);
    for (double t : uniform_grid(16)) {
      const Point p = E.at(t);
      const Complex z{p.x / cfg.a, p.y / cfg.b};
      blaschke = std::max(blaschke, std::abs(std::abs(z - cfg.f) + std::abs(z - cfg.g) - major));
    }
  }
  CheckResult r{"closure", closure < tol && blaschke < tol && on_outer < tol, {}};
  r.report = {{"configs", n},
              {"thetas", 64},
              {"max_side_residual_over_a", closure},
              {"max_blaschke_residual", blaschke},
              {"max_vertex_off_outer", on_outer},
              {"tolerance", tol}};
  return r;
}

// Orthocenter locus: center, axis ratio, orientation and semiaxes.
CheckResult check_x4(const Context& ctx) {
  const double tol = ctx.tol("x4-locus", 1e-8);
  Sampler s(ctx.seed);
  double center = 0, ratio = 0, axis = 0, semi = 0, residual = 0;
  const int n = ctx.trials(20);
  for (int i = 0; i < n; ++i) {
    const PonceletConfig cfg = s.config();
    const double a = cfg.a, b = cfg.b;
    const LocusFit fit = fit_curve(sample_locus(cfg, LocusTarget::center_of(4), 256).defined_points(), Basis::conic6);
    const EllipseSpec e = ellipse_from_conic(fit.conic());
    const Point c = cfg.caustic_center();
    const Point C4{(a * a + b * b) * c.x / (a * a), (a * a + b * b) * c.y / (b * b)};
    const double sigma = std::abs(cfg.f * cfg.g * (a * a + b * b) - cfg.c2());
    center = std::max(center, distance(e.center, C4) / a);
    ratio = std::max(ratio, std::abs(e.semi_major / e.semi_minor - a / b));
    axis = std::max(axis, angle_between_axes(e.rotation, kPi / 2));
    semi = std::max({semi, std::abs(e.semi_major / (sigma / (2 * b)) - 1), std::abs(e.semi_minor / (sigma / (2 * a)) - 1)});
    residual = std::max(residual, fit.residual);
  }
  CheckResult r{"x4-locus", center < tol && ratio < tol && axis < 1e-6 && semi < 1e-7, {}};
  r.report = {{"configs", n},
              {"max_center_deviation_over_a", center},
              {"max_ratio_deviation", ratio},
              {"max_axis_angle_from_vertical", axis},
              {"max_semiaxis_relative_error", semi},
              {"max_fit_residual", residual},
              {"tolerance", tol}};
  return r;
}

// Isogonal locus over the unit circle is the predicted circle; P = f maps to g.
CheckResult check_isog_circle(const Context& ctx) {
  const double tol = ctx.tol("isog-circle", 1e-9);
  Sampler s(ctx.seed);
  double rms = 0, focal = 0;
  const int n = ctx.trials(20);
  std::vector<std::array<Complex, 3>> cases{{Complex{0.3, 0.2}, Complex{-0.4, 0.1}, Complex{0, 0}}};
  for (int i = 0; i < n; ++i) cases.push_back({s.disk(0.7), s.disk(0.7), s.disk(0.8)});
  json example;
  for (const auto& [f, g, P] : cases) {
    const PonceletConfig cfg = make_config(1, 1, f, g);
    const Circle c = predict_isog_circle(f, g, P).circle();
    const LocusSamples ls = sample_locus(cfg, LocusTarget::isogonal_of(Point(P)), 256);
    const double v = circle_rms(ls.defined_points(), c);
    rms = std::max(rms, v);
    if (example.is_null()) example = {{"center", to_json(c.center)}, {"radius", c.radius}, {"rms", v}};
    for (const Point& q : sample_locus(cfg, LocusTarget::isogonal_of(Point(f)), 64).defined_points())
      focal = std::max(focal, distance(q, Point(g)));
  }
  CheckResult r{"isog-circle", rms < tol && focal < 1e-10, {}};
  r.report = {{"cases", cases.size()},
              {"max_circle_rms", rms},
              {"max_focal_deviation", focal},
              {"example", example},
              {"tolerance", tol}};
  return r;
}

// Isogonal locus is a conic whose type follows the region of P.
CheckResult check_isog_conic(const Context& ctx) {
  const double tol = ctx.tol("isog-conic", 1e-7);
  Sampler s(ctx.seed);
  const int n = ctx.trials(20);
  double weight = 0;
  int matched = 0, constructed = 0;
  json cases = json::array();
  for (int i = 0; i < n; ++i) {
    const PonceletConfig cfg = s.config();
    const double phi = s.uniform(0, 2 * kPi);
    const Point dir{std::cos(phi), std::sin(phi)};
    const Point c = cfg.caustic_center();
    const Point pin = region_boundary_point(cfg, dir, true), pout = region_boundary_point(cfg, dir, false);
    Point P;
    Region intended;
    switch (i % 4) {
      case 0: P = c + 0.5 * (pin - c); intended = Region::exterior_R_inner; break;
      case 1: P = 0.5 * (pin + pout); intended = Region::interior_R; break;
      case 2: P = pout + 0.3 * (pout - c); intended = Region::exterior_R_outer; break;
      default: P = (i / 4) % 2 ? pout : pin; intended = Region::boundary_R; break;
    }
    const RegionVerdict v = region_membership(cfg, P);
    const IsogLocusReport rep = classify_isog_locus(cfg, P);
    bool ok = false;
    switch (v.membership) {
      case Region::exterior_R_inner:
      case Region::exterior_R_outer: ok = ellipse_like(rep.type); break;
      case Region::interior_R: ok = rep.type == ConicType::hyperbola; break;
      case Region::boundary_R: ok = rep.type == ConicType::parabola; break;
    }
    matched += ok;
    constructed += v.membership == intended;
    weight = std::max(weight, rep.quartic.quartic_weight());
    cases.push_back({{"P", to_json(P)},
                     {"region", to_string(v.membership)},
                     {"type", to_string(rep.type)},
                     {"discriminant", rep.discriminant},
                     {"match", ok}});
  }
  CheckResult r{"isog-conic", matched == n && weight < tol, {}};
  r.report = {{"trials", n},
              {"matched", matched},
              {"constructed_region_agreement", constructed},
              {"max_quartic_weight", weight},
              {"cases", cases},
              {"tolerance", tol}};
  return r;
}

// Pedal, barycentric, rational and unit-circle formulas for the isogonal conjugate.
CheckResult check_isog_methods(const Context& ctx) {
  const double tol = ctx.tol("isog-methods", 1e-8);
  Sampler s(ctx.seed);
  const int n = ctx.trials(100);
  double pair = 0, weaver = 0;
  int done = 0, rejected = 0, circle_cases = 0;
  while (done < n) {
    const bool unit = done % 4 == 3;
    const PonceletConfig cfg = unit ? make_config(1, 1, s.disk(0.7), s.disk(0.7)) : s.config();
    const Point P = Point(s.disk(0.9)) * cfg.b;
    const double th = s.uniform(0, 2 * kPi);
    const Triangle T = triangle_at(cfg, th);
    Point p1, p2, p3;
    try {
      p1 = isogonal_pedal(P, T);
      p2 = isogonal_barycentric(P, T);
      p3 = isogonal_rational(rational_isog_coeffs(cfg.a, cfg.b, cfg.f, cfg.g, P), std::polar(1.0, th));
    } catch (const Error&) {
      ++rejected;
      continue;
    }
    // far conjugates lose digits in every method alike
    if (p1.norm() > 20 * cfg.a) {
      ++rejected;
      continue;
    }
    const double scale = cfg.a;
    pair = std::max({pair, distance(p1, p2) / scale, distance(p1, p3) / scale, distance(p2, p3) / scale});
    if (unit) {
      const Point p4 = isogonal_weaver(P, symmetric_triple(cfg.f, cfg.g, std::polar(1.0, th)));
      weaver = std::max(weaver, distance(p1, p4));
      ++circle_cases;
    }
    ++done;
  }
  CheckResult r{"isog-methods", pair < tol && weaver < 1e-9, {}};
  r.report = {{"trials", n},
              {"rejected_far_or_undefined", rejected},
              {"unit_circle_trials", circle_cases},
              {"max_pairwise_over_a", pair},
              {"max_weaver_deviation", weaver},
              {"tolerance", tol}};
  return r;
}

// Boundary quartic of the circumcircle sweep and its tangency points on the outer ellipse.
CheckResult check_boundary_quartic(const Context& ctx) {
  const double tol = ctx.tol("boundary-quartic", 1e-6);
  Sampler s(ctx.seed);
  const int n = ctx.trials(10);
  double on_quartic = 0, tangency_outer = 0, tangency_region = 0, tangency_quartic = 0;
  std::size_t points = 0, roots = 0;
  for (int i = 0; i < n; ++i) {
    const PonceletConfig cfg = s.config();
    const double scale = boundary_quartic_scale(cfg);
    const CircleEnvelope env =
        envelope_of_circles([&](double u) { return circumcircle_of(triangle_at(cfg, u)); }, uniform_grid(256, 0.5));
    for (const auto& pair : env.points) {
      for (const Point& p : pair) {
        on_quartic = std::max(on_quartic, std::abs(boundary_quartic_eval(cfg, p.x, p.y)) / scale);
        ++points;
      }
    }
    for (const TangencyPoint& tp : tangency_points(cfg).points) {
      const RegionVerdict v = region_membership(cfg, tp.p);
      tangency_outer = std::max(tangency_outer, ellipse_level(cfg, tp.p));
      tangency_region = std::max(tangency_region, std::min(std::abs(v.min_h), std::abs(v.max_h)) / cfg.a);
      tangency_quartic = std::max(tangency_quartic, std::abs(boundary_quartic_eval(cfg, tp.p.x, tp.p.y)) / scale);
      ++roots;
    }
  }
  CheckResult r{"boundary-quartic",
                on_quartic < tol && tangency_outer < 1e-7 && tangency_region < 1e-7 && tangency_quartic < tol, {}};
  r.report = {{"configs", n},
              {"envelope_points", points},
              {"max_quartic_on_envelope", on_quartic},
              {"tangency_points", roots},
              {"max_tangency_off_outer", tangency_outer},
              {"max_tangency_off_region_boundary", tangency_region},
              {"max_quartic_at_tangency", tangency_quartic},
              {"tolerance", tol}};
  return r;
}

// Line loci of outer-ellipse points and their envelope.
CheckResult check_line_locus(const Context& ctx) {
  const double tol = ctx.tol("line-locus", 1e-8);
  Sampler s(ctx.seed);
  const int n = ctx.trials(10);
  double collinear = 0, restored = 0, closed = 0, center = 0, xy = 0;
  for (int i = 0; i < n; ++i) {
    const PonceletConfig cfg = s.config();
    for (double phi : uniform_grid(16, 0.5)) {
      const double t = std::tan(phi / 2);
      const Line L = degenerate_line_locus(cfg, t).line.normalized();
      const LocusSamples ls =
          sample_locus(cfg, LocusTarget::isogonal_of(outer_rational_point(cfg, t)), 128, 20 * cfg.a);
      for (const Point& p : ls.defined_points()) collinear = std::max(collinear, std::abs(L.eval(p)) / cfg.a);
    }
    const LineEnvelopeReport e = line_locus_envelope(cfg);
    restored = std::max(restored, e.distance_restored);
    closed = std::max(closed, e.distance_closed_form);
    center = std::max(center, distance(e.center, e.caustic_center) / cfg.a);
    xy = std::max(xy, std::abs(e.xy_term));
  }
  CheckResult r{"line-locus", collinear < tol && restored < 1e-6 && center < 1e-7, {}};
  r.report = {{"configs", n},
              {"t_values", 16},
              {"max_line_deviation_over_a", collinear},
              {"max_envelope_distance_restored", restored},
              {"max_envelope_distance_closed_form", closed},
              {"max_center_deviation_over_a", center},
              {"max_xy_coefficient", xy},
              {"tolerance", tol}};
  return r;
}

// Envelope of the circumcircle over circular-caustic families.
CheckResult check_circum_envelope(const Context& ctx) {
  const double tol = ctx.tol("circum-envelope", 1e-8);
  Sampler s(ctx.seed);
  const int n = ctx.trials(10);
  double numeric = 0, gate = 0, centers = 0, radius_gap = 0, touch = 0;
  std::size_t points = 0, omitted = 0;
  std::vector<PonceletConfig> cfgs{config_circular_caustic(2, 1, 0, 0)};
  for (int i = 0; i < n; ++i) cfgs.push_back(s.circular());
  for (const PonceletConfig& cfg : cfgs) {
    const CircumEnvelope E = circum_envelope_circles(cfg);
    const CircumLocusSpec x3 = predict_x3_locus_circular(cfg);
    for (double u : uniform_grid(64)) {
      const Circle K = circumcircle_of(triangle_at(cfg, u)), Kp = circumcircle_at(cfg, u);
      gate = std::max(gate, (distance(K.center, Kp.center) + std::abs(K.radius - Kp.radius)) / cfg.a);
    }
    ImplicitEnvelopeOptions o;
    o.origin = cfg.caustic_center();
    o.radius = 4 * cfg.a;
    o.scale = cfg.a * cfg.a;
    o.tol = 1e-12;
    const ImplicitFamily fam = [&cfg](double u) -> ImplicitMember {
      const Circle K = circumcircle_at(cfg, u);
      return [K](Point p) { return (p - K.center).squared_norm() - K.radius * K.radius; };
    };
    const ImplicitEnvelope env = envelope_of_implicit(fam, uniform_grid(128, 0.5), o);
    for (const Point& p : env.points) {
      numeric = std::max(numeric, std::min(std::abs(distance(p, E.K1.center) - E.K1.radius),
                                           std::abs(distance(p, E.K2.center) - E.K2.radius)));
    }
    points += env.points.size();
    omitted += env.omitted;
    centers = std::max({centers, distance(E.K1.center, x3.F3p), distance(E.K2.center, x3.F3)});
    radius_gap = std::max(radius_gap, std::abs(std::abs(E.K1.radius - E.K2.radius) - 2 * x3.a3));
    for (const Point& p : E.touch1) touch = std::max({touch, ellipse_level(cfg, p), std::abs(distance(p, E.K1.center) - E.K1.radius)});
    for (const Point& p : E.touch2) touch = std::max({touch, ellipse_level(cfg, p), std::abs(distance(p, E.K2.center) - E.K2.radius)});
  }
  const PonceletConfig& c0 = cfgs.front();
  const CircumEnvelope E0 = circum_envelope_circles(c0);
  const CircumLocusSpec x0 = predict_x3_locus_circular(c0);
  const bool concentric = std::abs(c0.circular->radius - 2.0 / 3.0) < 1e-12 && E0.K1.center.norm() < 1e-12 &&
                          E0.K2.center.norm() < 1e-12 && std::abs(E0.K1.radius - 2) < 1e-12 &&
                          std::abs(E0.K2.radius - 1) < 1e-12 && std::abs(x0.a3 - 0.5) < 1e-12 &&
                          std::abs(x0.b3 - 0.5) < 1e-12;
  CheckResult r{"circum-envelope",
                numeric < tol && gate < tol && centers < 1e-10 && radius_gap < 1e-10 && touch < 1e-10 && concentric &&
                    points > 0,
                {}};
  r.report = {{"configs", cfgs.size()},
              {"numeric_points", points},
              {"numeric_omitted", omitted},
              {"max_numeric_off_circles", numeric},
              {"max_closed_form_circumcircle_gap_over_a", gate},
              {"max_center_vs_x3_foci", centers},
              {"max_radius_difference_vs_2a3", radius_gap},
              {"max_touch_point_residual", touch},
              {"concentric", {{"r", c0.circular->radius},
                              {"K1", to_json(E0.K1)},
                              {"K2", to_json(E0.K2)},
                              {"a3", x0.a3},
                              {"b3", x0.b3},
                              {"ok", concentric}}},
              {"tolerance", tol}};
  return r;
}

// Envelope of the radical axis of incircle and circumcircle.
CheckResult check_radical_envelope(const Context& ctx) {
  const double tol = ctx.tol("radical-envelope", 1e-8);
  Sampler s(ctx.seed);
  const double a = 2, b = 1;
  const EllipseSpec tri = equilateral_centroid_locus(a, b);
  std::vector<PonceletConfig> cfgs;
  for (Point C : {Point{0, 0}, Point{0.3, 0.1}, Point{0.95, 0}, Point{0.7, 0.3}, Point{tri.semi_major, 0},
                  Point{0, tri.semi_minor}, tri.at(0.7)})
    cfgs.push_back(config_circular_caustic(a, b, C.x, C.y));
  const int n = ctx.trials(5);
  for (int i = 0; i < n; ++i) cfgs.push_back(s.circular(1e-3));
  double rms = 0, gate = 0, axis = 0, parabola = 0;
  int matched = 0;
  json cases = json::array();
  for (const PonceletConfig& cfg : cfgs) {
    for (double u : uniform_grid(32, 0.25)) {
      const SpecialCircles sc = special_circles(triangle_at(cfg, u));
      Line L, M = radical_axis_at(cfg, u).normalized();
      try {
        L = radical_axis(sc.incircle, sc.circumcircle);
      } catch (const Error&) {
        continue;
      }
      if (L.l * M.l + L.m * M.m < 0) M = {-M.l, -M.m, -M.n};
      gate = std::max(gate, std::abs(L.l - M.l) + std::abs(L.m - M.m) + std::abs(L.n - M.n) / cfg.a);
    }
    const RadicalEnvelopeReport rep = radical_axis_envelope(cfg);
    const bool on = std::abs(rep.level) < 1e-9;
    bool ok;
    if (on) {
      ok = rep.type == ConicType::parabola && std::abs(rep.discriminant) < 1e-6;
      parabola = std::max(parabola, std::abs(rep.discriminant));
    } else {
      ok = rep.level < 0 ? ellipse_like(rep.type) : rep.type == ConicType::hyperbola;
    }
    matched += ok;
    rms = std::max(rms, rep.rms);
    if (std::isfinite(rep.axis_error)) axis = std::max(axis, rep.axis_error);
    const OrthicAxesReport orthic = orthic_axes_envelope_probe(cfg);
    cases.push_back({{"C", to_json(cfg.circular->center)},
                     {"level", rep.level},
                     {"type", to_string(rep.type)},
                     {"discriminant", rep.discriminant},
                     {"rms", rep.rms},
                     {"axis_error", std::isfinite(rep.axis_error) ? json(rep.axis_error) : json(nullptr)},
                     {"gaps", rep.gaps.size()},
                     {"orthic_axis", {{"type", to_string(orthic.L3.type)}, {"rms", orthic.L3.fit.residual}}},
                     {"antiorthic_axis", {{"type", to_string(orthic.L1.type)}, {"rms", orthic.L1.fit.residual}}},
                     {"match", ok}});
  }
  const int total = static_cast<int>(cfgs.size());
  CheckResult r{"radical-envelope", matched == total && rms < tol && gate < tol && axis < 1e-6, {}};
  r.report = {{"configs", total},
              {"matched", matched},
              {"max_fit_rms", rms},
              {"max_closed_form_line_gap", gate},
              {"max_axis_error", axis},
              {"max_parabola_discriminant", parabola},
              {"cases", cases},
              {"tolerance", tol}};
  return r;
}

// The radical axis of incircle and nine-point circle touches the incircle at X11.
CheckResult check_l101(const Context& ctx) {
  const double tol = ctx.tol("l101", 1e-8);
  Sampler s(ctx.seed);
  const int n = ctx.trials(5);
  double tangency = 0, feuerbach = 0;
  bool guarded = false;
  for (int i = 0; i < n; ++i) {
    const PonceletConfig cfg = s.circular(1e-2);
    const L101Report rep = l101_envelope_check(cfg);
    tangency = std::max(tangency, rep.max_tangency / cfg.a);
    feuerbach = std::max(feuerbach, rep.max_x11 / cfg.a);
  }
  const EllipseSpec tri = equilateral_centroid_locus(2, 1);
  try {
    l101_envelope_check(config_circular_caustic(2, 1, tri.semi_major, 0));
  } catch (const Error& e) {
    guarded = e.code() == ErrorCode::undefined_envelope;
  }
  CheckResult r{"l101", tangency < tol && feuerbach < tol && guarded, {}};
  r.report = {{"configs", n},
              {"max_tangency_residual_over_a", tangency},
              {"max_x11_deviation_over_a", feuerbach},
              {"undefined_on_equilateral_locus", guarded},
              {"tolerance", tol}};
  return r;
}

// Conic components of circumcircle and radical-axis envelopes, circular versus eccentric caustics.
CheckResult check_conjectures(const Context& ctx) {
  const double tol = ctx.tol("conjectures", 1e-8);
  Sampler s(ctx.seed);
  const int n = ctx.trials(3);
  json out;
  bool pass = true;
  for (ConjectureKind kind : {ConjectureKind::circum_envelope, ConjectureKind::radical_axis}) {
    double floor = 0, best_eccentric = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const ConjectureReport rep = conjecture_probe(s.circular(1e-3), kind);
      floor = std::max(floor, max_of(rep.residuals));
    }
    int eccentric = 0;
    while (eccentric < n) {
      const PonceletConfig cfg = s.config();
      if (std::abs(cfg.f - cfg.g) < 0.3) continue;
      const EllipseSpec E = caustic_recover(cfg);
      if (E.semi_minor > 0.9 * E.semi_major) continue;
      const ConjectureReport rep = conjecture_probe(cfg, kind);
      for (double v : rep.residuals) best_eccentric = std::min(best_eccentric, v);
      ++eccentric;
    }
    const bool ok = floor < tol && best_eccentric >= 100 * floor;
    pass = pass && ok;
    out[to_string(kind)] = {{"circular_floor", floor}, {"eccentric_best", best_eccentric}, {"separated", ok}};
  }
  CheckResult r{"conjectures", pass, {}};
  r.report = {{"configs_per_class", n}, {"probes", out}, {"tolerance", tol}};
  return r;
}

using CheckFn = std::function<CheckResult(const Context&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r{
      {"closure", check_closure},
      {"x4-locus", check_x4},
      {"isog-circle", check_isog_circle},
      {"isog-conic", check_isog_conic},
      {"isog-methods", check_isog_methods},
      {"boundary-quartic", check_boundary_quartic},
      {"line-locus", check_line_locus},
      {"circum-envelope", check_circum_envelope},
      {"radical-envelope", check_radical_envelope},
      {"l101", check_l101},
      {"conjectures", check_conjectures},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const CheckOptions& opts) {
  const auto& reg = registry();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (reg[i].first != name) continue;
    // each check draws from its own stream so results do not depend on order
    const Context ctx{opts, opts.seed + 1000003ULL * (i + 1)};
    try {
      return reg[i].second(ctx);
    } catch (const Error& e) {
      return {name, false, {{"error", to_string(e.code())}, {"message", e.what()}}};
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown check " + name);
}

std::vector<CheckResult> run_all(const CheckOptions& opts) {
  std::vector<CheckResult> out;
  for (const auto& name : check_names()) out.push_back(run_check(name, opts));
  return out;
}

json to_json(const CheckResult& r) { return {{"name", r.name}, {"passed", r.passed}, {"report", r.report}}; }

}  // namespace poncelet
