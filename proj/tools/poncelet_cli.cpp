#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poncelet/centers.hpp"
#include "poncelet/checks.hpp"
#include "poncelet/envelope.hpp"
#include "poncelet/envelopes.hpp"
#include "poncelet/family.hpp"
#include "poncelet/fit.hpp"
#include "poncelet/io.hpp"
#include "poncelet/loci.hpp"
#include "poncelet/svg.hpp"

using namespace poncelet;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::optional<double> a, b, xc, yc;
  std::vector<double> f, g, P;
  bool outer_circle = false;
  int theta_samples = 0;
  std::vector<std::string> tol;
  std::string out, svg;
  std::string target = "X4";
  std::string what;
  std::string scene;
  std::vector<std::string> checks;
  bool all = false;
  int trials = 0;
  double t = 0.5;
};

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& s : items) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects NAME=VALUE, got " + s);
    double v = 0;
    try {
      v = std::stod(s.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--tol value is not a number: " + s);
    }
    if (!(v > 0) || !std::isfinite(v)) throw UsageError("tolerances must be positive: " + s);
    out[s.substr(0, eq)] = v;
  }
  return out;
}

double tol_or(const Options& o, const std::string& name, double fallback) {
  const auto m = parse_tolerances(o.tol);
  const auto it = m.find(name);
  return it == m.end() ? fallback : it->second;
}

bool has_config(const Options& o) { return !o.config.empty() || o.a || o.outer_circle; }

PonceletConfig config_of(const Options& o) {
  if (!o.config.empty()) return load_config(o.config);
  double a = o.a.value_or(1.0), b = o.b.value_or(a);
  if (o.outer_circle) a = b = 1.0;
  if (!o.a && !o.outer_circle) throw UsageError("a configuration is required: --config FILE or --a/--b");
  const bool focal = !o.f.empty() || !o.g.empty();
  const bool circular = o.xc || o.yc;
  if (focal == circular) throw UsageError("give either --f and --g or --xc and --yc");
  if (circular) return config_circular_caustic(a, b, o.xc.value_or(0.0), o.yc.value_or(0.0));
  if (o.f.size() != 2 || o.g.size() != 2) throw UsageError("--f and --g take RE IM");
  return make_config(a, b, {o.f[0], o.f[1]}, {o.g[0], o.g[1]});
}

PonceletConfig config_or(const Options& o, const PonceletConfig& fallback) {
  return has_config(o) ? config_of(o) : fallback;
}

Point point_option(const Options& o) {
  if (o.P.size() != 2) throw UsageError("--P X Y is required");
  return {o.P[0], o.P[1]};
}

int samples(const Options& o, int fallback) {
  if (o.theta_samples < 0) throw UsageError("--theta-samples must be positive");
  return o.theta_samples > 0 ? o.theta_samples : fallback;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text(o.out, text);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json conic_summary(const LocusFit& fit) {
  json j = to_json(fit);
  const ConicCoeffs c = fit.conic();
  const ConicType type = fit.type();
  j["type"] = to_string(type);
  if (type == ConicType::real_ellipse || type == ConicType::circle) j["ellipse"] = to_json(ellipse_from_conic(c));
  return j;
}

LocusTarget target_of(const Options& o) {
  std::string t = o.target;
  if (t == "isogonal") return LocusTarget::isogonal_of(point_option(o));
  if (!t.empty() && (t[0] == 'X' || t[0] == 'x')) t = t.substr(1);
  int k = 0;
  try {
    k = std::stoi(t);
  } catch (const std::exception&) {
    throw UsageError("unknown target " + o.target);
  }
  if (!is_supported_center(k)) throw UsageError("unsupported center X" + t);
  return LocusTarget::center_of(k);
}

// Drawing helpers: the scene box is a few outer semi-axes wide.
struct Frame {
  double half;

  bool inside(Point p) const { return p.finite() && std::abs(p.x) <= half && std::abs(p.y) <= half; }

  std::vector<Point> clip(const std::vector<Point>& pts) const {
    std::vector<Point> out;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const Point& p : pts) out.push_back(inside(p) ? p : Point{nan, nan});
    return out;
  }

  bool holds(const std::vector<Point>& pts) const {
    return std::all_of(pts.begin(), pts.end(), [&](Point p) { return inside(p); });
  }

  void curve(SvgScene& s, const std::vector<Point>& pts, const std::string& color, double width = 1.2) const {
    s.polyline(clip(pts), color, width, holds(pts));
  }

  void line(SvgScene& s, const Line& L, const std::string& color, double width = 0.5) const {
    const Line n = L.normalized();
    const Point foot = -n.n * n.normal();
    if (foot.norm() > half * 1.5) return;
    const Point d = n.direction() * (3 * half);
    const Point p = foot - d, q = foot + d;
    // shorten to the box
    auto cut = [&](Point from, Point to) {
      double lo = 0, hi = 1;
      for (int i = 0; i < 60; ++i) {
        const double mid = (lo + hi) / 2;
        (inside(from + mid * (to - from)) ? lo : hi) = mid;
      }
      return from + lo * (to - from);
    };
    if (!inside(foot)) return;
    s.segment(cut(foot, p), cut(foot, q), color, width);
  }
};

std::vector<Point> ellipse_points(const EllipseSpec& e, int n = 256) {
  std::vector<Point> pts;
  for (double t : uniform_grid(static_cast<std::size_t>(n))) pts.push_back(e.at(t));
  return pts;
}

void draw_family(SvgScene& s, const PonceletConfig& cfg, int count) {
  s.polyline(ellipse_points({{0, 0}, cfg.a, cfg.b, 0}), "#000", 1.2, true);
  s.polyline(ellipse_points(caustic_recover(cfg)), "#444", 1.0, true, "4 3");
  for (double th : uniform_grid(static_cast<std::size_t>(count), 0.25)) {
    const Triangle T = triangle_at(cfg, th);
    s.polyline({T.A(), T.B(), T.C()}, "#9bb", 0.6, true);
  }
}

std::string scene_x4(const Options& o) {
  const PonceletConfig cfg = config_or(o, make_config(1.5, 1.0, {0.3, 0.2}, {-0.35, 0.15}));
  SvgScene s;
  draw_family(s, cfg, 3);
  s.polyline(sample_locus(cfg, LocusTarget::center_of(4), samples(o, 256)).points, "#c00", 1.2, true);
  s.polyline(ellipse_points(predict_x4_locus(cfg).ellipse()), "#00c", 0.6, true, "2 2");
  s.dot(predict_x4_locus(cfg).C4, "#00c");
  return s.render();
}

std::string scene_exterior_r(const Options& o) {
  const PonceletConfig cfg = config_or(o, make_config(1.5, 1.0, {0.3, 0.2}, {-0.35, 0.15}));
  const Frame fr{2.5 * cfg.a};
  SvgScene s;
  draw_family(s, cfg, 1);
  for (double u : uniform_grid(12, 0.5)) s.circle(circumcircle_of(triangle_at(cfg, u)), "#ccc", 0.5);
  const CircleEnvelope env =
      envelope_of_circles([&](double u) { return circumcircle_of(triangle_at(cfg, u)); }, uniform_grid(512, 0.5));
  std::vector<Point> outer, inner;
  for (const auto& p : env.points) {
    outer.push_back(p[0]);
    inner.push_back(p[1]);
  }
  fr.curve(s, outer, "#c60");
  fr.curve(s, inner, "#c60");
  for (const auto& tp : tangency_points(cfg).points) s.dot(tp.p, "#c60");
  const Point P = o.P.size() == 2 ? point_option(o) : region_boundary_point(cfg, {1, 0.3}, false) * 1.2;
  s.dot(P, "#c00");
  s.label(P, to_string(region_membership(cfg, P).membership));
  fr.curve(s, sample_locus(cfg, LocusTarget::isogonal_of(P), samples(o, 512), 10 * cfg.a).points, "#c00", 1.0);
  return s.render();
}

std::string scene_circum_env(const Options& o) {
  PonceletConfig cfg = config_or(o, config_circular_caustic(2, 1, 0.3, 0.1));
  if (!cfg.circular) throw UsageError("circum-env needs a circular caustic (--xc --yc)");
  SvgScene s;
  s.polyline(ellipse_points({{0, 0}, cfg.a, cfg.b, 0}), "#000", 1.2, true);
  s.circle({cfg.circular->center, cfg.circular->radius}, "#444", 1.0, "4 3");
  for (double u : uniform_grid(10, 0.5)) s.circle(circumcircle_at(cfg, u), "#bbb", 0.5);
  const CircumEnvelope E = circum_envelope_circles(cfg);
  s.circle(E.K1, "#c60", 1.4);
  s.circle(E.K2, "#06c", 1.4);
  for (Point p : E.touch1) s.dot(p, "#c60");
  for (Point p : E.touch2) s.dot(p, "#06c");
  s.polyline(sample_locus(cfg, LocusTarget::center_of(3), samples(o, 256)).points, "#c00", 1.0, true);
  return s.render();
}

std::string radical_scene(const PonceletConfig& cfg, const Options& o) {
  const Frame fr{2.0 * cfg.a};
  SvgScene s;
  s.polyline(ellipse_points({{0, 0}, cfg.a, cfg.b, 0}), "#000", 1.2, true);
  s.circle({cfg.circular->center, cfg.circular->radius}, "#444", 1.0, "4 3");
  s.polyline(ellipse_points(equilateral_centroid_locus(cfg.a, cfg.b)), "#888", 0.8, true, "1 3");
  for (double u : uniform_grid(24, 0.5)) {
    try {
      fr.line(s, radical_axis_at(cfg, u), "#bbb");
    } catch (const Error&) {
    }
  }
  const RadicalEnvelopeReport rep = radical_axis_envelope(cfg, samples(o, 512));
  fr.curve(s, rep.points, "#c00");
  s.dot(cfg.circular->center, "#000");
  s.label(cfg.circular->center, to_string(rep.type));
  return s.render();
}

std::string scene_env_ell_hyp(const Options& o) {
  const PonceletConfig cfg = config_or(o, config_circular_caustic(2, 1, 0.3, 0.1));
  if (!cfg.circular) throw UsageError("env-ell-hyp needs a circular caustic (--xc --yc)");
  return radical_scene(cfg, o);
}

std::string scene_env_par(const Options& o) {
  const double a = o.a.value_or(2.0), b = o.b.value_or(1.0);
  const Point C = equilateral_centroid_locus(a, b).at(0.7);
  return radical_scene(config_circular_caustic(a, b, C.x, C.y), o);
}

std::string scene_on_e(const Options& o) {
  const PonceletConfig cfg = config_or(o, make_config(1.5, 1.0, {0.3, 0.2}, {-0.35, 0.15}));
  const Frame fr{4.0 * cfg.a};
  SvgScene s;
  draw_family(s, cfg, 1);
  for (double phi : uniform_grid(20, 0.5)) {
    const double t = std::tan(phi / 2);
    const LineLocus L = degenerate_line_locus(cfg, t);
    fr.line(s, L.line, "#bbb");
    s.dot(outer_rational_point(cfg, t), "#c00", 2.0);
  }
  const LineEnvelopeReport rep = line_locus_envelope(cfg);
  const LineFamily fam = [&cfg](double phi) { return degenerate_line_locus(cfg, std::tan(phi / 2)).line; };
  fr.curve(s, envelope_of_lines(fam, uniform_grid(512, 0.5)).points, "#c00");
  s.dot(rep.center, "#c00");
  return s.render();
}

int cmd_family(const Options& o) {
  const PonceletConfig cfg = config_of(o);
  std::vector<std::vector<double>> rows;
  for (double th : uniform_grid(static_cast<std::size_t>(samples(o, 64)))) {
    const Triangle T = triangle_at(cfg, th);
    rows.push_back({th, T.A().x, T.A().y, T.B().x, T.B().y, T.C().x, T.C().y});
  }
  emit(o, to_csv({"theta", "ax", "ay", "bx", "by", "cx", "cy"}, rows));
  if (!o.svg.empty()) {
    SvgScene s;
    draw_family(s, cfg, 4);
    write_text(o.svg, s.render());
  }
  return 0;
}

int cmd_locus(const Options& o) {
  const PonceletConfig cfg = config_of(o);
  const LocusTarget target = target_of(o);
  const LocusSamples ls = sample_locus(cfg, target, samples(o, 256), 100 * cfg.a);
  if (!o.out.empty()) write_text(o.out, locus_csv(ls));
  json j;
  j["config"] = config_to_json(cfg);
  j["target"] = o.target;
  j["samples"] = ls.points.size();
  j["undefined"] = ls.undefined;
  j["mostly_at_infinity"] = ls.mostly_at_infinity;
  const std::vector<Point> pts = ls.defined_points();
  if (pts.size() >= 6) {
    const LocusFit fit = fit_curve(pts, Basis::conic6);
    j["conic"] = conic_summary(fit);
    const json c = j["conic"];
    if (c.contains("ellipse")) {
      const EllipseSpec e = ellipse_from_conic(fit.conic());
      if (std::abs(e.semi_major - e.semi_minor) <= 1e-9 * e.semi_major)
        j["circle"] = {{"center", to_json(e.center)}, {"radius", e.semi_major}};
    }
  }
  if (pts.size() >= 9) {
    // circles leave a two-dimensional quartic null space
    try {
      j["quartic"] = to_json(fit_curve(pts, Basis::quartic9));
    } catch (const Error& e) {
      j["quartic"] = {{"error", to_string(e.code())}};
    }
  }
  if (!o.svg.empty()) {
    SvgScene s;
    draw_family(s, cfg, 2);
    Frame{3 * cfg.a}.curve(s, ls.points, "#c00");
    write_text(o.svg, s.render());
  }
  print_json(j);
  return 0;
}

int cmd_predict(const Options& o) {
  const PonceletConfig cfg = config_of(o);
  const std::string what = o.what.empty() ? "caustic" : o.what;
  json j;
  j["config"] = config_to_json(cfg);
  j["what"] = what;
  if (what == "caustic") {
    const EllipseSpec e = caustic_recover(cfg);
    j["caustic"] = to_json(e);
    j["center"] = to_json(cfg.caustic_center());
  } else if (what == "x4-locus") {
    const OrthoLocusSpec s = predict_x4_locus(cfg);
    j["C4"] = to_json(s.C4);
    j["a4"] = s.a4;
    j["b4"] = s.b4;
    j["sigma"] = s.sigma;
    j["ellipse"] = to_json(s.ellipse());
  } else if (what == "isog-circle") {
    if (cfg.a != cfg.b) throw UsageError("isog-circle needs a circular outer conic (--outer-circle)");
    const IsogCircleSpec s = predict_isog_circle(cfg.f, cfg.g, point_option(o).complex());
    j["circle"] = to_json(s.circle());
  } else if (what == "circular-caustic") {
    if (!cfg.circular) throw UsageError("configuration has no circular caustic");
    j["caustic"] = to_json(Circle{cfg.circular->center, cfg.circular->radius});
  } else if (what == "x3-locus") {
    const CircumLocusSpec s = predict_x3_locus_circular(cfg);
    j["F3"] = to_json(s.F3);
    j["F3p"] = to_json(s.F3p);
    j["a3"] = s.a3;
    j["b3"] = s.b3;
    j["ellipse"] = to_json(s.ellipse());
  } else if (what == "circum-envelope") {
    const CircumEnvelope e = circum_envelope_circles(cfg);
    j["K1"] = to_json(e.K1);
    j["K2"] = to_json(e.K2);
    j["touch1"] = {to_json(e.touch1[0]), to_json(e.touch1[1])};
    j["touch2"] = {to_json(e.touch2[0]), to_json(e.touch2[1])};
  } else if (what == "equilateral-locus") {
    j["ellipse"] = to_json(equilateral_centroid_locus(cfg.a, cfg.b));
    if (cfg.circular) j["level"] = equilateral_locus_level(cfg);
  } else if (what == "tangency") {
    const TangencyReport r = tangency_points(cfg);
    j["quartic"] = r.quartic;
    j["real_roots"] = r.real_roots;
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back({{"t", p.t}, {"point", to_json(p.p)}, {"at_infinity", p.at_infinity}});
    j["points"] = pts;
  } else if (what == "line-locus") {
    const LineLocus L = degenerate_line_locus(cfg, o.t);
    j["t"] = o.t;
    j["P"] = to_json(outer_rational_point(cfg, o.t));
    j["line"] = to_json(L.line);
    j["Q"] = to_json(L.Q);
  } else if (what == "x36-line") {
    j["line"] = to_json(x36_degenerate_line(cfg, tol_or(o, "equilateral", 1e-9)));
  } else {
    throw UsageError("unknown --what for predict: " + what);
  }
  print_json(j);
  return 0;
}

int cmd_region(const Options& o) {
  const PonceletConfig cfg = config_of(o);
  const Point P = point_option(o);
  const RegionVerdict v = region_membership(cfg, P, tol_or(o, "region", 1e-9), samples(o, 512));
  json j;
  j["P"] = to_json(P);
  j["membership"] = to_string(v.membership);
  j["min_h"] = v.min_h;
  j["max_h"] = v.max_h;
  j["u_min"] = v.u_min;
  j["u_max"] = v.u_max;
  j["witness_u"] = v.witness_u ? json(*v.witness_u) : json(nullptr);
  j["boundary_quartic"] = boundary_quartic_eval(cfg, P.x, P.y) / boundary_quartic_scale(cfg);
  print_json(j);
  return 0;
}

int cmd_envelope(const Options& o) {
  const PonceletConfig cfg = config_of(o);
  const std::string what = o.what.empty() ? "circumcircle" : o.what;
  const double peps = tol_or(o, "parabola", 1e-6);
  const int N = samples(o, 512);
  std::vector<std::vector<double>> rows;
  json j;
  j["what"] = what;
  j["config"] = config_to_json(cfg);
  auto add_line_family = [&](const std::vector<Point>& pts, const std::vector<double>& us) {
    for (std::size_t i = 0; i < pts.size(); ++i) rows.push_back({us[i], pts[i].x, pts[i].y, 0});
  };
  if (what == "circumcircle") {
    const CircleEnvelope env =
        envelope_of_circles([&](double u) { return circumcircle_of(triangle_at(cfg, u)); }, uniform_grid(N, 0.5));
    std::vector<Point> comp[2];
    for (std::size_t i = 0; i < env.points.size(); ++i) {
      for (int k = 0; k < 2; ++k) {
        rows.push_back({env.u[i], env.points[i][k].x, env.points[i][k].y, static_cast<double>(k)});
        comp[k].push_back(env.points[i][k]);
      }
    }
    j["gaps"] = env.gaps.size();
    j["components"] = {conic_summary(fit_curve(comp[0], Basis::conic6)), conic_summary(fit_curve(comp[1], Basis::conic6))};
    double D = 0;
    for (const auto& c : comp)
      for (const Point& p : c) D = std::max(D, std::abs(boundary_quartic_eval(cfg, p.x, p.y)));
    j["max_boundary_quartic"] = D / boundary_quartic_scale(cfg);
  } else if (what == "radical-axis") {
    const RadicalEnvelopeReport r = radical_axis_envelope(cfg, N, peps);
    for (std::size_t i = 0; i < r.points.size(); ++i) rows.push_back({static_cast<double>(i), r.points[i].x, r.points[i].y, 0});
    j["conic"] = conic_summary(r.fit);
    j["type"] = to_string(r.type);
    j["discriminant"] = r.discriminant;
    j["level"] = r.level;
    j["axis_error"] = std::isfinite(r.axis_error) ? json(r.axis_error) : json(nullptr);
    j["gaps"] = r.gaps.size();
  } else if (what == "orthic" || what == "antiorthic") {
    const OrthicAxesReport r = orthic_axes_envelope_probe(cfg, N, peps);
    const AxisEnvelope& e = what == "orthic" ? r.L3 : r.L1;
    j["conic"] = conic_summary(e.fit);
    j["type"] = to_string(e.type);
    j["discriminant"] = e.discriminant;
    j["axis_angle"] = e.axis_angle;
    j["gaps"] = e.gaps;
  } else if (what == "line-locus") {
    const LineFamily fam = [&cfg](double phi) { return degenerate_line_locus(cfg, std::tan(phi / 2)).line; };
    const LineEnvelope env = envelope_of_lines(fam, uniform_grid(N, 0.5));
    add_line_family(env.points, env.u);
    const LineEnvelopeReport r = line_locus_envelope(cfg);
    j["conic"] = to_json(r.numeric);
    j["closed_form"] = to_json(r.closed_form);
    j["restored"] = to_json(r.restored);
    j["distance_closed_form"] = r.distance_closed_form;
    j["distance_restored"] = r.distance_restored;
    j["center"] = to_json(r.center);
    j["caustic_center"] = to_json(r.caustic_center);
    j["xy_term"] = r.xy_term;
  } else if (what == "l101") {
    const L101Report r = l101_envelope_check(cfg, N);
    j["max_tangency"] = r.max_tangency;
    j["max_x11"] = r.max_x11;
    j["samples"] = r.samples;
  } else {
    throw UsageError("unknown --what for envelope: " + what);
  }
  if (!o.out.empty()) write_text(o.out, to_csv({"u", "x", "y", "component"}, rows));
  print_json(j);
  return 0;
}

int cmd_verify(const Options& o) {
  CheckOptions co;
  co.trials = o.trials;
  co.tol = parse_tolerances(o.tol);
  std::vector<std::string> names = o.checks;
  if (o.all || names.empty()) names = check_names();
  for (const auto& n : names) {
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw UsageError("unknown check " + n);
  }
  json j;
  json list = json::array();
  bool pass = true;
  for (const auto& n : names) {
    const CheckResult r = run_check(n, co);
    pass = pass && r.passed;
    list.push_back(to_json(r));
  }
  j["checks"] = list;
  j["passed"] = pass;
  const std::string text = j.dump(2) + "\n";
  if (!o.out.empty()) write_text(o.out, text);
  std::cout << text;
  return pass ? 0 : 1;
}

int cmd_probe(const Options& o) {
  const PonceletConfig cfg = config_of(o);
  const std::string what = o.what.empty() ? "circum-envelope" : o.what;
  ConjectureKind kind;
  if (what == "circum-envelope")
    kind = ConjectureKind::circum_envelope;
  else if (what == "radical-axis")
    kind = ConjectureKind::radical_axis;
  else
    throw UsageError("unknown --what for probe: " + what);
  const ConjectureReport r = conjecture_probe(cfg, kind, samples(o, 1024), tol_or(o, "conjecture", 1e-6));
  json j;
  j["config"] = config_to_json(cfg);
  j["which"] = to_string(r.which);
  j["residuals"] = r.residuals;
  j["verdict"] = r.conic_component ? "conic_component" : "no_conic_component";
  j["inseparable"] = r.inseparable;
  j["threshold"] = r.threshold;
  j["gaps"] = r.gaps;
  print_json(j);
  return 0;
}

int cmd_render(const Options& o) {
  const std::string scene = o.scene.empty() ? "x4" : o.scene;
  std::string svg;
  if (scene == "x4")
    svg = scene_x4(o);
  else if (scene == "exterior-r")
    svg = scene_exterior_r(o);
  else if (scene == "circum-env")
    svg = scene_circum_env(o);
  else if (scene == "env-ell-hyp")
    svg = scene_env_ell_hyp(o);
  else if (scene == "env-par")
    svg = scene_env_par(o);
  else if (scene == "on-e")
    svg = scene_on_e(o);
  else
    throw UsageError("unknown scene " + scene);
  const std::string path = !o.svg.empty() ? o.svg : o.out;
  if (path.empty())
    std::cout << svg;
  else
    write_text(path, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poncelet triangle families between two ellipses"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "configuration JSON file");
  app.add_option("--a", o.a, "outer semi-axis along x");
  app.add_option("--b", o.b, "outer semi-axis along y");
  app.add_option("--f", o.f, "caustic preimage focus f (RE IM)")->expected(2);
  app.add_option("--g", o.g, "caustic preimage focus g (RE IM)")->expected(2);
  app.add_option("--xc", o.xc, "circular caustic center x");
  app.add_option("--yc", o.yc, "circular caustic center y");
  app.add_flag("--outer-circle", o.outer_circle, "unit circle as the outer conic");
  app.add_option("--theta-samples", o.theta_samples, "grid size");
  app.add_option("--tol", o.tol, "tolerance override NAME=VALUE")->take_all();
  app.add_option("--out", o.out, "output path");
  app.add_option("--svg", o.svg, "SVG output path");
  app.add_option("--P", o.P, "point (X Y)")->expected(2);

  std::map<std::string, std::function<int(const Options&)>> commands;
  app.add_subcommand("family", "triangles of the family as CSV");
  commands["family"] = cmd_family;
  auto* locus = app.add_subcommand("locus", "sampled locus of a center or isogonal image, with fits");
  locus->add_option("--target", o.target, "X1..X40 or isogonal");
  commands["locus"] = cmd_locus;
  auto* predict = app.add_subcommand("predict", "closed-form predictions");
  predict->add_option("--what", o.what);
  predict->add_option("--t", o.t, "outer-ellipse parameter for line-locus");
  commands["predict"] = cmd_predict;
  app.add_subcommand("region", "membership of --P in the circumcircle sweep");
  commands["region"] = cmd_region;
  auto* envelope = app.add_subcommand("envelope", "numeric envelopes");
  envelope->add_option("--what", o.what);
  commands["envelope"] = cmd_envelope;
  auto* verify = app.add_subcommand("verify", "run named theorem checks");
  verify->add_option("--check", o.checks, "check name (repeatable)");
  verify->add_flag("--all", o.all, "run every check");
  verify->add_option("--trials", o.trials, "trials per check");
  commands["verify"] = cmd_verify;
  auto* probe = app.add_subcommand("probe", "conjecture probes");
  probe->add_option("--what", o.what, "circum-envelope or radical-axis");
  commands["probe"] = cmd_probe;
  auto* render = app.add_subcommand("render", "SVG scenes");
  render->add_option("--scene", o.scene, "x4, exterior-r, circum-env, env-ell-hyp, env-par, on-e");
  commands["render"] = cmd_render;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    parse_tolerances(o.tol);
    for (auto* sub : app.get_subcommands()) return commands.at(sub->get_name())(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::invalid_argument || e.code() == ErrorCode::no_poncelet_family ? 2 : 1;
  }
  return 2;
}
