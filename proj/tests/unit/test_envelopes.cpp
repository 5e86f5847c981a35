#include <doctest.h>

#include <cmath>

#include "poncelet/centers.hpp"
#include "poncelet/envelopes.hpp"
#include "poncelet/loci.hpp"

using namespace poncelet;
using doctest::Approx;

namespace {

double outer_level(const PonceletConfig& cfg, Point p) {
  return p.x * p.x / (cfg.a * cfg.a) + p.y * p.y / (cfg.b * cfg.b) - 1;
}

Line oriented(Line L, const Line& ref) {
  L = L.normalized();
  if (L.l * ref.l + L.m * ref.m < 0) L = {-L.l, -L.m, -L.n};
  return L;
}

}  // namespace

TEST_CASE("circumcircle closed form matches the vertices") {
  for (Point C : {Point{0, 0}, Point{0.3, 0.1}, Point{-0.5, 0.2}}) {
    const PonceletConfig cfg = config_circular_caustic(2, 1, C.x, C.y);
    for (int k = 0; k < 16; ++k) {
      const double u = 0.4 * k;
      const Circle K = circumcircle_of(triangle_at(cfg, u));
      const Circle Kp = circumcircle_at(cfg, u);
      CHECK(distance(K.center, Kp.center) < 1e-10);
      CHECK(K.radius == Approx(Kp.radius).epsilon(1e-10));
    }
  }
}

TEST_CASE("concentric circumcircle envelope") {
  const PonceletConfig cfg = config_circular_caustic(2, 1, 0, 0);
  CHECK(cfg.circular->radius == Approx(2.0 / 3));
  const CircumEnvelope e = circum_envelope_circles(cfg);
  CHECK(e.K1.center.norm() < 1e-15);
  CHECK(e.K2.center.norm() < 1e-15);
  CHECK(e.K1.radius == Approx(2));
  CHECK(e.K2.radius == Approx(1));
  const CircumLocusSpec x3 = predict_x3_locus_circular(cfg);
  CHECK(std::abs(e.K1.radius - e.K2.radius) == Approx(2 * x3.a3));
}

TEST_CASE("circumcircle envelope: centers, touch points, numeric envelope") {
  const PonceletConfig cfg = config_circular_caustic(2, 1, 0.3, 0.1);
  const CircumEnvelope e = circum_envelope_circles(cfg);
  const CircumLocusSpec x3 = predict_x3_locus_circular(cfg);
  CHECK(distance(e.K1.center, {0, -0.3}) < 1e-15);
  CHECK(distance(e.K2.center, {0.225, 0}) < 1e-15);
  CHECK(distance(e.K1.center, x3.F3p) < 1e-15);
  CHECK(distance(e.K2.center, x3.F3) < 1e-15);
  CHECK(std::abs(std::abs(e.K1.radius - e.K2.radius) - 2 * x3.a3) < 1e-10);
  for (const auto* touch : {&e.touch1, &e.touch2})
    for (const Point& p : *touch) CHECK(std::abs(outer_level(cfg, p)) < 1e-12);
  // K1 touches the outer ellipse at touch1, K2 at touch2
  for (const Point& p : e.touch1) CHECK(std::abs(distance(p, e.K1.center) - e.K1.radius) < 1e-10);
  for (const Point& p : e.touch2) CHECK(std::abs(distance(p, e.K2.center) - e.K2.radius) < 1e-10);

  const CircleEnvelope env =
      envelope_of_circles([&](double u) { return circumcircle_at(cfg, u); }, uniform_grid(64, 0.5));
  for (const auto& pair : env.points)
    for (const Point& p : pair) {
      const double d1 = std::abs(distance(p, e.K1.center) - e.K1.radius);
      const double d2 = std::abs(distance(p, e.K2.center) - e.K2.radius);
      CHECK(std::min(d1, d2) < 1e-8);
    }
}

TEST_CASE("radical axis closed form") {
  const PonceletConfig cfg = config_circular_caustic(2, 1, 0.3, 0.1);
  for (int k = 0; k < 16; ++k) {
    const double u = 0.4 * k;
    const SpecialCircles s = special_circles(triangle_at(cfg, u));
    const Line M = radical_axis_at(cfg, u).normalized();
    const Line L = oriented(radical_axis(s.incircle, s.circumcircle), M);
    CHECK(std::abs(L.l - M.l) + std::abs(L.m - M.m) + std::abs(L.n - M.n) < 1e-9);
    const double h = 1e-5;
    const Line d = radical_axis_derivative(cfg, u);
    const Line p = radical_axis_at(cfg, u + h), q = radical_axis_at(cfg, u - h);
    CHECK(std::abs((p.l - q.l) / (2 * h) - d.l) < 1e-6 * std::max(1.0, std::abs(d.l)));
    CHECK(std::abs((p.n - q.n) / (2 * h) - d.n) < 1e-6 * std::max(1.0, std::abs(d.n)));
  }
}

TEST_CASE("radical axis envelope type follows the equilateral locus") {
  const EllipseSpec tri = equilateral_centroid_locus(2, 1);
  CHECK(tri.semi_major == Approx(6.0 / 7));
  CHECK(tri.semi_minor == Approx(3.0 / 13));

  RadicalEnvelopeReport r = radical_axis_envelope(config_circular_caustic(2, 1, 0.3, 0.1));
  CHECK(r.level < 0);
  CHECK(r.type == ConicType::real_ellipse);
  CHECK(r.rms < 1e-8);
  CHECK(r.axis_error < 1e-6);

  r = radical_axis_envelope(config_circular_caustic(2, 1, 0.95, 0));
  CHECK(r.level > 0);
  CHECK(r.type == ConicType::hyperbola);
  CHECK(r.rms < 1e-8);

  const Point onE = tri.at(0.7);
  r = radical_axis_envelope(config_circular_caustic(2, 1, onE.x, onE.y));
  CHECK(std::abs(r.level) < 1e-12);
  CHECK(r.type == ConicType::parabola);
  CHECK(std::abs(r.discriminant) < 1e-6);
  CHECK(r.axis_error < 1e-6);

  r = radical_axis_envelope(config_circular_caustic(2, 1, 0, 0));
  CHECK(r.rms < 1e-8);
  CHECK(std::isnan(r.axis_error));
}

TEST_CASE("x36 degenerate line") {
  const EllipseSpec tri = equilateral_centroid_locus(2, 1);
  CHECK_THROWS_AS(x36_degenerate_line(config_circular_caustic(2, 1, 0.3, 0.1)), Error);
  for (double t : {0.7, 2.0}) {
    const Point C = tri.at(t);
    const PonceletConfig cfg = config_circular_caustic(2, 1, C.x, C.y);
    const Line L = x36_degenerate_line(cfg);
    const LocusSamples s = sample_locus(cfg, LocusTarget::center_of(36), 128);
    for (const Point& p : s.defined_points()) CHECK(L.distance(p) < 1e-8);
  }
}

TEST_CASE("L101 tangent to the incircle at X11") {
  for (Point C : {Point{0.3, 0.1}, Point{0.95, 0}, Point{-0.2, -0.4}}) {
    const L101Report r = l101_envelope_check(config_circular_caustic(2, 1, C.x, C.y));
    CHECK(r.max_tangency < 1e-8);
    CHECK(r.max_x11 < 1e-8);
  }
  const Point C = equilateral_centroid_locus(2, 1).at(0.4);
  try {
    l101_envelope_check(config_circular_caustic(2, 1, C.x, C.y));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::undefined_envelope);
  }
}

TEST_CASE("orthic and antiorthic axes share the envelope type") {
  const OrthicAxesReport r = orthic_axes_envelope_probe(config_circular_caustic(2, 1, 0.3, 0.1));
  CHECK(r.L3.fit.residual < 1e-8);
  CHECK(r.L1.fit.residual < 1e-8);
  CHECK(r.L3.type == r.L1.type);
}

TEST_CASE("conjecture probes") {
  const PonceletConfig circ = config_circular_caustic(2, 1, 0.3, 0.1);
  ConjectureReport r = conjecture_probe(circ, ConjectureKind::circum_envelope);
  REQUIRE(r.residuals.size() == 2);
  CHECK(r.residuals[0] < 1e-8);
  CHECK(r.residuals[1] < 1e-8);
  CHECK(r.conic_component);
  r = conjecture_probe(circ, ConjectureKind::radical_axis);
  CHECK(r.residuals[0] < 1e-8);

  const PonceletConfig ecc = make_config(2, 1, {0.3, 0.2}, {-0.4, 0.1});
  r = conjecture_probe(ecc, ConjectureKind::circum_envelope);
  CHECK(*std::min_element(r.residuals.begin(), r.residuals.end()) > 1e-6);
  CHECK_FALSE(r.conic_component);
  CHECK_THROWS_AS(conjecture_probe(make_config(1, 1, 0.1, 0.2), ConjectureKind::circum_envelope), Error);
}

TEST_CASE("circular-caustic closed forms need a circular caustic") {
  const PonceletConfig cfg = make_config(2, 1, {0.3, 0.2}, {-0.4, 0.1});
  CHECK_THROWS_AS(circumcircle_at(cfg, 0.1), Error);
  CHECK_THROWS_AS(radical_axis_envelope(cfg), Error);
}
