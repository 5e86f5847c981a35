#include <doctest.h>

#include <cmath>
#include <random>

#include "poncelet/family.hpp"

using namespace poncelet;
using doctest::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;

// incenter and inradius from side lengths and area
Circle incircle_oracle(const Triangle& T) {
  const double p = T.l1() + T.l2() + T.l3();
  const Point I = (T.l1() * T.A() + T.l2() * T.B() + T.l3() * T.C()) / p;
  return {I, 2 * std::abs(T.signed_area()) / p};
}

}  // namespace

TEST_CASE("symmetric triple") {
  SymmetricTriple s = symmetric_triple(0, 0, 1);
  CHECK(std::abs(s.s1) < 1e-15);
  CHECK(std::abs(s.s2) < 1e-15);
  CHECK(std::abs(s.s3 - 1.0) < 1e-15);
  s = symmetric_triple(0.5, 0.5, 1);
  CHECK(std::abs(s.s1 - 1.25) < 1e-15);
  CHECK(std::abs(s.s2 - 1.25) < 1e-15);
  const Complex f{0.3, 0.2}, g{-0.4, 0.1}, lam{0, 1};
  s = symmetric_triple(f, g, lam);
  const Complex s1 = Complex{-0.1, 0.3} + Complex{0, 1} * Complex{0.3, -0.2} * Complex{-0.4, -0.1};
  const Complex s2 = Complex{-0.14, -0.05} + Complex{0, 1} * Complex{-0.1, -0.3};
  CHECK(std::abs(s.s1 - s1) < 1e-15);
  CHECK(std::abs(s.s2 - s2) < 1e-15);
  CHECK(std::abs(s.s3 - lam) < 1e-15);
  CHECK_THROWS_AS(symmetric_triple(f, g, 1.1), Error);
}

TEST_CASE("triangle_at: equilateral images") {
  Triangle T = triangle_at(make_config(1, 1, 0, 0), 0);
  for (int k = 0; k < 3; ++k)
    CHECK(distance(T.vertex(k), Point(std::polar(1.0, 2 * kPi * k / 3))) < 1e-12);
  T = triangle_at(make_config(2, 1, 0, 0), 0);
  CHECK(distance(T.A(), {2, 0}) < 1e-12);
  CHECK(distance(T.B(), {-1, std::sqrt(3.0) / 2}) < 1e-12);
  CHECK(distance(T.C(), {-1, -std::sqrt(3.0) / 2}) < 1e-12);
}

TEST_CASE("triangle_at: preimages on the unit circle, sides tangent to the caustic") {
  const PonceletConfig cfg = make_config(2, 1, {0.3, 0.2}, {-0.4, 0.1});
  const EllipseSpec E = caustic_recover(cfg);
  for (int k = 0; k < 64; ++k) {
    const double th = 1.1 + 0.1 * k;
    for (const Complex& z : preimage_vertices(cfg, th)) CHECK(std::abs(std::abs(z) - 1) < 1e-9);
    CHECK(closure_residual(triangle_at(cfg, th), E) < 1e-8);
  }
}

TEST_CASE("caustic preimage is the ellipse with foci f, g and major axis |1 - conj(f) g|") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = 1 + 2 * U(rng), b = (0.3 + 0.6 * U(rng)) * a;
    const Complex f = std::polar(0.7 * std::sqrt(U(rng)), 2 * kPi * U(rng));
    const Complex g = std::polar(0.7 * std::sqrt(U(rng)), 2 * kPi * U(rng));
    const PonceletConfig cfg = make_config(a, b, f, g);
    const EllipseSpec E = caustic_recover(cfg);
    const double major = std::abs(1.0 - std::conj(f) * g);
    for (int k = 0; k < 16; ++k) {
      const Point p = E.at(0.4 * k);
      const Complex z{p.x / a, p.y / b};
      CHECK(std::abs(std::abs(z - f) + std::abs(z - g) - major) < 1e-9);
    }
    const auto F = preimage_foci(E, a, b);
    const double d = std::min(std::abs(F[0] - f) + std::abs(F[1] - g), std::abs(F[0] - g) + std::abs(F[1] - f));
    CHECK(d < 1e-7);
  }
}

TEST_CASE("caustic_recover: reference examples") {
  EllipseSpec E = caustic_recover(make_config(1, 1, 0, 0));
  CHECK(E.center.norm() < 1e-12);
  CHECK(E.semi_major == Approx(0.5));
  CHECK(E.semi_minor == Approx(0.5));
  E = caustic_recover(config_circular_caustic(2, 1, 0, 0));
  CHECK(E.semi_major == Approx(2.0 / 3));
  CHECK(E.semi_minor == Approx(2.0 / 3));
}

TEST_CASE("circular caustic: concentric instance") {
  const PonceletConfig cfg = config_circular_caustic(2, 1, 0, 0);
  REQUIRE(cfg.circular);
  CHECK(cfg.circular->radius == Approx(2.0 / 3));
  const double focal = 1 / std::sqrt(3.0);
  CHECK(std::abs(cfg.f - Complex{0, -focal}) < 1e-12);
  CHECK(std::abs(cfg.g - Complex{0, focal}) < 1e-12);
}

TEST_CASE("circular caustic: incircle of every triangle") {
  for (Point C : {Point{0.3, 0.1}, Point{-0.5, 0.2}, Point{0.8, -0.1}}) {
    const PonceletConfig cfg = config_circular_caustic(2, 1, C.x, C.y);
    const double r = cfg.circular->radius;
    CHECK(r > 0);
    for (int k = 0; k < 32; ++k) {
      const Circle in = incircle_oracle(triangle_at(cfg, 0.2 * k));
      CHECK(distance(in.center, C) < 1e-8);
      CHECK(std::abs(in.radius - r) < 1e-8);
    }
  }
}

TEST_CASE("circular caustic: radius from the closed form") {
  const double a = 2, b = 1, xc = 0.3, yc = 0.1, c2 = a * a - b * b;
  const double r = (b * std::sqrt(a * a * a * a - c2 * xc * xc) - a * std::sqrt(b * b * b * b + c2 * yc * yc)) / c2;
  CHECK(config_circular_caustic(a, b, xc, yc).circular->radius == Approx(r).epsilon(1e-12));
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(make_config(1, 2, 0, 0), Error);
  CHECK_THROWS_AS(make_config(2, 1, 1.0, 0), Error);
  CHECK_THROWS_AS(make_config(2, 0, 0, 0), Error);
  for (Point C : {Point{2.5, 0}, Point{0, 1.2}, Point{1.5, 0.7}}) {
    try {
      config_circular_caustic(2, 1, C.x, C.y);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::no_poncelet_family);
    }
  }
  CHECK(config_circular_caustic(2, 1, 1.9, 0).circular->radius > 0);
}

TEST_CASE("equilateral centroid locus") {
  EllipseSpec e = equilateral_centroid_locus(2, 1);
  CHECK(e.semi_major == Approx(6.0 / 7));
  CHECK(e.semi_minor == Approx(3.0 / 13));
  e = equilateral_centroid_locus(std::sqrt(2.0), 1);
  CHECK(e.semi_major == Approx(std::sqrt(2.0) / 5));
  CHECK(e.semi_minor == Approx(1.0 / 7));
  e = equilateral_centroid_locus(1, 1);
  CHECK(e.semi_major == 0);
  CHECK(e.semi_minor == 0);
}

TEST_CASE("equilateral centroid locus: centroids of equilateral inscribed triangles") {
  // an equilateral triangle inscribed in the outer ellipse, found by rotating a vertex
  const double a = 2, b = 1;
  const EllipseSpec e = equilateral_centroid_locus(a, b);
  for (double t0 : {0.3, 1.0, 2.2}) {
    // vertices at parameters t0, t1, t2 with equal sides: solve by Newton on (t1, t2)
    double t1 = t0 + 2.0, t2 = t0 + 4.0;
    auto P = [&](double t) { return Point{a * std::cos(t), b * std::sin(t)}; };
    for (int it = 0; it < 100; ++it) {
      auto F = [&](double u, double v) {
        const double s0 = (P(u) - P(t0)).squared_norm(), s1 = (P(v) - P(u)).squared_norm(),
                     s2 = (P(t0) - P(v)).squared_norm();
        return std::array<double, 2>{s0 - s1, s1 - s2};
      };
      const double h = 1e-7;
      const auto f0 = F(t1, t2), fu = F(t1 + h, t2), fv = F(t1, t2 + h);
      const double j11 = (fu[0] - f0[0]) / h, j21 = (fu[1] - f0[1]) / h, j12 = (fv[0] - f0[0]) / h,
                   j22 = (fv[1] - f0[1]) / h;
      const double det = j11 * j22 - j12 * j21;
      t1 -= (j22 * f0[0] - j12 * f0[1]) / det;
      t2 -= (-j21 * f0[0] + j11 * f0[1]) / det;
    }
    const Point G = (P(t0) + P(t1) + P(t2)) / 3.0;
    CHECK(std::abs(G.x * G.x / (e.semi_major * e.semi_major) + G.y * G.y / (e.semi_minor * e.semi_minor) - 1) < 1e-6);
  }
}

TEST_CASE("vertex_theta puts the point at a vertex") {
  const PonceletConfig cfg = make_config(1.7, 1.1, {0.2, -0.3}, {-0.1, 0.4});
  for (double t : {0.1, 1.3, 2.9, 4.4}) {
    const Point Z = cfg.outer_point(t);
    const Triangle T = triangle_at(cfg, vertex_theta(cfg, Z));
    double best = 1e300;
    for (int k = 0; k < 3; ++k) best = std::min(best, distance(T.vertex(k), Z));
    CHECK(best < 1e-9);
  }
}
