#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "poncelet/conic.hpp"
#include "poncelet/envelope.hpp"
#include "poncelet/fit.hpp"
#include "poncelet/geometry.hpp"
#include "poncelet/polynomial.hpp"

using namespace poncelet;
using doctest::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Point> ellipse_samples(const EllipseSpec& e, int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(e.at(2 * kPi * (i + 0.3) / n));
  return pts;
}

}  // namespace

TEST_CASE("cubic: cube roots of unity sorted by argument") {
  const auto r = solve_cubic_complex(0, 0, 1);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(r[k] - std::polar(1.0, 2 * kPi * k / 3)) < 1e-12);
}

TEST_CASE("cubic: triple root") {
  for (const Complex& z : solve_cubic_complex(3, 3, 1)) CHECK(std::abs(z - 1.0) < 1e-10);
}

TEST_CASE("cubic: construct then solve") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Complex, 3> z{Complex{U(rng), U(rng)}, Complex{U(rng), U(rng)}, Complex{U(rng), U(rng)}};
    const auto r = solve_cubic_complex(z[0] + z[1] + z[2], z[0] * z[1] + z[1] * z[2] + z[2] * z[0], z[0] * z[1] * z[2]);
    for (const Complex& w : z) {
      double best = 1e300;
      for (const Complex& q : r) best = std::min(best, std::abs(q - w));
      CHECK(best < 1e-9);
    }
    for (int k = 0; k + 1 < 3; ++k) {
      auto arg = [](Complex q) { double a = std::arg(q); return a < 0 ? a + 2 * kPi : a; };
      CHECK(arg(r[k]) <= arg(r[k + 1]));
    }
  }
}

TEST_CASE("cubic: non-finite input is rejected") {
  CHECK_THROWS_AS(solve_cubic_complex(std::nan(""), 0, 1), Error);
}

TEST_CASE("quartic: reference examples") {
  auto r = solve_quartic_real({-1, 0, 0, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Approx(-1));
  CHECK(r[1] == Approx(1));
  // (x-1)^2 (x+2)(x-3) = x^4 - 3x^3 - 3x^2 + 11x - 6
  r = solve_quartic_real({-6, 11, -3, -3, 1});
  REQUIRE(r.size() == 4);
  CHECK(r[0] == Approx(-2));
  CHECK(r[1] == Approx(1).epsilon(1e-6));
  CHECK(r[2] == Approx(1).epsilon(1e-6));
  CHECK(r[3] == Approx(3));
  CHECK(solve_quartic_real({1, 0, 0, 0, 1}).empty());
}

TEST_CASE("quartic: degree drop and zero polynomial") {
  const auto r = solve_quartic_real({0, 4, 0, -4, 0});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == Approx(-1));
  CHECK(std::abs(r[1]) < 1e-12);
  CHECK(r[2] == Approx(1));
  try {
    solve_quartic_real({0, 0, 0, 0, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::identically_zero);
  }
}

TEST_CASE("quartic: residuals of returned roots") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 5> c{U(rng), U(rng), U(rng), U(rng), U(rng)};
    double scale = 0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    for (double x : solve_quartic_real(c)) {
      const double p = eval_poly(std::vector<double>(c.begin(), c.end()), x);
      CHECK(std::abs(p) <= 1e-9 * scale * std::max(1.0, std::pow(std::abs(x), 4)));
    }
  }
}

TEST_CASE("classify: reference examples and scale invariance") {
  CHECK(classify_conic({1, 0, 1, 0, 0, -1}) == ConicType::circle);
  CHECK(classify_conic({1, 0, 0, 0, -1, 0}) == ConicType::parabola);
  CHECK(classify_conic({0, 1, 0, 0, 0, -1}) == ConicType::hyperbola);
  CHECK(classify_conic({1, 0, 4, 0, 0, -1}) == ConicType::real_ellipse);
  CHECK(classify_conic({1, 0, -1, 0, 0, 0}) == ConicType::intersecting_lines);
  CHECK(classify_conic({1, 0, 0, 0, 0, -1}) == ConicType::parallel_lines);
  CHECK(classify_conic({1, 0, 0, 0, 0, 0}) == ConicType::single_line);
  CHECK(classify_conic({1, 0, 1, 0, 0, 0}) == ConicType::point);
  CHECK(classify_conic({1, 0, 1, 0, 0, 1}) == ConicType::empty);
  CHECK(classify_conic({1e6, 0, 1e6, 0, 0, -1e6}) == ConicType::circle);
  CHECK(classify_conic({-3, 0, 0, 0, 3, 0}) == ConicType::parabola);
}

TEST_CASE("ellipse round trip") {
  const EllipseSpec u = ellipse_from_conic({1, 0, 1, 0, 0, -1});
  CHECK(u.center.norm() < 1e-14);
  CHECK(u.semi_major == Approx(1));
  CHECK(u.semi_minor == Approx(1));
  const EllipseSpec e = ellipse_from_conic({0.25, 0, 1, 0, 0, -1});
  CHECK(e.semi_major == Approx(2));
  CHECK(e.semi_minor == Approx(1));
  CHECK(std::abs(e.rotation) < 1e-14);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.2, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = U(rng), q = U(rng);
    const EllipseSpec in{{U(rng) - 1, U(rng) - 1}, std::max(p, q) + 0.1, std::min(p, q), U(rng)};
    const EllipseSpec out = ellipse_from_conic(conic_from_ellipse(in));
    CHECK(distance(in.center, out.center) < 1e-10);
    CHECK(out.semi_major == Approx(in.semi_major).epsilon(1e-10));
    CHECK(out.semi_minor == Approx(in.semi_minor).epsilon(1e-10));
    CHECK(angle_between_axes(in.rotation, out.rotation) < 1e-9);
  }
  CHECK_THROWS_AS(ellipse_from_conic({0, 1, 0, 0, 0, -1}), Error);
}

TEST_CASE("circumcircle") {
  Circle c = circumcircle_of({1, 0}, {0, 1}, {-1, 0});
  CHECK(c.center.norm() < 1e-14);
  CHECK(c.radius == Approx(1));
  c = circumcircle_of({0, 0}, {1, 0}, {0, 1});
  CHECK(distance(c.center, {0.5, 0.5}) < 1e-14);
  CHECK(c.radius == Approx(std::sqrt(2.0) / 2));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const Point A{U(rng), U(rng)}, B{U(rng), U(rng)}, C{U(rng), U(rng)};
    c = circumcircle_of(A, B, C);
    for (Point p : {A, B, C}) CHECK(std::abs(distance(p, c.center) - c.radius) <= 1e-10 * std::max(1.0, c.radius));
  }
  CHECK_THROWS_AS(circumcircle_of({0, 0}, {1, 1}, {2, 2}), Error);
}

TEST_CASE("foot of perpendicular") {
  CHECK(distance(foot_of_perpendicular({0, 1}, {-1, 0}, {1, 0}), {0, 0}) < 1e-15);
  CHECK(distance(foot_of_perpendicular({0.3, 0}, {-1, 0}, {1, 0}), {0.3, 0}) < 1e-15);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Point P{U(rng), U(rng)}, z{U(rng), U(rng)}, w{U(rng), U(rng)};
    const Point F = foot_of_perpendicular(P, z, w);
    CHECK(std::abs(cross(F - z, w - z)) < 1e-12 * std::max(1.0, (w - z).squared_norm()));
    CHECK(std::abs(dot(P - F, w - z)) < 1e-12 * std::max(1.0, (w - z).squared_norm()));
  }
  CHECK_THROWS_AS(foot_of_perpendicular({0, 1}, {1, 1}, {1, 1}), Error);
}

TEST_CASE("radical axis") {
  Line L = radical_axis({{-1, 0}, 1}, {{1, 0}, 1});
  CHECK(std::abs(L.eval({0, 5})) < 1e-14);
  CHECK(std::abs(L.m) < 1e-14);
  L = radical_axis({{0, 0}, 1}, {{3, 0}, 1});
  CHECK(std::abs(L.eval({1.5, -2})) < 1e-14);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Circle c1{{U(rng), U(rng)}, std::abs(U(rng))}, c2{{U(rng), U(rng)}, std::abs(U(rng))};
    L = radical_axis(c1, c2);
    const Point foot = -L.n / (L.l * L.l + L.m * L.m) * L.normal();
    for (double s : {-2.0, 0.0, 3.0}) {
      const Point p = foot + s * L.direction();
      CHECK(std::abs(c1.power(p) - c2.power(p)) < 1e-10 * std::max(1.0, p.squared_norm()));
    }
    CHECK(std::abs(cross(L.normal(), c2.center - c1.center)) < 1e-12 * (c2.center - c1.center).norm());
  }
  try {
    radical_axis({{0, 0}, 1}, {{0, 0}, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::concentric_circles);
  }
}

TEST_CASE("fit: unit circle, lines, known conic") {
  std::vector<Point> pts = ellipse_samples({{0, 0}, 1, 1, 0}, 12);
  LocusFit f = fit_curve(pts, Basis::conic6);
  CHECK(coefficient_distance(f.conic(), {1, 0, 1, 0, 0, -1}) < 1e-12);
  CHECK(f.residual < 1e-12);
  CHECK(f.type() == ConicType::circle);

  std::vector<Point> line;
  for (int i = 0; i < 12; ++i) line.push_back({0.5 * i - 1, 0.25 * i + 2});
  f = fit_curve(line, Basis::conic6);
  const ConicType t = f.type();
  CHECK((t == ConicType::single_line || t == ConicType::parallel_lines || t == ConicType::intersecting_lines));
  try {
    fit_curve(line, Basis::quartic9);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::rank_deficient);
  }

  const ConicCoeffs known{0.3, -0.2, 0.7, 0.1, -0.4, -1.0};
  const EllipseSpec e = ellipse_from_conic(known);
  f = fit_curve(ellipse_samples(e, 40), Basis::conic6);
  CHECK(coefficient_distance(f.conic(), known) < 1e-8);
  // a generic conic is the unique quartic9 member through its points
  const LocusFit q = fit_curve(ellipse_samples(e, 40), Basis::quartic9);
  CHECK(q.quartic_weight() < 1e-8);
}

TEST_CASE("fit: exact data reproduces every class") {
  // hyperbola x y = 1 and parabola y = x^2
  std::vector<Point> hyp, par, pair, parallel;
  for (int i = 0; i < 20; ++i) {
    const double s = 0.3 + 0.2 * i;
    hyp.push_back(i % 2 ? Point{s, 1 / s} : Point{-s, -1 / s});
    par.push_back({s - 2, (s - 2) * (s - 2)});
    pair.push_back(i % 2 ? Point{s, s} : Point{s, -s});
    parallel.push_back(i % 2 ? Point{s, 1} : Point{s, -1});
  }
  CHECK(fit_curve(hyp, Basis::conic6).type() == ConicType::hyperbola);
  CHECK(fit_curve(par, Basis::conic6).type() == ConicType::parabola);
  CHECK(fit_curve(pair, Basis::conic6).type() == ConicType::intersecting_lines);
  CHECK(fit_curve(parallel, Basis::conic6).type() == ConicType::parallel_lines);
  CHECK(fit_curve(ellipse_samples({{1, 2}, 3, 1, 0.4}, 20), Basis::conic6).type() == ConicType::real_ellipse);
}

TEST_CASE("envelope of lines: tangents of the unit circle and of an ellipse") {
  const auto us = uniform_grid(64, 0.5);
  LineEnvelope env = envelope_of_lines([](double u) { return Line{std::cos(u), std::sin(u), -1}; }, us);
  REQUIRE(env.points.size() == 64);
  for (const Point& p : env.points) CHECK(std::abs(p.norm() - 1) < 1e-8);

  env = envelope_of_lines([](double u) { return Line{std::cos(u), std::sin(u), -(std::cos(u) + 2 * std::sin(u))}; }, us);
  for (const Point& p : env.points) CHECK(distance(p, {1, 2}) < 1e-8);

  const double a = 2, b = 0.7;
  const LineFamily tangent = [&](double u) { return Line{std::cos(u) / a, std::sin(u) / b, -1}; };
  env = envelope_of_lines(tangent, us);
  for (std::size_t i = 0; i < env.points.size(); ++i) {
    const Point p = env.points[i];
    CHECK(std::abs(p.x * p.x / (a * a) + p.y * p.y / (b * b) - 1) < 1e-8);
    CHECK(std::abs(tangent(env.u[i]).eval(p)) < 1e-8);
  }
}

TEST_CASE("envelope of implicit: annulus, constant family, agreement with lines") {
  const auto us = uniform_grid(64, 0.5);
  const ImplicitFamily circles = [](double u) -> ImplicitMember {
    return [u](Point p) { return (p - Point{std::cos(u), std::sin(u)}).squared_norm() - 1; };
  };
  ImplicitEnvelopeOptions o;
  o.radius = 4;
  const ImplicitEnvelope env = envelope_of_implicit(circles, us, o);
  REQUIRE(!env.points.empty());
  for (const Point& p : env.points) CHECK((p.norm() < 1e-7 || std::abs(p.norm() - 2) < 1e-7));

  const ImplicitFamily constant = [](double) -> ImplicitMember { return [](Point p) { return p.squared_norm() - 1; }; };
  CHECK_THROWS_AS(envelope_of_implicit(constant, us, o), Error);

  const LineFamily lines = [](double u) { return Line{std::cos(u) / 2, std::sin(u), -1}; };
  const ImplicitFamily same = [&](double u) -> ImplicitMember {
    const Line L = lines(u);
    return [L](Point p) { return L.eval(p); };
  };
  const ImplicitEnvelope a = envelope_of_implicit(same, us, o);
  const LineEnvelope b = envelope_of_lines(lines, us);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const auto it = std::find(b.u.begin(), b.u.end(), a.u[i]);
    REQUIRE(it != b.u.end());
    CHECK(distance(a.points[i], b.points[static_cast<std::size_t>(it - b.u.begin())]) < 1e-7);
  }
}

TEST_CASE("envelope of circles: moving unit circle") {
  const CircleEnvelope env =
      envelope_of_circles([](double u) { return Circle{{std::cos(u), std::sin(u)}, 1.0}; }, uniform_grid(32, 0.5));
  for (const auto& pair : env.points) {
    const double r0 = pair[0].norm(), r1 = pair[1].norm();
    CHECK(std::min(r0, r1) < 1e-7);
    CHECK(std::abs(std::max(r0, r1) - 2) < 1e-7);
  }
}
