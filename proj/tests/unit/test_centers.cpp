#include <doctest.h>

#include <cmath>
#include <random>

#include "poncelet/centers.hpp"
#include "poncelet/family.hpp"

using namespace poncelet;

namespace {

constexpr double kPi = 3.14159265358979323846;

Triangle random_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-3, 3);
  for (;;) {
    const Triangle T({U(rng), U(rng)}, {U(rng), U(rng)}, {U(rng), U(rng)});
    if (std::abs(T.signed_area()) > 0.5) return T;
  }
}

Point interior_point(const Triangle& T, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.1, 1);
  const double u = U(rng), v = U(rng), w = U(rng);
  return (u * T.A() + v * T.B() + w * T.C()) / (u + v + w);
}

}  // namespace

TEST_CASE("equilateral triangle: table centers coincide with the centroid") {
  const Triangle T(Point(std::polar(1.0, 0.3)), Point(std::polar(1.0, 0.3 + 2 * kPi / 3)),
                   Point(std::polar(1.0, 0.3 + 4 * kPi / 3)));
  const Point G = (T.A() + T.B() + T.C()) / 3.0;
  for (int k : {1, 2, 3, 4, 5, 40}) CHECK(distance(center(T, k), G) < 1e-12);
  // every coordinate of X11 and X36 vanishes here
  for (int k : {11, 36}) CHECK_THROWS_AS(center(T, k), Error);
}

TEST_CASE("right triangle orthocenter") {
  const Triangle T({0, 0}, {1, 0}, {0, 1});
  CHECK(center(T, 4).norm() < 1e-14);
}

TEST_CASE("random triangles: classical center relations") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Triangle T = random_triangle(rng);
    const double s = T.diameter();
    const Point X1 = center(T, 1), X2 = center(T, 2), X3 = center(T, 3), X4 = center(T, 4);
    CHECK(distance(X3, circumcircle_of(T).center) < 1e-10 * s);
    CHECK(distance(X2, (T.A() + T.B() + T.C()) / 3.0) < 1e-12 * s);
    CHECK(distance(center(T, 5), (X3 + X4) / 2.0) < 1e-10 * s);
    CHECK(distance(center(T, 40), 2.0 * X3 - X1) < 1e-10 * s);
    const Barycentric b = barycentric_of(T, X1);
    CHECK((b.u > 0 && b.v > 0 && b.w > 0));
    CHECK(distance(from_barycentric(T, b), X1) < 1e-12 * s);
  }
  CHECK_THROWS_AS(center(Triangle({0, 0}, {1, 0}, {0, 1}), 6), Error);
}

TEST_CASE("special circles") {
  const double side = 1.7;
  const Triangle E({0, 0}, {side, 0}, {side / 2, side * std::sqrt(3.0) / 2});
  SpecialCircles c = special_circles(E);
  CHECK(c.incircle.radius == doctest::Approx(side / (2 * std::sqrt(3.0))));
  CHECK(c.circumcircle.radius == doctest::Approx(side / std::sqrt(3.0)));
  CHECK(c.ninepoint.radius == doctest::Approx(side / (2 * std::sqrt(3.0))));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Triangle T = random_triangle(rng);
    c = special_circles(T);
    const double s = T.diameter();
    for (int k = 0; k < 3; ++k) {
      const Point mid = (T.vertex((k + 1) % 3) + T.vertex((k + 2) % 3)) / 2.0;
      CHECK(std::abs(distance(mid, c.ninepoint.center) - c.ninepoint.radius) < 1e-10 * s);
      CHECK(std::abs(T.side_line(k).distance(c.incircle.center) - c.incircle.radius) < 1e-10 * s);
    }
    CHECK(c.bevan.radius == doctest::Approx(2 * c.circumcircle.radius));
    // Feuerbach: internal tangency at X11
    const Point X11 = center(T, 11);
    CHECK(std::abs(distance(X11, c.incircle.center) - c.incircle.radius) < 1e-8 * s);
    CHECK(std::abs(distance(X11, c.ninepoint.center) - c.ninepoint.radius) < 1e-8 * s);
    CHECK(std::abs(distance(c.incircle.center, c.ninepoint.center) - (c.ninepoint.radius - c.incircle.radius)) <
          1e-8 * s);
  }
}

TEST_CASE("isogonal conjugation: classical pairs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Triangle T = random_triangle(rng);
    const double s = T.diameter();
    const Point X1 = center(T, 1), X3 = center(T, 3), X4 = center(T, 4);
    CHECK(distance(isogonal_pedal(X3, T), X4) < 1e-8 * s);
    CHECK(distance(isogonal_pedal(X1, T), X1) < 1e-8 * s);
    CHECK(distance(isogonal_barycentric(X4, T), X3) < 1e-8 * s);
    // symmedian point l1^2 : l2^2 : l3^2
    const Barycentric k{T.l1() * T.l1(), T.l2() * T.l2(), T.l3() * T.l3()};
    CHECK(distance(isogonal_barycentric(center(T, 2), T), from_barycentric(T, k)) < 1e-10 * s);
    const Point P = interior_point(T, rng);
    CHECK(distance(isogonal_barycentric(P, T), isogonal_pedal(P, T)) < 1e-9 * s);
    CHECK(distance(isogonal_pedal(isogonal_pedal(P, T), T), P) < 1e-8 * s);
  }
}

TEST_CASE("isogonal conjugation: side points and the circumcircle") {
  const Triangle T({0, 0}, {4, 0}, {1, 3});
  const Point onBC = 0.3 * T.B() + 0.7 * T.C();
  CHECK(distance(isogonal_pedal(onBC, T), T.A()) < 1e-10);
  CHECK(distance(isogonal_barycentric(onBC, T), T.A()) < 1e-12);
  const Circle K = circumcircle_of(T);
  const Point onK = K.center + K.radius * Point{std::cos(1.0), std::sin(1.0)};
  try {
    isogonal_pedal(onK, T);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::conjugate_at_infinity);
  }
}

TEST_CASE("isogonal conjugation: Euclidean equivariance") {
  std::mt19937_64 rng(12);
  const double c = std::cos(0.7), s = std::sin(0.7);
  auto move = [&](Point p) { return Point{c * p.x - s * p.y + 1.5, s * p.x + c * p.y - 0.5}; };
  for (int trial = 0; trial < 50; ++trial) {
    const Triangle T = random_triangle(rng);
    const Point P = interior_point(T, rng);
    const Triangle M(move(T.A()), move(T.B()), move(T.C()));
    CHECK(distance(isogonal_pedal(move(P), M), move(isogonal_pedal(P, T))) < 1e-10 * T.diameter());
  }
}

TEST_CASE("Weaver form on the unit circle") {
  const Complex f{0.3, 0.2}, g{-0.4, 0.1};
  const PonceletConfig cfg = make_config(1, 1, f, g);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-0.6, 0.6);
  for (int k = 0; k < 32; ++k) {
    const double th = 0.2 * k;
    const SymmetricTriple st = symmetric_triple(f, g, std::polar(1.0, th));
    const Triangle T = triangle_at(cfg, th);
    CHECK(distance(isogonal_weaver({0, 0}, st), Point(st.s1)) < 1e-14);
    CHECK(distance(isogonal_weaver(Point(f), st), Point(g)) < 1e-12);
    const Point P{U(rng), U(rng)};
    CHECK(distance(isogonal_weaver(P, st), isogonal_pedal(P, T)) < 1e-9);
  }
  const SymmetricTriple st = symmetric_triple(f, g, 1);
  CHECK_THROWS_AS(isogonal_weaver({1, 0}, st), Error);
}

TEST_CASE("rational form agrees with the pedal construction") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> U(0, 1);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const double a = 1 + 2 * U(rng), b = (0.3 + 0.7 * U(rng)) * a;
    const Complex f = std::polar(0.7 * U(rng), 2 * kPi * U(rng)), g = std::polar(0.7 * U(rng), 2 * kPi * U(rng));
    const PonceletConfig cfg = make_config(a, b, f, g);
    const Point P{(U(rng) - 0.5) * a, (U(rng) - 0.5) * b};
    const double th = 2 * kPi * U(rng);
    Point ref;
    try {
      ref = isogonal_pedal(P, triangle_at(cfg, th));
    } catch (const Error&) {
      continue;
    }
    if (ref.norm() > 20 * a) continue;
    const Point q = isogonal_rational(rational_isog_coeffs(a, b, f, g, P), std::polar(1.0, th));
    CHECK(distance(q, ref) < 1e-8 * a);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("rational form on the unit circle reduces to the Weaver form") {
  const Complex f{-0.2, 0.35}, g{0.5, -0.1};
  const Point P{0.15, -0.25};
  const RationalIsogCoeffs c = rational_isog_coeffs(1, 1, f, g, P);
  for (int k = 0; k < 16; ++k) {
    const Complex lam = std::polar(1.0, 0.4 * k);
    CHECK(distance(isogonal_rational(c, lam), isogonal_weaver(P, symmetric_triple(f, g, lam))) < 1e-10);
  }
}

TEST_CASE("caustic foci are isogonal conjugates in every family triangle") {
  const PonceletConfig cfg = make_config(2, 1.2, {0.3, -0.2}, {-0.25, 0.4});
  const auto F = caustic_recover(cfg).foci();
  for (int k = 0; k < 32; ++k) {
    const Triangle T = triangle_at(cfg, 0.2 * k);
    CHECK(distance(isogonal_pedal(F[0], T), F[1]) < 1e-8);
  }
}
