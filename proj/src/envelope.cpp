#include "poncelet/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "poncelet/parallel.hpp"

namespace poncelet {

namespace {

template <class F>
auto richardson(const F& f, double u, double h) {
  const auto d1 = (f(u + h) - f(u - h)) / (2.0 * h);
  const auto d2 = (f(u + h / 2) - f(u - h / 2)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

struct Vec3 {
  double l, m, n;
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.l - b.l, a.m - b.m, a.n - b.n}; }
  friend Vec3 operator/(Vec3 a, double s) { return {a.l / s, a.m / s, a.n / s}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.l, s * a.m, s * a.n}; }
};

}  // namespace

std::vector<double> uniform_grid(std::size_t n, double offset) {
  std::vector<double> u(n);
  for (std::size_t k = 0; k < n; ++k)
    u[k] = 2.0 * std::numbers::pi * (static_cast<double>(k) + offset) / static_cast<double>(n);
  return u;
}

LineEnvelope envelope_of_lines(const LineFamily& family, const std::vector<double>& us,
                               const std::optional<LineFamily>& derivative, double h) {
  struct Slot {
    bool ok = false;
    Point p;
  };
  std::vector<Slot> slots(us.size());
  auto evaluate = [&](double u, Slot& slot) {
    const Line L = family(u);
    Vec3 d;
    if (derivative) {
      const Line D = (*derivative)(u);
      d = {D.l, D.m, D.n};
    } else {
      auto f = [&](double v) {
        const Line x = family(v);
        return Vec3{x.l, x.m, x.n};
      };
      d = richardson(f, u, h);
    }
    const double den = d.m * L.l - d.l * L.m;
    if (std::abs(den) <= 1e-12 * std::hypot(L.l, L.m) * std::hypot(d.l, d.m)) return;
    slot.ok = true;
    slot.p = {(d.n * L.m - d.m * L.n) / den, -(d.n * L.l - d.l * L.n) / den};
  };
  parallel_for(us.size(), [&](std::size_t i) {
    try {
      evaluate(us[i], slots[i]);
    } catch (const Error& e) {
      // a member at infinity (concentric circles) leaves a gap
      if (e.code() != ErrorCode::concentric_circles) throw;
    }
  });
  LineEnvelope env;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (slots[i].ok && slots[i].p.finite()) {
      env.u.push_back(us[i]);
      env.points.push_back(slots[i].p);
    } else {
      env.gaps.push_back(us[i]);
    }
  }
  return env;
}

ImplicitEnvelope envelope_of_implicit(const ImplicitFamily& family, const std::vector<double>& us,
                                      const ImplicitEnvelopeOptions& opts,
                                      const std::optional<SeedGenerator>& seeds) {
  struct Slot {
    std::vector<Point> points;
    double max_fu = 0.0;
  };
  std::vector<Slot> slots(us.size());
  const double target = opts.tol * opts.scale;

  parallel_for(us.size(), [&](std::size_t i) {
    const double u = us[i], h = opts.h;
    const ImplicitMember F = family(u);
    const ImplicitMember Fp = family(u + h), Fm = family(u - h);
    const ImplicitMember Fp2 = family(u + h / 2), Fm2 = family(u - h / 2);
    auto Fu = [&](Point p) {
      const double d1 = (Fp(p) - Fm(p)) / (2.0 * h);
      const double d2 = (Fp2(p) - Fm2(p)) / h;
      return (4.0 * d2 - d1) / 3.0;
    };

    std::vector<Point> start;
    if (seeds) {
      start = (*seeds)(u, F);
    } else {
      for (int k = 0; k < opts.rays; ++k) {
        const double t = 2.0 * std::numbers::pi * (k + 0.5) / opts.rays;
        const Point dir{std::cos(t), std::sin(t)};
        auto at = [&](double r) { return opts.origin + r * dir; };
        double r0 = 0.0, f0 = F(at(0.0));
        for (int j = 1; j <= opts.steps; ++j) {
          const double r1 = opts.radius * j / opts.steps, f1 = F(at(r1));
          if (f0 == 0.0) {
            start.push_back(at(r0));
          } else if (f0 * f1 < 0.0) {
            double lo = r0, hi = r1, flo = f0;
            for (int it = 0; it < 60; ++it) {
              const double mid = 0.5 * (lo + hi), fm = F(at(mid));
              if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
              } else {
                hi = mid;
              }
            }
            start.push_back(at(0.5 * (lo + hi)));
          }
          r0 = r1;
          f0 = f1;
        }
      }
    }

    for (Point p : start) {
      slots[i].max_fu = std::max(slots[i].max_fu, std::abs(Fu(p)));
      bool converged = false;
      for (int it = 0; it < opts.max_iterations; ++it) {
        const double g0 = F(p), g1 = Fu(p);
        const double hp = 1e-6 * (1.0 + p.norm());
        const Point ex{hp, 0}, ey{0, hp};
        const double a = (F(p + ex) - F(p - ex)) / (2 * hp), b = (F(p + ey) - F(p - ey)) / (2 * hp);
        const double c = (Fu(p + ex) - Fu(p - ex)) / (2 * hp), d = (Fu(p + ey) - Fu(p - ey)) / (2 * hp);
        const double det = a * d - b * c;
        if (det == 0.0 || !std::isfinite(det)) break;
        const Point step{(d * g0 - b * g1) / det, (a * g1 - c * g0) / det};
        p -= step;
        if (!p.finite()) break;
        if (step.norm() <= 1e-12 * (1.0 + p.norm())) break;
      }
      converged = p.finite() && std::abs(F(p)) <= target && std::abs(Fu(p)) <= target;
      if (!converged) continue;
      bool dup = false;
      for (const auto& q : slots[i].points) dup = dup || distance(p, q) <= opts.dedupe * std::max(1.0, p.norm());
      if (!dup) slots[i].points.push_back(p);
    }
  });

  double max_fu = 0.0;
  for (const auto& s : slots) max_fu = std::max(max_fu, s.max_fu);
  if (max_fu <= target) throw Error(ErrorCode::identically_zero, "dF/du vanishes identically");

  ImplicitEnvelope env;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (slots[i].points.empty()) ++env.omitted;
    auto pts = slots[i].points;
    std::sort(pts.begin(), pts.end(), [](Point p, Point q) { return p.x != q.x ? p.x < q.x : p.y < q.y; });
    for (const auto& p : pts) {
      env.u.push_back(us[i]);
      env.points.push_back(p);
    }
  }
  return env;
}

CircleEnvelope envelope_of_circles(const CircleFamily& family, const std::vector<double>& us, double h) {
  struct Slot {
    bool ok = false;
    std::array<Point, 2> p;
  };
  std::vector<Slot> slots(us.size());
  parallel_for(us.size(), [&](std::size_t i) {
    const double u = us[i];
    const Circle K = family(u);
    const Circle Kp = family(u + h), Km = family(u - h), Kp2 = family(u + h / 2), Km2 = family(u - h / 2);
    auto diff = [&](auto get) {
      const auto d1 = (get(Kp) - get(Km)) / (2.0 * h);
      const auto d2 = (get(Kp2) - get(Km2)) / h;
      return (4.0 * d2 - d1) / 3.0;
    };
    const Point dO = diff([](const Circle& c) { return c.center; });
    const double dR = diff([](const Circle& c) { return c.radius; });
    const double n = dO.norm();
    if (!(n > 1e-14) || std::abs(dR) >= n) return;
    const double c = -dR / n, s = std::sqrt(1.0 - c * c);
    const Point e = dO / n;
    slots[i].ok = true;
    slots[i].p = {K.center + K.radius * (c * e + s * perp(e)), K.center + K.radius * (c * e - s * perp(e))};
  });
  CircleEnvelope env;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (slots[i].ok) {
      env.u.push_back(us[i]);
      env.points.push_back(slots[i].p);
    } else {
      env.gaps.push_back(us[i]);
    }
  }
  return env;
}

}  // namespace poncelet
