#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet {

using LineFamily = std::function<Line(double u)>;

struct LineEnvelope {
  std::vector<double> u;
  std::vector<Point> points;
  // parameters skipped because the family was stationary there
  std::vector<double> gaps;
};

// E(u) = [(n'm - m'n)/(m'l - l'm), -(n'l - l'n)/(m'l - l'm)] over the given
// parameters. Derivatives come from `derivative` when supplied, else from
// Richardson-refined central differences with step h.
LineEnvelope envelope_of_lines(const LineFamily& family, const std::vector<double>& us,
                               const std::optional<LineFamily>& derivative = std::nullopt,
                               double h = 1e-6);

// One curve of an implicit family, F(p; u) for a fixed u.
using ImplicitMember = std::function<double(Point)>;
using ImplicitFamily = std::function<ImplicitMember(double u)>;
using SeedGenerator = std::function<std::vector<Point>(double u, const ImplicitMember&)>;

struct ImplicitEnvelopeOptions {
  // default seeds: sign changes of F along rays from `origin`
  Point origin{0, 0};
  double radius = 10.0;
  int rays = 32;
  int steps = 128;
  // value scale for the convergence test |F|, |dF/du| <= tol * scale
  double scale = 1.0;
  double tol = 1e-9;
  double h = 1e-4;
  int max_iterations = 40;
  double dedupe = 1e-7;
};

struct ImplicitEnvelope {
  std::vector<double> u;
  std::vector<Point> points;
  // parameters where no seed converged
  std::size_t omitted = 0;
};

// Solves {F = 0, dF/du = 0} by Newton from seeds on each member curve.
ImplicitEnvelope envelope_of_implicit(const ImplicitFamily& family, const std::vector<double>& us,
                                      const ImplicitEnvelopeOptions& opts = {},
                                      const std::optional<SeedGenerator>& seeds = std::nullopt);

using CircleFamily = std::function<Circle(double u)>;

// Envelope of a circle family from the center and radius derivatives: the
// two points O + R (cos a e +- sin a e_perp) with cos a = -R'/|O'|.
struct CircleEnvelope {
  std::vector<double> u;
  std::vector<std::array<Point, 2>> points;
  std::vector<double> gaps;
};

CircleEnvelope envelope_of_circles(const CircleFamily& family, const std::vector<double>& us,
                                   double h = 1e-4);

std::vector<double> uniform_grid(std::size_t n, double offset = 0.0);

}  // namespace poncelet
