#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "billiard/rational.hpp"

namespace billiard {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Geometry { Cylinder, FlatTorus, Cube };

std::string_view to_string(Geometry g);
// Accepts "cylinder", "flat-torus", "cube" (and "Z", "T", "R").
Geometry parse_geometry(std::string_view text);

// One billiard curve.
//
// Cylinder:  Z(s, n, m) sliced at angle beta (faces identified); the
//            classical cylinder knot is beta = 2*pi.
// FlatTorus: T(s, n, m, phase) = (s*t mod 1, g(n*t), g(m*t + phase)).
// Cube:      R(s, n, m) = (g(s*t + 1/4), g(n*t), g(m*t + phase)), phase = gamma.
//
// An absent phase means "let choose_phase pick one".
struct BilliardParams {
  Geometry geometry = Geometry::FlatTorus;
  int s = 1;
  int n = 1;
  int m = 1;
  std::optional<Rational> phase;
  double beta = kTwoPi;

  friend bool operator==(const BilliardParams&, const BilliardParams&) = default;
};

// Throws ParameterError naming the first violated constraint.
void validate(const BilliardParams& params);

// Slice angle used when the caller does not give one: 2*pi when the chords of
// the full cylinder are shorter than a diameter (n >= 2s+1), otherwise 2*pi/a
// for the smallest a with a*n >= 2s+1.
double default_cylinder_beta(int s, int n);

// g(t) = 2 |t - floor(t) - 1/2|.
Rational sawtooth(const Rational& t);
double sawtooth(double t);
// dg/dt: -2 on (k, k+1/2), +2 on (k+1/2, k+1), 0 at the corners.
int sawtooth_slope(const Rational& t);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct ExactPoint3 {
  Rational x, y, z;
  friend bool operator==(const ExactPoint3&, const ExactPoint3&) = default;
};

// FlatTorus and Cube only; a missing phase is taken as 0.
ExactPoint3 curve_point_exact(const BilliardParams& params, const Rational& t);

// All geometries. For the cylinder the result is the Cartesian point of the
// beta-slice (angle reduced into [0, beta)) at height g(m*t + phase); for the
// other two it is curve_point_exact converted to double.
Point3 curve_point(const BilliardParams& params, const Rational& t);
Point3 curve_point(const BilliardParams& params, double t);

// Reflection points on the unit circle, in traversal order; vertex j sits at
// angle (j * s * beta / n) reduced into [0, beta).
std::vector<Point2> star_polygon_vertices(int s, int n, double beta);

// Offset of the crossing on a chord from the chord midpoint, as a fraction of
// the half chord, for two chords l*beta/n apart:
//   x_l(beta) = tan(l beta / 2n) / tan(s beta / 2n).
// Throws DomainError outside 0 < beta <= 2*pi, 1 <= l <= n - 1, or at a pole.
double x_l(double beta, int l, int s, int n);
// Limit of x_l as beta -> 0+: l / s.
Rational x_l_limit(int l, int s);

}  // namespace billiard
