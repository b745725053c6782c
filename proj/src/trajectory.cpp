#include "billiard/trajectory.hpp"

#include <cmath>
#include <numeric>

#include "billiard/errors.hpp"

namespace billiard {

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::Cylinder: return "cylinder";
    case Geometry::FlatTorus: return "flat-torus";
    case Geometry::Cube: return "cube";
  }
  return "?";
}

Geometry parse_geometry(std::string_view text) {
  if (text == "cylinder" || text == "Z") return Geometry::Cylinder;
  if (text == "flat-torus" || text == "torus" || text == "T") return Geometry::FlatTorus;
  if (text == "cube" || text == "R") return Geometry::Cube;
  throw ParameterError("unknown geometry '" + std::string(text) +
                       "' (expected cylinder, flat-torus or cube)");
}

void validate(const BilliardParams& p) {
  auto fail = [](const std::string& what) { throw ParameterError(what); };
  if (p.s < 1) fail("s must be a positive integer");
  if (p.n < 1) fail("n must be a positive integer");
  if (p.m < 1) fail("m must be a positive integer");
  if (p.phase && (*p.phase < 0 || *p.phase >= 1)) fail("phase must lie in [0, 1)");
  switch (p.geometry) {
    case Geometry::Cylinder: {
      if (std::gcd(p.s, p.n) != 1) fail("gcd(s, n) = 1 is required");
      if (!(p.beta > 0.0) || p.beta > kTwoPi * (1.0 + 1e-15))
        fail("beta must lie in (0, 2*pi]");
      // Each chord must subtend less than a half turn.
      if (p.s * p.beta / p.n >= std::numbers::pi * (1.0 - 1e-12)) {
        if (p.beta >= kTwoPi * (1.0 - 1e-15))
          fail("n >= 2s+1 is required for the cylinder at beta = 2*pi");
        fail("s*beta/n < pi is required (chords shorter than a diameter)");
      }
      break;
    }
    case Geometry::FlatTorus:
      if (std::gcd(p.s, p.n) != 1) fail("gcd(s, n) = 1 is required");
      if (std::gcd(p.s, p.m) != 1) fail("gcd(s, m) = 1 is required for the flat solid torus");
      break;
    case Geometry::Cube:
      if (p.n % 2 == 0) fail("n must be odd for the symmetric Lissajous family R(s, n, m)");
      if (std::gcd(p.s, p.n) != 1) fail("gcd(s, n) = 1 is required");
      break;
  }
}

double default_cylinder_beta(int s, int n) {
  if (n >= 2 * s + 1) return kTwoPi;
  int a = 1;
  while (a * n < 2 * s + 1) ++a;
  return kTwoPi / a;
}

Rational sawtooth(const Rational& t) {
  const Rational centred = frac(t) - Rational(1, 2);
  return 2 * (centred < 0 ? -centred : centred);
}

double sawtooth(double t) { return 2.0 * std::abs(t - std::floor(t) - 0.5); }

int sawtooth_slope(const Rational& t) {
  const Rational f = frac(t);
  if (f == Rational(0) || f == Rational(1, 2)) return 0;
  return f < Rational(1, 2) ? -2 : 2;
}

ExactPoint3 curve_point_exact(const BilliardParams& p, const Rational& t) {
  const Rational phase = p.phase.value_or(Rational(0));
  switch (p.geometry) {
    case Geometry::FlatTorus:
      return {frac(p.s * t), sawtooth(p.n * t), sawtooth(p.m * t + phase)};
    case Geometry::Cube:
      return {sawtooth(p.s * t + Rational(1, 4)), sawtooth(p.n * t), sawtooth(p.m * t + phase)};
    case Geometry::Cylinder:
      break;
  }
  throw ParameterError("exact curve points exist only for flat-torus and cube geometry");
}

Point3 curve_point(const BilliardParams& p, const Rational& t) {
  if (p.geometry != Geometry::Cylinder) {
    const auto e = curve_point_exact(p, t);
    return {to_double(e.x), to_double(e.y), to_double(e.z)};
  }
  return curve_point(p, to_double(t));
}

Point3 curve_point(const BilliardParams& p, double t) {
  const double phase = p.phase ? to_double(*p.phase) : 0.0;
  if (p.geometry == Geometry::FlatTorus) {
    const double x = p.s * t - std::floor(p.s * t);
    return {x, sawtooth(p.n * t), sawtooth(p.m * t + phase)};
  }
  if (p.geometry == Geometry::Cube) {
    return {sawtooth(p.s * t + 0.25), sawtooth(p.n * t), sawtooth(p.m * t + phase)};
  }
  const double wrapped = t - std::floor(t);
  const double chord_pos = p.n * wrapped;
  const double chord = std::min(std::floor(chord_pos), static_cast<double>(p.n - 1));
  const double u = chord_pos - chord;
  const double step = p.s * p.beta / p.n;
  // Straight chord from angle 0 to `step`, rotated onto its developed
  // position chord*step and then folded back into the slice.
  const double px = (1.0 - u) + u * std::cos(step);
  const double py = u * std::sin(step);
  const double r = std::hypot(px, py);
  double theta = std::fmod(chord * step + std::atan2(py, px), p.beta);
  if (theta < 0) theta += p.beta;
  return {r * std::cos(theta), r * std::sin(theta), sawtooth(p.m * wrapped + phase)};
}

std::vector<Point2> star_polygon_vertices(int s, int n, double beta) {
  if (!(beta > 0.0) || beta > kTwoPi * (1.0 + 1e-15))
    throw ParameterError("beta must lie in (0, 2*pi]");
  if (s < 1 || n < 1 || std::gcd(s, n) != 1) throw ParameterError("gcd(s, n) = 1 is required");
  std::vector<Point2> out;
  out.reserve(n);
  const double step = s * beta / n;
  for (int j = 0; j < n; ++j) {
    double theta = std::fmod(j * step, beta);
    out.push_back({std::cos(theta), std::sin(theta)});
  }
  return out;
}

double x_l(double beta, int l, int s, int n) {
  if (!(beta > 0.0) || beta > kTwoPi * (1.0 + 1e-15)) throw DomainError("x_l: beta must lie in (0, 2*pi]");
  if (s < 1 || n < 1 || l < 1 || l > std::max(n - 1, s - 1))
    throw DomainError("x_l: l must satisfy 1 <= l <= n - 1");
  const double num_arg = l * beta / (2.0 * n);
  const double den_arg = s * beta / (2.0 * n);
  const double den = std::tan(den_arg);
  if (std::abs(std::cos(num_arg)) < 1e-14 || std::abs(std::cos(den_arg)) < 1e-14 || std::abs(den) < 1e-300)
    throw DomainError("x_l: tangent pole at this beta");
  return std::tan(num_arg) / den;
}

Rational x_l_limit(int l, int s) {
  if (s < 1) throw DomainError("x_l: s must be positive");
  return Rational(l, s);
}

}  // namespace billiard
