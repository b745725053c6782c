#include <cmath>
#include <numeric>

#include "doctest.h"

#include "billiard/errors.hpp"
#include "billiard/trajectory.hpp"

using namespace billiard;

namespace {

BilliardParams torus(int s, int n, int m, Rational phase = Rational(0)) {
  BilliardParams p;
  p.geometry = Geometry::FlatTorus;
  p.s = s;
  p.n = n;
  p.m = m;
  p.phase = phase;
  return p;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(1, 3)) == 1);
  CHECK(frac(Rational(-1, 4)) == Rational(3, 4));
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
  CHECK_THROWS_AS(parse_rational("abc"), ParameterError);
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(2)) == "2");
  CHECK(sin_pi_sign(Rational(1, 2)) == 1);
  CHECK(sin_pi_sign(Rational(3, 2)) == -1);
  CHECK(sin_pi_sign(Rational(-1, 2)) == -1);
  CHECK(sin_pi_sign(Rational(4)) == 0);
}

TEST_CASE("sawtooth values") {
  CHECK(sawtooth(Rational(0)) == Rational(1));
  CHECK(sawtooth(Rational(1, 4)) == Rational(1, 2));
  CHECK(sawtooth(Rational(1, 2)) == Rational(0));
  CHECK(sawtooth(0.3) == doctest::Approx(0.4));
  CHECK(sawtooth_slope(Rational(1, 8)) == -2);
  CHECK(sawtooth_slope(Rational(5, 8)) == 2);
  CHECK(sawtooth_slope(Rational(1, 2)) == 0);
}

TEST_CASE("sawtooth identities on a rational grid") {
  for (int q = 1; q <= 24; ++q) {
    for (int p = -2 * q; p <= 2 * q; ++p) {
      const Rational t(p, q);
      CHECK(sawtooth(t + 1) == sawtooth(t));
      CHECK(sawtooth(-t) == sawtooth(t));
      CHECK(sawtooth(Rational(1, 2) - t) == sawtooth(Rational(1, 2) + t));
      // The half-period shift reflects the value: g(t + 1/2) = 1 - g(t).
      CHECK(sawtooth(t + Rational(1, 2)) == 1 - sawtooth(t));
      CHECK(sawtooth(t) >= Rational(0));
      CHECK(sawtooth(t) <= Rational(1));
      CHECK(to_double(sawtooth(t)) == doctest::Approx(sawtooth(to_double(t))));
    }
  }
}

TEST_CASE("curve points") {
  const auto p = torus(3, 7, 5);
  const auto a = curve_point_exact(p, Rational(0));
  CHECK(a == ExactPoint3{Rational(0), Rational(1), Rational(1)});
  const auto b = curve_point_exact(p, Rational(1, 2));
  CHECK(b == ExactPoint3{Rational(1, 2), Rational(0), Rational(0)});

  BilliardParams cube;
  cube.geometry = Geometry::Cube;
  cube.s = 2;
  cube.n = 11;
  cube.m = 35;
  CHECK(curve_point_exact(cube, Rational(0)).x == Rational(1, 2));
}

TEST_CASE("curve points are periodic; the flat torus has the half-turn symmetry") {
  for (int s : {1, 3, 5}) {
    for (int n : {2, 7}) {
      for (int m : {1, 4, 9}) {
        if (std::gcd(s, n) != 1 || std::gcd(s, m) != 1) continue;
        const auto p = torus(s, n, m, Rational(1, 7));
        for (int k = 0; k < 60; ++k) {
          const Rational t(k, 60);
          const auto a = curve_point_exact(p, t);
          CHECK(a == curve_point_exact(p, t + 1));
          if (n % 2 == 1 && m % 2 == 1) {
            const auto b = curve_point_exact(p, t + Rational(1, 2));
            CHECK(b.x == frac(a.x + Rational(s, 2)));
            CHECK(b.y == 1 - a.y);
            CHECK(b.z == 1 - a.z);
          }
        }
      }
    }
  }
  BilliardParams z;
  z.geometry = Geometry::Cylinder;
  z.s = 3;
  z.n = 11;
  z.m = 16;
  for (double beta : {kTwoPi, kTwoPi / 3}) {
    z.beta = beta;
    for (int k = 0; k < 37; ++k) {
      const double t = k / 37.0;
      const auto a = curve_point(z, t);
      const auto b = curve_point(z, t + 1.0);
      CHECK(a.x == doctest::Approx(b.x).epsilon(1e-12));
      CHECK(a.y == doctest::Approx(b.y).epsilon(1e-12));
      CHECK(std::hypot(a.x, a.y) <= 1.0 + 1e-12);
      double angle = std::atan2(a.y, a.x);
      if (angle < -1e-12) angle += kTwoPi;
      CHECK(((angle >= -1e-12 && angle <= beta + 1e-12) || std::hypot(a.x, a.y) < 1e-9));
    }
  }
}

TEST_CASE("cylinder curve hits the boundary at the star polygon vertices") {
  BilliardParams z;
  z.geometry = Geometry::Cylinder;
  z.s = 5;
  z.n = 12;
  z.m = 1;
  for (int a : {2, 3}) {
    z.beta = kTwoPi / a;
    const auto v = star_polygon_vertices(5, 12, z.beta);
    REQUIRE(v.size() == 12);
    for (int j = 0; j < 12; ++j) {
      const auto p = curve_point(z, j / 12.0);
      CHECK(p.x == doctest::Approx(v[j].x).epsilon(1e-9));
      CHECK(p.y == doctest::Approx(v[j].y).epsilon(1e-9));
    }
  }
}

TEST_CASE("star polygon vertices") {
  const auto v = star_polygon_vertices(2, 5, kTwoPi);
  for (int j = 0; j < 5; ++j) {
    CHECK(v[j].x == doctest::Approx(std::cos(kTwoPi * j * 2 / 5)));
    CHECK(v[j].y == doctest::Approx(std::sin(kTwoPi * j * 2 / 5)));
  }
  const auto w = star_polygon_vertices(5, 12, kTwoPi / 2);
  for (int j = 1; j < 12; ++j) {
    const double d = std::fmod(5 * std::numbers::pi / 12 * j, std::numbers::pi);
    CHECK(std::atan2(w[j].y, w[j].x) == doctest::Approx(d).epsilon(1e-12));
  }
  CHECK_THROWS_AS(star_polygon_vertices(2, 5, 0.0), ParameterError);
  CHECK_THROWS_AS(star_polygon_vertices(2, 5, 7.0), ParameterError);
  CHECK_THROWS_AS(star_polygon_vertices(2, 4, 1.0), ParameterError);
}

TEST_CASE("validation names the violated constraint") {
  BilliardParams p = torus(2, 4, 5);
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("gcd(s, n)"), ParameterError);
  p = torus(2, 3, 4);
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("gcd(s, m)"), ParameterError);
  p.geometry = Geometry::Cylinder;
  p.s = 3;
  p.n = 5;
  p.m = 1;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("2s+1"), ParameterError);
  p.beta = default_cylinder_beta(3, 5);
  CHECK_NOTHROW(validate(p));
  p.geometry = Geometry::Cube;
  p.s = 2;
  p.n = 10;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("odd"), ParameterError);
  p = torus(2, 3, 5, Rational(3, 2));
  CHECK_THROWS_AS(validate(p), ParameterError);
  CHECK(parse_geometry("T") == Geometry::FlatTorus);
  CHECK_THROWS_AS(parse_geometry("sphere"), ParameterError);
}

TEST_CASE("default cylinder slice angle") {
  CHECK(default_cylinder_beta(2, 5) == kTwoPi);
  CHECK(default_cylinder_beta(2, 3) == doctest::Approx(kTwoPi / 2));
  CHECK(default_cylinder_beta(3, 4) == doctest::Approx(kTwoPi / 2));
  CHECK(default_cylinder_beta(5, 2) == doctest::Approx(kTwoPi / 6));
}

TEST_CASE("x_l") {
  CHECK(x_l(1.0, 3, 3, 11) == doctest::Approx(1.0));
  CHECK(x_l(kTwoPi, 1, 2, 5) == doctest::Approx(std::tan(std::numbers::pi / 5) / std::tan(2 * std::numbers::pi / 5)));
  CHECK(x_l(kTwoPi, 1, 2, 5) == doctest::Approx(0.2361).epsilon(1e-4));
  CHECK(x_l(1e-6, 3, 2, 11) == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(x_l_limit(3, 2) == Rational(3, 2));
  CHECK_THROWS_AS(x_l(0.0, 1, 2, 5), DomainError);
  CHECK_THROWS_AS(x_l(1.0, 0, 2, 5), DomainError);
  CHECK_THROWS_AS(x_l(kTwoPi, 5, 3, 10), DomainError);  // numerator pole at l beta / 2n = pi/2
}
