#include <numeric>

#include "doctest.h"

#include "billiard/errors.hpp"
#include "billiard/invariants.hpp"
#include "billiard/symunion.hpp"

using namespace billiard;

namespace {

void check_decomposition(const SymmetricUnionDecomposition& u) {
  const auto& d = u.diagram;
  const int c = static_cast<int>(d.crossing_count());
  int paired = 0;
  for (int i = 1; i <= c; ++i) {
    const int j = u.mirror_pairing[i - 1];
    if (j == 0) {
      CHECK(std::find(u.axis_crossings.begin(), u.axis_crossings.end(), i) != u.axis_crossings.end());
      continue;
    }
    ++paired;
    CHECK(j != i);
    CHECK(u.mirror_pairing[j - 1] == i);
    CHECK(d.sign_of(i) == -d.sign_of(j));
  }
  CHECK(paired + static_cast<int>(u.axis_crossings.size()) == c);
  CHECK(static_cast<int>(u.partial.crossing_count()) * 2 == paired);
  CHECK_NOTHROW(check_structure(u.partial));
  const auto pd = determinant(u.partial);
  CHECK(determinant(d) == pd * pd);
}

}  // namespace

TEST_CASE("R(2,3,m) is a symmetric union") {
  for (int m : {1, 5, 7, 11, 13}) {
    CAPTURE(m);
    check_decomposition(decompose_R(2, 3, m));
  }
}

TEST_CASE("partial knot determinants") {
  const auto r = decompose_R(2, 11, 37);
  check_decomposition(r);
  CHECK(determinant(r.partial) == 571);
  CHECK(determinant(r.diagram) == 571 * 571);
  CHECK_FALSE(r.experimental);
  const auto t = decompose_T(4, 11, 39);
  check_decomposition(t);
  CHECK(determinant(t.diagram) == 12769);
  CHECK(determinant(decompose_R(2, 11, 39).diagram) == 12769);
}

TEST_CASE("no off-axis crossings gives the unknot as partial") {
  int found = 0;
  for (int n = 1; n <= 13; n += 2)
    for (int m = 1; m <= 13; m += 2) {
      if (std::gcd(n, m) != 1) continue;
      CAPTURE(n);
      CAPTURE(m);
      const auto u = decompose_R(2, n, m);
      if (u.axis_crossings.size() != u.diagram.crossing_count()) continue;
      ++found;
      CHECK(u.partial.crossing_count() == 0);
      CHECK(determinant(u.partial) == 1);
    }
  CHECK(found > 0);
}

TEST_CASE("partial knots of T(4,n,m) and R(2,n,m) agree") {
  for (int n = 1; n <= 13; n += 2)
    for (int m = 1; m <= 13; m += 2) {
      if (std::gcd(n, m) != 1) continue;
      CAPTURE(n);
      CAPTURE(m);
      const auto t = decompose_T(4, n, m);
      const auto r = decompose_R(2, n, m);
      check_decomposition(t);
      check_decomposition(r);
      CHECK(alexander_polynomial(t.partial) == alexander_polynomial(r.partial));
    }
}

TEST_CASE("decomposition preconditions") {
  CHECK_THROWS_AS(decompose_T(3, 5, 7), ParameterError);
  CHECK_THROWS_AS(decompose_T(4, 6, 7), ParameterError);
  CHECK_THROWS_AS(decompose_R(2, 4, 7), ParameterError);
  CHECK_THROWS_AS(decompose_symmetric(KnotDiagram{}, 3), ParameterError);
}
