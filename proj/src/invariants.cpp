#include "billiard/invariants.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "billiard/errors.hpp"

namespace billiard {

namespace {

void require_knot(const KnotDiagram& d) {
  if (d.components != 1)
    throw UnsupportedLinkError("Alexander polynomial of a " + std::to_string(d.components) +
                               "-component link is not supported");
  if (d.gauss.size() != 2 * d.crossings.size()) throw ConsistencyError("diagram has no Gauss code");
}

// Rank entries for pivoting: lowest degree span, then fewest terms.
std::pair<int, std::size_t> pivot_cost(const LaurentPolynomial& p) { return {p.span(), p.term_count()}; }

}  // namespace

std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const KnotDiagram& d) {
  require_knot(d);
  const int c = static_cast<int>(d.crossing_count());
  std::vector<std::vector<LaurentPolynomial>> m(c, std::vector<LaurentPolynomial>(c));
  if (c == 0) return m;

  std::vector<int> over_arc(c + 1, -1), in_arc(c + 1, -1), out_arc(c + 1, -1);
  int arc = 0;
  for (int g : d.gauss) {
    const int x = std::abs(g);
    if (g > 0) {
      over_arc[x] = arc;
    } else {
      in_arc[x] = arc;
      arc = (arc + 1) % c;
      out_arc[x] = arc;
    }
  }
  if (arc != 0) throw ConsistencyError("arc count does not match crossing count");

  const LaurentPolynomial t = LaurentPolynomial::t();
  const LaurentPolynomial one(1);
  for (int x = 1; x <= c; ++x) {
    auto& row = m[x - 1];
    row[over_arc[x]] += one - t;
    if (d.sign_of(x) > 0) {
      row[in_arc[x]] += t;
      row[out_arc[x]] -= one;
    } else {
      row[in_arc[x]] -= one;
      row[out_arc[x]] += t;
    }
  }
  return m;
}

LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPolynomial(1);
  int sign = 1;
  LaurentPolynomial prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    // Full pivoting on the trailing block keeps every entry a minor of the
    // (permuted) input, so the Bareiss divisions stay exact.
    std::size_t pr = n, pc = n;
    std::pair<int, std::size_t> best{0, 0};
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (a[i][j].is_zero()) continue;
        const auto cost = pivot_cost(a[i][j]);
        if (pr == n || cost < best) {
          best = cost;
          pr = i;
          pc = j;
        }
      }
    if (pr == n) return {};
    if (pr != k) {
      std::swap(a[pr], a[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (auto& row : a) std::swap(row[pc], row[k]);
      sign = -sign;
    }
    const LaurentPolynomial& piv = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial v = a[i][j] * piv - a[i][k] * a[k][j];
        a[i][j] = divide_exact(v, prev);
      }
      a[i][k] = LaurentPolynomial();
    }
    prev = piv;
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

LaurentPolynomial alexander_polynomial(const KnotDiagram& d) {
  require_knot(d);
  const std::size_t c = d.crossing_count();
  if (c <= 1) return LaurentPolynomial(1);
  auto m = alexander_matrix(d);
  m.pop_back();
  for (auto& row : m) row.pop_back();
  const LaurentPolynomial det = laurent_determinant(std::move(m));
  if (det.is_zero()) throw ConsistencyError("vanishing Alexander minor for a knot diagram");
  return det.normalized();
}

std::int64_t determinant(const KnotDiagram& d) { return std::llabs(alexander_polynomial(d).evaluate_at_minus_one()); }

std::optional<std::int64_t> perfect_square_root(std::int64_t k) {
  if (k < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(k)));
  while (r > 0 && r > k / r) --r;
  while (r + 1 <= k / (r + 1)) ++r;
  if (r * r != k) return std::nullopt;
  return r;
}

InvariantReport invariant_report(const LaurentPolynomial& alexander) {
  InvariantReport r;
  r.alexander = alexander.normalized();
  r.determinant = std::llabs(r.alexander.evaluate_at_minus_one());
  r.square_root = perfect_square_root(r.determinant);
  r.is_square = r.square_root.has_value();
  return r;
}

InvariantReport compute_invariants(const KnotDiagram& d) { return invariant_report(alexander_polynomial(d)); }

}  // namespace billiard
