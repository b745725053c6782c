#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "billiard/diagram.hpp"

namespace billiard {

enum class StabilityClass { StronglyPositiveStable, PositivelyStable, NegativelyStable, NotStable };

std::string_view to_string(StabilityClass c);
StabilityClass parse_stability(std::string_view text);

struct DeformationPoint {
  double beta = 0.0;
  std::vector<double> values;  // sign(delta_i(2pi)) * delta_i(beta)
};

struct DeformationProfile {
  BilliardParams params;  // cylinder, beta = 2pi, phase chosen at 2pi
  std::vector<CrossingCombinatorics> combinatorics;
  std::vector<DeformationPoint> grid;  // descending beta
  std::vector<double> limit_values;    // the beta -> 0+ row, exact values as double
  // Per crossing at beta -> 0+: sign of the normalized quotient, 0 when the
  // height difference itself tends to 0 (only possible when gcd(s, m) > 1).
  std::vector<int> limit_signs;
  // Sign of the normalized quotient just above beta = 0 (never 0).
  std::vector<int> approach_signs;
  // Sign changes of the normalized quotient on (0, 2pi].
  std::vector<int> sign_changes;
  StabilityClass classification = StabilityClass::NotStable;
  StabilityClass grid_classification = StabilityClass::NotStable;
  int distinct_curves = 0;
  // s = 4 only: v_1 == v_3 for the crossings of chord 0 at beta = 2pi and at the limit.
  std::optional<bool> positively_enlaced;
  std::optional<bool> positively_enlaced_limit;

  bool vanishes_at_limit() const;
};

// t_i(beta), t'_i(beta) for one crossing.
std::pair<double, double> crossing_parameters(double beta, const CrossingCombinatorics& c, int s, int n);
// The beta -> 0+ limit (k + l/s)/2n, (k' - l/s)/2n.
std::pair<Rational, Rational> limit_crossing_parameters(const CrossingCombinatorics& c, int s, int n);

// g(m t + phase) - g(m t' + phase) at slice angle beta.
double delta(double beta, const CrossingCombinatorics& c, int s, int n, int m, const Rational& phase);
// -sign(sin(pi [m (t + t') + 2 phase]) * sin(pi m (t - t'))).
int delta_sign_formula(double beta, const CrossingCombinatorics& c, int s, int n, int m, const Rational& phase);
// Sign of sin(pi m (t - t')(beta)) / sin(pi m (t - t')(2pi)); phase free.
int delta_normalized(double beta, const CrossingCombinatorics& c, int s, int n, int m);

// Number of beta in (lo, 2pi] where the normalized quotient changes sign
// (lo = 0 counts every change down to the limit).
int sign_change_count(const CrossingCombinatorics& c, int s, int n, int m, double lo = 0.0);

// Log-spaced grid on [1e-4, 2pi], descending.
std::vector<double> beta_grid(int grid_size);

inline constexpr int kDefaultGridSize = 2048;

// Requires gcd(s, n) = 1 and n >= 2s + 1.
DeformationProfile classify_stability(int s, int n, int m, int grid_size = kDefaultGridSize);
// Same data; the name used by graph writers.
DeformationProfile deformation_graph(int s, int n, int m, int grid_size = kDefaultGridSize);

// Number of distinct value columns of the grid (tolerance 1e-12).
int count_distinct_curves(const std::vector<DeformationPoint>& grid, std::size_t crossing_count);

// Diagram of the stable limit knot from the exact limit parameters.
// Throws LimitSingularError when some crossing stays singular for every phase.
KnotDiagram build_stable_diagram(int s, int n, int m);

void write_deformation_csv(const DeformationProfile& profile, std::ostream& out);
void write_deformation_svg(const DeformationProfile& profile, std::ostream& out);

}  // namespace billiard
