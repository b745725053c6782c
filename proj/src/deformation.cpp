#include "billiard/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "billiard/errors.hpp"

namespace billiard {

namespace {

constexpr double kZeroTolerance = 1e-12;
constexpr double kMinGridBeta = 1e-4;

int sign_of(double v) {
  if (std::abs(v) < kZeroTolerance) return 0;
  return v > 0 ? 1 : -1;
}

// m (t - t') as a function of beta.
double difference_argument(double beta, const CrossingCombinatorics& c, int s, int n, int m) {
  const double x = x_l(beta, c.l, s, n);
  return m * (c.k - c.k_prime + 2.0 * x) / (2.0 * n);
}

Rational limit_difference_argument(const CrossingCombinatorics& c, int s, int n, int m) {
  return m * (Rational(c.k - c.k_prime) + 2 * x_l_limit(c.l, s)) / (2 * n);
}

int sin_pi_sign(double u) { return sign_of(std::sin(std::numbers::pi * u)); }

StabilityClass classify_counts(const std::vector<int>& counts) {
  if (std::all_of(counts.begin(), counts.end(), [](int k) { return k == 0; }))
    return StabilityClass::StronglyPositiveStable;
  if (std::all_of(counts.begin(), counts.end(), [](int k) { return k % 2 == 0; }))
    return StabilityClass::PositivelyStable;
  if (std::all_of(counts.begin(), counts.end(), [](int k) { return k % 2 == 1; }))
    return StabilityClass::NegativelyStable;
  return StabilityClass::NotStable;
}

StabilityClass classify_grid(const DeformationProfile& p) {
  if (p.combinatorics.empty()) return StabilityClass::StronglyPositiveStable;
  bool all_positive = std::all_of(p.grid.begin(), p.grid.end(), [](const DeformationPoint& pt) {
    return std::all_of(pt.values.begin(), pt.values.end(), [](double v) { return v > kZeroTolerance; });
  });
  all_positive = all_positive && std::none_of(p.limit_values.begin(), p.limit_values.end(),
                                              [](double v) { return v < -kZeroTolerance; });
  if (all_positive) return StabilityClass::StronglyPositiveStable;
  const auto& last = p.grid.back().values;
  if (std::all_of(last.begin(), last.end(), [](double v) { return v > kZeroTolerance; }))
    return StabilityClass::PositivelyStable;
  if (std::all_of(last.begin(), last.end(), [](double v) { return v < -kZeroTolerance; }))
    return StabilityClass::NegativelyStable;
  return StabilityClass::NotStable;
}

// v_1 == v_3 for the crossings of chord 0 with the chords one and three steps on.
std::optional<bool> enlacement(const std::vector<CrossingCombinatorics>& combs, int n, int m, bool at_limit) {
  constexpr int s = 4;
  int v[4] = {0, 0, 0, 0};
  for (const auto& c : combs) {
    if (c.k != 1 || (c.l != 1 && c.l != 3)) continue;
    v[c.l] = at_limit ? billiard::sin_pi_sign(limit_difference_argument(c, s, n, m))
                      : sin_pi_sign(difference_argument(kTwoPi, c, s, n, m));
  }
  if (v[1] == 0 || v[3] == 0) return std::nullopt;
  return v[1] == v[3];
}

// First crossing index of each group of identical value columns.
std::vector<std::size_t> curve_representatives(const std::vector<DeformationPoint>& grid, std::size_t crossing_count) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < crossing_count; ++i) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) {
      return std::all_of(grid.begin(), grid.end(),
                         [&](const DeformationPoint& p) { return std::abs(p.values[i] - p.values[r]) <= kZeroTolerance; });
    });
    if (!seen) reps.push_back(i);
  }
  return reps;
}

}  // namespace

std::string_view to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::StronglyPositiveStable: return "StronglyPositiveStable";
    case StabilityClass::PositivelyStable: return "PositivelyStable";
    case StabilityClass::NegativelyStable: return "NegativelyStable";
    case StabilityClass::NotStable: return "NotStable";
  }
  return "?";
}

StabilityClass parse_stability(std::string_view text) {
  for (auto c : {StabilityClass::StronglyPositiveStable, StabilityClass::PositivelyStable,
                 StabilityClass::NegativelyStable, StabilityClass::NotStable})
    if (text == to_string(c)) return c;
  throw ParameterError("unknown stability class '" + std::string(text) + "'");
}

bool DeformationProfile::vanishes_at_limit() const {
  return std::any_of(limit_signs.begin(), limit_signs.end(), [](int v) { return v == 0; });
}

std::pair<double, double> crossing_parameters(double beta, const CrossingCombinatorics& c, int s, int n) {
  const double x = x_l(beta, c.l, s, n);
  return {(c.k + x) / (2.0 * n), (c.k_prime - x) / (2.0 * n)};
}

std::pair<Rational, Rational> limit_crossing_parameters(const CrossingCombinatorics& c, int s, int n) {
  const Rational x = x_l_limit(c.l, s);
  return {(c.k + x) / (2 * n), (c.k_prime - x) / (2 * n)};
}

double delta(double beta, const CrossingCombinatorics& c, int s, int n, int m, const Rational& phase) {
  const auto [t, tp] = crossing_parameters(beta, c, s, n);
  const double ph = to_double(phase);
  return sawtooth(m * t + ph) - sawtooth(m * tp + ph);
}

int delta_sign_formula(double beta, const CrossingCombinatorics& c, int s, int n, int m, const Rational& phase) {
  const int first = billiard::sin_pi_sign(m * Rational(c.k + c.k_prime, 2 * n) + 2 * phase);
  const int second = sin_pi_sign(difference_argument(beta, c, s, n, m));
  return -first * second;
}

int delta_normalized(double beta, const CrossingCombinatorics& c, int s, int n, int m) {
  const int ref = sin_pi_sign(difference_argument(kTwoPi, c, s, n, m));
  if (ref == 0) throw NoValidPhaseError("crossing is singular at beta = 2*pi for every phase");
  return ref * sin_pi_sign(difference_argument(beta, c, s, n, m));
}

int sign_change_count(const CrossingCombinatorics& c, int s, int n, int m, double lo) {
  // x_l decreases in beta for l < s, so m (t - t') rises monotonically from
  // its value at 2pi to its value at lo; every integer passed is a zero of
  // the sine.
  const double hi_arg = difference_argument(kTwoPi, c, s, n, m);
  if (sin_pi_sign(hi_arg) == 0) throw NoValidPhaseError("crossing is singular at beta = 2*pi for every phase");
  const auto first = static_cast<long long>(std::floor(hi_arg)) + 1;
  long long last = 0;
  if (lo <= 0.0) {
    const Rational u0 = limit_difference_argument(c, s, n, m);
    last = is_integer(u0) ? floor(u0) - 1 : floor(u0);
  } else {
    const double u = difference_argument(lo, c, s, n, m);
    last = static_cast<long long>(std::ceil(u - kZeroTolerance)) - 1;
  }
  return static_cast<int>(std::max(0LL, last - first + 1));
}

std::vector<double> beta_grid(int grid_size) {
  if (grid_size < 2) throw ParameterError("grid size must be at least 2");
  std::vector<double> out(grid_size);
  const double lo = std::log(kMinGridBeta);
  const double hi = std::log(kTwoPi);
  for (int i = 0; i < grid_size; ++i) out[i] = std::exp(hi - (hi - lo) * i / (grid_size - 1));
  out.front() = kTwoPi;
  out.back() = kMinGridBeta;
  return out;
}

int count_distinct_curves(const std::vector<DeformationPoint>& grid, std::size_t crossing_count) {
  return static_cast<int>(curve_representatives(grid, crossing_count).size());
}

DeformationProfile classify_stability(int s, int n, int m, int grid_size) {
  DeformationProfile p;
  p.params.geometry = Geometry::Cylinder;
  p.params.s = s;
  p.params.n = n;
  p.params.m = m;
  p.params.beta = kTwoPi;
  validate(p.params);

  auto crossings = enumerate_crossings(p.params);
  const Rational phase = choose_phase(p.params, crossings);
  p.params.phase = phase;
  for (const auto& c : crossings) p.combinatorics.push_back(*c.combinatorics);
  const std::size_t count = p.combinatorics.size();

  std::vector<double> ref_sign(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& c = p.combinatorics[i];
    const double d = delta(kTwoPi, c, s, n, m, phase);
    if (sign_of(d) == 0) throw ConsistencyError("chosen phase is singular at beta = 2*pi");
    ref_sign[i] = d > 0 ? 1.0 : -1.0;

    const int changes = sign_change_count(c, s, n, m);
    const int approach = changes % 2 == 0 ? 1 : -1;
    const Rational u0 = limit_difference_argument(c, s, n, m);
    const int at_limit = billiard::sin_pi_sign(u0);
    if (at_limit != 0) {
      const int direct = at_limit * sin_pi_sign(difference_argument(kTwoPi, c, s, n, m));
      if (direct != approach) throw ConsistencyError("sign-change count disagrees with the limit sign");
    }
    p.sign_changes.push_back(changes);
    p.approach_signs.push_back(approach);
    p.limit_signs.push_back(at_limit == 0 ? 0 : approach);

    const auto [t0, tp0] = limit_crossing_parameters(c, s, n);
    const Rational limit_delta = sawtooth(m * t0 + phase) - sawtooth(m * tp0 + phase);
    p.limit_values.push_back(ref_sign[i] * to_double(limit_delta));
  }

  for (double beta : beta_grid(grid_size)) {
    DeformationPoint pt;
    pt.beta = beta;
    pt.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pt.values.push_back(ref_sign[i] * delta(beta, p.combinatorics[i], s, n, m, phase));
    p.grid.push_back(std::move(pt));
  }

  p.classification = classify_counts(p.sign_changes);
  p.grid_classification = classify_grid(p);
  p.distinct_curves = count_distinct_curves(p.grid, count);
  if (s == 4) {
    p.positively_enlaced = enlacement(p.combinatorics, n, m, false);
    p.positively_enlaced_limit = enlacement(p.combinatorics, n, m, true);
  }
  return p;
}

DeformationProfile deformation_graph(int s, int n, int m, int grid_size) { return classify_stability(s, n, m, grid_size); }

KnotDiagram build_stable_diagram(int s, int n, int m) {
  if (s < 1 || n < 1 || m < 1) throw ParameterError("s, n and m must be positive integers");
  if (std::gcd(s, n) != 1) throw ParameterError("gcd(s, n) = 1 is required");
  BilliardParams params;
  params.geometry = Geometry::Cylinder;
  params.s = s;
  params.n = n;
  params.m = m;
  auto crossings = enumerate_stable_crossings(s, n);
  Rational phase;
  try {
    phase = choose_phase(params, crossings);
  } catch (const NoValidPhaseError& e) {
    throw LimitSingularError(std::string("stable limit is singular: ") + e.what());
  }
  KnotDiagram d = resolve_diagram(params, std::move(crossings), phase);
  d.stable_limit = true;
  return d;
}

void write_deformation_csv(const DeformationProfile& p, std::ostream& out) {
  const std::size_t count = p.combinatorics.size();
  out << "beta";
  for (std::size_t i = 1; i <= count; ++i) out << ",c" << i;
  out << '\n';
  std::ostringstream row;
  row << std::setprecision(15);
  for (const auto& pt : p.grid) {
    row.str("");
    row << pt.beta;
    for (double v : pt.values) row << ',' << v;
    out << row.str() << '\n';
  }
  row.str("");
  row << "beta=0+";
  for (double v : p.limit_values) row << ',' << v;
  out << row.str() << '\n';
}

void write_deformation_svg(const DeformationProfile& p, std::ostream& out) {
  constexpr double width = 800, height = 400, margin = 40;
  const double plot_w = width - 2 * margin;
  const double plot_h = height - 2 * margin;
  auto px = [&](double beta) { return margin + plot_w * beta / kTwoPi; };
  auto py = [&](double v) { return margin + plot_h * (1.0 - v) / 2.0; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(kTwoPi) << "\" y2=\"" << py(0)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"" << py(1) << "\" x2=\"" << px(0) << "\" y2=\"" << py(-1)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << px(kTwoPi) - 20 << "\" y=\"" << py(0) + 16 << "\" font-size=\"12\">2pi</text>\n";
  out << "<text x=\"" << margin << "\" y=\"" << margin - 12 << "\" font-size=\"12\">Z(" << p.params.s << ','
      << p.params.n << ',' << p.params.m << ") " << to_string(p.classification) << "</text>\n";

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};
  const auto reps = curve_representatives(p.grid, p.combinatorics.size());
  out << std::setprecision(6);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const std::size_t i = reps[k];
    out << "<polyline fill=\"none\" stroke=\"" << palette[k % std::size(palette)] << "\" stroke-width=\"1.2\" points=\"";
    for (const auto& pt : p.grid) out << px(pt.beta) << ',' << py(pt.values[i]) << ' ';
    out << px(0) << ',' << py(p.limit_values[i]) << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace billiard
