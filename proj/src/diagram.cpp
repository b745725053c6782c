#include "billiard/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "billiard/errors.hpp"

namespace billiard {

namespace {

constexpr double kNumericTolerance = 1e-12;

int inverse_mod(int a, int n) {
  if (n == 1) return 0;
  for (int x = 1; x < n; ++x)
    if ((static_cast<long long>(a) * x) % n == 1) return x;
  throw ParameterError("gcd(s, n) = 1 is required");
}

struct Event {
  double pos = 0.0;
  std::optional<Rational> exact;
  int crossing = 0;
  bool over = false;
};

bool event_less(const Event& a, const Event& b) {
  if (a.exact && b.exact) return *a.exact < *b.exact;
  return a.pos < b.pos;
}

bool events_coincide(const Event& a, const Event& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  return std::abs(a.pos - b.pos) < kNumericTolerance;
}

Event make_event(double t, const std::optional<Rational>& exact, int crossing, bool over) {
  Event e;
  e.crossing = crossing;
  e.over = over;
  if (exact) {
    e.exact = frac(*exact);
    e.pos = to_double(*e.exact);
  } else {
    e.pos = t - std::floor(t);
  }
  return e;
}

bool crossing_less(const Crossing& a, const Crossing& b) {
  if (a.t_exact && b.t_exact && a.t_prime_exact && b.t_prime_exact) {
    if (*a.t_exact != *b.t_exact) return *a.t_exact < *b.t_exact;
    return *a.t_prime_exact < *b.t_prime_exact;
  }
  if (a.t != b.t) return a.t < b.t;
  return a.t_prime < b.t_prime;
}

Crossing exact_crossing(const Rational& t, const Rational& tp) {
  Crossing c;
  c.t_exact = t;
  c.t_prime_exact = tp;
  c.t = to_double(t);
  c.t_prime = to_double(tp);
  return c;
}

void index_in_order(std::vector<Crossing>& crossings) {
  std::sort(crossings.begin(), crossings.end(), crossing_less);
  for (std::size_t i = 0; i < crossings.size(); ++i) crossings[i].index = static_cast<int>(i) + 1;
}

// Projected point of a flat-torus or cube crossing; rejects boundary points
// and repeated points.
void check_generic(const BilliardParams& p, const std::vector<Crossing>& crossings) {
  std::set<std::pair<Rational, Rational>> seen;
  for (const auto& c : crossings) {
    const auto a = curve_point_exact(p, *c.t_exact);
    const auto b = curve_point_exact(p, *c.t_prime_exact);
    if (a.x != b.x || a.y != b.y)
      throw ConsistencyError("crossing parameters do not meet in the projection");
    const Rational zero(0), one(1);
    const bool on_boundary = a.y == zero || a.y == one || (p.geometry == Geometry::Cube && (a.x == zero || a.x == one));
    if (on_boundary)
      throw DegenerateProjectionError("double point on the boundary at t = " + to_string(*c.t_exact));
    if (!seen.emplace(a.x, a.y).second)
      throw DegenerateProjectionError("triple point in the projection at t = " + to_string(*c.t_exact));
  }
}

std::vector<Crossing> flat_torus_crossings(const BilliardParams& p) {
  // s t = s t' mod 1 and n t = -n t' mod 1.
  std::vector<Crossing> out;
  for (int j = 1; j < p.s; ++j) {
    const Rational gap(j, p.s);
    for (int q = 0; q < 2 * p.n; ++q) {
      const Rational sum(q, p.n);
      const Rational t = (sum - gap) / 2;
      const Rational tp = (sum + gap) / 2;
      if (t >= 0 && tp < 1) out.push_back(exact_crossing(t, tp));
    }
  }
  return out;
}

// Double points of t -> (g(a t + phase_x), g(b t + phase_y)) with gcd(a, b) = 1.
std::vector<Crossing> lissajous_crossings(int a, const Rational& phase_x, int b, const Rational& phase_y) {
  std::set<std::pair<Rational, Rational>> found;
  auto scan = [&](int gap_den, int sum_den, const Rational& sum_phase) {
    for (int p = 1; p < gap_den; ++p) {
      const Rational gap(p, gap_den);
      // sum_den (t + t') + 2 sum_phase is an integer.
      for (int q = -2 * sum_den - 4; q <= 2 * sum_den + 4; ++q) {
        const Rational sum = (Rational(q) - 2 * sum_phase) / sum_den;
        const Rational t = (sum - gap) / 2;
        const Rational tp = (sum + gap) / 2;
        if (t >= 0 && tp < 1) found.emplace(t, tp);
      }
    }
  };
  scan(a, b, phase_y);  // x equal by translation, y equal by reflection
  scan(b, a, phase_x);  // y equal by translation, x equal by reflection
  std::vector<Crossing> out;
  out.reserve(found.size());
  for (const auto& [t, tp] : found) out.push_back(exact_crossing(t, tp));
  return out;
}

std::vector<Crossing> cylinder_crossings(const BilliardParams& p) {
  std::vector<Crossing> out;
  for (const auto& comb : cylinder_combinatorics(p.s, p.n)) {
    const double x = x_l(p.beta, comb.l, p.s, p.n);
    Crossing c;
    c.combinatorics = comb;
    c.t = (comb.k + x) / (2.0 * p.n);
    c.t_prime = (comb.k_prime - x) / (2.0 * p.n);
    out.push_back(c);
  }
  return out;
}

int direction_cross_sign(const BilliardParams& p, const Rational& over_t, const Rational& under_t) {
  auto direction = [&](const Rational& t) -> std::pair<long long, long long> {
    if (p.geometry == Geometry::FlatTorus) return {p.s, static_cast<long long>(p.n) * sawtooth_slope(p.n * t)};
    return {static_cast<long long>(p.s) * sawtooth_slope(p.s * t + Rational(1, 4)),
            static_cast<long long>(p.n) * sawtooth_slope(p.n * t)};
  };
  const auto [ox, oy] = direction(over_t);
  const auto [ux, uy] = direction(under_t);
  const long long cross = ox * uy - oy * ux;
  if (cross == 0) throw DegenerateProjectionError("tangential double point at t = " + to_string(over_t));
  return cross > 0 ? 1 : -1;
}

// Union-find over PD labels, joining the two ends of each strand through
// every crossing.
int count_pd_components(const std::vector<std::array<int, 4>>& pd, int label_count) {
  std::vector<int> parent(label_count + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& x : pd) {
    unite(x[0], x[2]);
    unite(x[1], x[3]);
  }
  int count = 0;
  for (int label = 1; label <= label_count; ++label)
    if (find(label) == label) ++count;
  return count;
}

}  // namespace

std::vector<CrossingCombinatorics> cylinder_combinatorics(int s, int n) {
  if (s < 1 || n < 1 || std::gcd(s, n) != 1) throw ParameterError("gcd(s, n) = 1 is required");
  const int s_inv = inverse_mod(s % n, n);
  std::vector<CrossingCombinatorics> out;
  out.reserve(static_cast<std::size_t>(s - 1) * n);
  for (int a = 0; a < n; ++a) {
    for (int l = 1; l < s; ++l) {
      const int b = static_cast<int>((a + static_cast<long long>(l) * s_inv) % n);
      CrossingCombinatorics c{2 * a + 1, 2 * b + 1, l};
      // k' - k is even and 0 < x_l < 1, so this lift gives t < t' < t + 1
      // for every beta.
      if (c.k_prime <= c.k) c.k_prime += 2 * n;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Crossing> enumerate_crossings(const BilliardParams& params) {
  validate(params);
  std::vector<Crossing> out;
  switch (params.geometry) {
    case Geometry::FlatTorus:
      out = flat_torus_crossings(params);
      check_generic(params, out);
      break;
    case Geometry::Cube:
      out = lissajous_crossings(params.s, Rational(1, 4), params.n, Rational(0));
      check_generic(params, out);
      break;
    case Geometry::Cylinder:
      out = cylinder_crossings(params);
      break;
  }
  index_in_order(out);
  return out;
}

std::vector<Crossing> enumerate_stable_crossings(int s, int n) {
  std::vector<Crossing> out;
  for (const auto& comb : cylinder_combinatorics(s, n)) {
    const Rational x = x_l_limit(comb.l, s);
    Crossing c = exact_crossing((comb.k + x) / (2 * n), (comb.k_prime - x) / (2 * n));
    c.combinatorics = comb;
    out.push_back(c);
  }
  index_in_order(out);
  return out;
}

namespace {

// 2n recovered from a numeric cylinder crossing: t + t' = (k + k') / 2n.
int cylinder_n(const Crossing& c) {
  const int k_sum = c.combinatorics->k + c.combinatorics->k_prime;
  return static_cast<int>(std::lround(k_sum / (c.t + c.t_prime) / 2.0));
}

Rational sum_of(const Crossing& c) {
  if (c.t_exact && c.t_prime_exact) return *c.t_exact + *c.t_prime_exact;
  if (c.combinatorics) return Rational(c.combinatorics->k + c.combinatorics->k_prime, 2 * cylinder_n(c));
  throw ConsistencyError("crossing has no exact parameter data");
}

}  // namespace

Rational exact_parameter_sum(const Crossing& c) { return sum_of(c); }

bool difference_vanishes(const Crossing& c, int m) {
  if (c.t_exact && c.t_prime_exact) return is_integer(m * (*c.t_prime_exact - *c.t_exact));
  return std::abs(std::sin(std::numbers::pi * m * (c.t - c.t_prime))) < kNumericTolerance;
}

std::vector<Rational> singular_phases(const std::vector<Crossing>& crossings, int m) {
  std::set<Rational> phases;
  for (const auto& c : crossings) {
    // g(m t + p) = g(m t' + p) iff m (t + t') + 2 p is an integer (or the
    // phase-free factor vanishes).
    const Rational base = frac(-m * sum_of(c) / 2);
    phases.insert(base);
    phases.insert(frac(base + Rational(1, 2)));
  }
  return {phases.begin(), phases.end()};
}

Rational choose_phase_near_zero(const std::vector<Crossing>& crossings, int m) {
  if (crossings.empty()) return Rational(0);
  for (const auto& c : crossings)
    if (difference_vanishes(c, m))
      throw NoValidPhaseError("crossing " + std::to_string(c.index) + " is singular for every phase");
  const auto phases = singular_phases(crossings, m);
  const auto first_positive = std::upper_bound(phases.begin(), phases.end(), Rational(0));
  return *first_positive / 2;
}

Rational choose_phase(const BilliardParams& params, const std::vector<Crossing>& crossings) {
  if (params.geometry == Geometry::Cube) return choose_phase_near_zero(crossings, params.m);
  if (crossings.empty()) return Rational(0);
  for (const auto& c : crossings)
    if (difference_vanishes(c, params.m))
      throw NoValidPhaseError("every phase is singular: m (t - t') is an integer at crossing " +
                              std::to_string(c.index));
  const auto phases = singular_phases(crossings, params.m);
  Rational best_gap(-1);
  Rational best_mid(0);
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const Rational lo = phases[i];
    const Rational hi = (i + 1 < phases.size()) ? phases[i + 1] : phases.front() + 1;
    if (hi - lo > best_gap) {
      best_gap = hi - lo;
      best_mid = frac((lo + hi) / 2);
    }
  }
  return best_mid;
}

Rational choose_phase(const BilliardParams& params) {
  if (params.geometry == Geometry::FlatTorus && std::gcd(params.s, params.m) != 1) {
    // The curve is singular for every phase; report that rather than the
    // parameter constraint.
    BilliardParams relaxed = params;
    relaxed.m = 1;
    validate(relaxed);
    auto crossings = flat_torus_crossings(params);
    index_in_order(crossings);
    return choose_phase(params, crossings);
  }
  return choose_phase(params, enumerate_crossings(params));
}

int height_difference_sign(const Crossing& c, int m, const Rational& phase) {
  if (c.t_exact && c.t_prime_exact) {
    const Rational d = sawtooth(m * *c.t_exact + phase) - sawtooth(m * *c.t_prime_exact + phase);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
  }
  // sign(g(u) - g(v)) = -sign(sin(pi (u + v)) sin(pi (u - v))); the first
  // factor is exact because t + t' is.
  const int first = sin_pi_sign(m * sum_of(c) + 2 * phase);
  const double second = std::sin(std::numbers::pi * m * (c.t - c.t_prime));
  if (first == 0 || std::abs(second) < kNumericTolerance) return 0;
  return second > 0 ? -first : first;
}

KnotDiagram resolve_diagram(const BilliardParams& params, std::vector<Crossing> crossings, const Rational& phase) {
  for (auto& c : crossings) {
    const int dz = height_difference_sign(c, params.m, phase);
    if (dz == 0)
      throw SingularPhaseError("zero height difference at crossing " + std::to_string(c.index) +
                               " for phase " + to_string(phase));
    c.over_first = dz > 0;
    if (c.combinatorics) {
      // Chord b lies counterclockwise of chord a at every cylinder crossing.
      c.sign = c.over_first ? 1 : -1;
    } else {
      const Rational& over = c.over_first ? *c.t_exact : *c.t_prime_exact;
      const Rational& under = c.over_first ? *c.t_prime_exact : *c.t_exact;
      c.sign = direction_cross_sign(params, over, under);
    }
  }
  BilliardParams resolved = params;
  resolved.phase = phase;
  return assemble_diagram(resolved, std::move(crossings));
}

KnotDiagram build_diagram(BilliardParams params) {
  auto crossings = enumerate_crossings(params);
  const Rational phase = params.phase ? *params.phase : choose_phase(params, crossings);
  return resolve_diagram(params, std::move(crossings), phase);
}

KnotDiagram assemble_diagram(std::optional<BilliardParams> params, std::vector<Crossing> crossings) {
  index_in_order(crossings);
  std::vector<Event> events;
  events.reserve(2 * crossings.size());
  for (const auto& c : crossings) {
    events.push_back(make_event(c.t, c.t_exact, c.index, c.over_first));
    events.push_back(make_event(c.t_prime, c.t_prime_exact, c.index, !c.over_first));
  }
  std::sort(events.begin(), events.end(), event_less);
  for (std::size_t i = 1; i < events.size(); ++i)
    if (events_coincide(events[i - 1], events[i]))
      throw DegenerateProjectionError("two crossings share a curve point");

  KnotDiagram d;
  d.params = std::move(params);
  d.crossings = std::move(crossings);
  const int len = static_cast<int>(events.size());
  std::vector<int> over_in(d.crossings.size() + 1), over_out(d.crossings.size() + 1);
  std::vector<int> under_in(d.crossings.size() + 1), under_out(d.crossings.size() + 1);
  for (int j = 0; j < len; ++j) {
    const auto& e = events[j];
    d.gauss.push_back(e.over ? e.crossing : -e.crossing);
    // Edge j+1 runs from event j+1 to event j+2 (1-based, cyclic).
    const int in_edge = (j == 0) ? len : j;
    const int out_edge = j + 1;
    (e.over ? over_in : under_in)[e.crossing] = in_edge;
    (e.over ? over_out : under_out)[e.crossing] = out_edge;
  }
  for (const auto& c : d.crossings) {
    const int i = c.index;
    if (c.sign > 0)
      d.pd.push_back({under_in[i], over_out[i], under_out[i], over_in[i]});
    else
      d.pd.push_back({under_in[i], over_in[i], under_out[i], over_out[i]});
  }
  d.components = 1;
  return d;
}

KnotDiagram diagram_from_gauss(const std::vector<int>& gauss, const std::vector<int>& signs) {
  const int c = static_cast<int>(signs.size());
  if (static_cast<int>(gauss.size()) != 2 * c)
    throw ParameterError("Gauss code length must be twice the crossing count");
  std::vector<int> first(c + 1, -1), second(c + 1, -1);
  std::vector<bool> first_over(c + 1, false);
  for (int j = 0; j < 2 * c; ++j) {
    const int label = std::abs(gauss[j]);
    if (label < 1 || label > c) throw ParameterError("Gauss label out of range");
    if (first[label] < 0) {
      first[label] = j;
      first_over[label] = gauss[j] > 0;
    } else if (second[label] < 0) {
      second[label] = j;
      if ((gauss[j] > 0) == first_over[label]) throw ParameterError("crossing visited twice on the same level");
    } else {
      throw ParameterError("Gauss label appears more than twice");
    }
  }
  std::vector<Crossing> crossings;
  for (int label = 1; label <= c; ++label) {
    if (second[label] < 0) throw ParameterError("Gauss label appears only once");
    if (signs[label - 1] != 1 && signs[label - 1] != -1) throw ParameterError("crossing signs must be +1 or -1");
    Crossing x = exact_crossing(Rational(first[label], 2 * c), Rational(second[label], 2 * c));
    x.over_first = first_over[label];
    x.sign = signs[label - 1];
    crossings.push_back(x);
  }
  return assemble_diagram(std::nullopt, std::move(crossings));
}

KnotDiagram diagram_from_pd(const std::vector<std::array<int, 4>>& pd, const std::vector<int>& signs) {
  const int c = static_cast<int>(pd.size());
  const int labels = 2 * c;
  std::vector<int> uses(labels + 1, 0);
  for (const auto& x : pd)
    for (int v : x) {
      if (v < 1 || v > labels) throw ParameterError("PD label out of range 1.." + std::to_string(labels));
      ++uses[v];
    }
  for (int v = 1; v <= labels; ++v)
    if (uses[v] != 2) throw ParameterError("PD label " + std::to_string(v) + " must appear exactly twice");
  if (!signs.empty() && static_cast<int>(signs.size()) != c)
    throw ParameterError("one sign per PD crossing is required");

  const int components = count_pd_components(pd, labels);
  KnotDiagram d;
  if (components != 1) {
    d.components = components;
    d.pd = pd;
    for (int i = 0; i < c; ++i) {
      Crossing x;
      x.index = i + 1;
      x.sign = signs.empty() ? 0 : signs[i];
      d.crossings.push_back(x);
    }
    return d;
  }

  auto next = [labels](int e) { return e % labels + 1; };
  std::vector<int> gauss(labels, 0);
  std::vector<int> resolved_signs(c, 0);
  for (int i = 0; i < c; ++i) {
    const auto& x = pd[i];
    int sign = signs.empty() ? 0 : signs[i];
    if (sign == 0) {
      const bool pos = x[1] == next(x[3]);
      const bool neg = x[3] == next(x[1]);
      if (pos == neg) throw ParameterError("crossing sign is ambiguous; supply explicit signs");
      sign = pos ? 1 : -1;
    }
    if (x[2] != next(x[0])) throw ParameterError("PD under-strand labels must be consecutive");
    resolved_signs[i] = sign;
    const int over_in = sign > 0 ? x[3] : x[1];
    // The event after edge e is the (e+1)-th, cyclically.
    auto& under_slot = gauss[x[0] % labels];
    auto& over_slot = gauss[over_in % labels];
    if (under_slot != 0 || over_slot != 0) throw ParameterError("PD code visits a point twice");
    under_slot = -(i + 1);
    over_slot = i + 1;
  }
  return diagram_from_gauss(gauss, resolved_signs);
}

void check_structure(const KnotDiagram& d) {
  const int c = static_cast<int>(d.crossings.size());
  auto fail = [](const std::string& what) { throw ConsistencyError(what); };
  for (int i = 0; i < c; ++i) {
    if (d.crossings[i].index != i + 1) fail("crossing indices are not 1..c in order");
    if (d.crossings[i].sign != 1 && d.crossings[i].sign != -1) fail("unresolved crossing sign");
  }
  if (static_cast<int>(d.pd.size()) != c) fail("PD code must have one entry per crossing");
  if (d.components != 1) return;
  if (static_cast<int>(d.gauss.size()) != 2 * c) fail("Gauss code length must be 2c");
  std::vector<int> over(c + 1, 0), under(c + 1, 0);
  for (int g : d.gauss) {
    const int label = std::abs(g);
    if (label < 1 || label > c) fail("Gauss label out of range");
    (g > 0 ? over : under)[label]++;
  }
  for (int i = 1; i <= c; ++i)
    if (over[i] != 1 || under[i] != 1) fail("crossing " + std::to_string(i) + " not visited once over and once under");
  std::vector<int> uses(2 * c + 1, 0);
  for (const auto& x : d.pd)
    for (int v : x) {
      if (v < 1 || v > 2 * c) fail("PD label out of range");
      ++uses[v];
    }
  for (int v = 1; v <= 2 * c; ++v)
    if (uses[v] != 2) fail("PD label " + std::to_string(v) + " not used exactly twice");
  if (c > 0 && count_pd_components(d.pd, 2 * c) != 1) fail("PD code does not close into one component");
  if (c > 1) {
    std::vector<int> signs;
    for (const auto& x : d.crossings) signs.push_back(x.sign);
    const auto rebuilt = diagram_from_pd(d.pd, signs);
    // Compare as cyclic Gauss words up to relabeling.
    std::vector<int> map(c + 1, 0);
    const auto& a = d.gauss;
    // diagram_from_pd starts at the event after the last edge, as ours does.
    const auto& b = rebuilt.gauss;
    for (int j = 0; j < 2 * c; ++j) {
      if ((a[j] > 0) != (b[j] > 0)) fail("PD and Gauss codes disagree on over/under");
      const int la = std::abs(a[j]);
      const int lb = std::abs(b[j]);
      if (map[la] == 0) map[la] = lb;
      if (map[la] != lb) fail("PD and Gauss codes disagree on the crossing order");
    }
  }
}

bool verify_cyclic_symmetry(const KnotDiagram& d, int period, SymmetryKind kind) {
  if (period < 2) throw ParameterError("symmetry order must be at least 2");
  if (kind == SymmetryKind::HalfTurnFlip && period != 2) throw ParameterError("the half-turn flip has order 2");
  const int c = static_cast<int>(d.crossing_count());
  if (c == 0) return true;
  const int len = 2 * c;
  if (len % period != 0) return false;
  const int shift = len / period;
  std::vector<int> image(c + 1, 0);
  std::vector<bool> hit(c + 1, false);
  for (int j = 0; j < len; ++j) {
    const int g_from = d.gauss[j];
    const int g_to = d.gauss[(j + shift) % len];
    const int from = std::abs(g_from);
    const int to = std::abs(g_to);
    const bool same_level = (g_from > 0) == (g_to > 0);
    if (same_level != (kind == SymmetryKind::Rotation)) return false;
    if (d.sign_of(from) != d.sign_of(to)) return false;
    if (image[from] == 0) {
      if (hit[to]) return false;
      image[from] = to;
      hit[to] = true;
    } else if (image[from] != to) {
      return false;
    }
  }
  return true;
}

}  // namespace billiard
