#include "billiard/symunion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "billiard/errors.hpp"

namespace billiard {

namespace {

struct PartialEvent {
  Rational t;
  int crossing = 0;
  bool over = false;
};

// Index of the open interval (k, k+1)/K containing t, or -1 on a passage.
int interval_of(const Rational& t, int passages) {
  const Rational scaled = t * passages;
  if (is_integer(scaled)) return -1;
  return static_cast<int>(floor(scaled));
}

std::pair<Rational, Rational> ordered(Rational a, Rational b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

}  // namespace

SymmetricUnionDecomposition decompose_symmetric(KnotDiagram diagram, int passages) {
  if (passages < 2 || passages % 2 != 0) throw ParameterError("the number of axis passages must be even");
  auto fail = [](const std::string& what) { throw ConsistencyError("symmetric union: " + what); };
  SymmetricUnionDecomposition out;
  const auto& crossings = diagram.crossings;
  const int count = static_cast<int>(crossings.size());

  std::map<std::pair<Rational, Rational>, int> by_position;
  for (const auto& c : crossings) {
    if (!c.t_exact || !c.t_prime_exact) fail("crossings need exact parameters");
    by_position[ordered(frac(*c.t_exact), frac(*c.t_prime_exact))] = c.index;
  }

  out.mirror_pairing.assign(count, 0);
  for (const auto& c : crossings) {
    const Rational t = frac(*c.t_exact);
    const Rational tp = frac(*c.t_prime_exact);
    if (is_integer(t + tp)) {
      if (interval_of(t, passages) != -1) fail("axis crossing away from the axis passages");
      out.axis_crossings.push_back(c.index);
      continue;
    }
    const auto it = by_position.find(ordered(frac(-t), frac(-tp)));
    if (it == by_position.end()) fail("crossing " + std::to_string(c.index) + " has no mirror image");
    const Crossing& partner = crossings[it->second - 1];
    if (partner.sign != -c.sign) fail("mirror crossings must have opposite signs");
    // The strand at t maps to the strand at -t; it must stay on top.
    const bool over_t = c.over_first;
    const bool partner_over_at_minus_t = (frac(*partner.t_exact) == frac(-t)) ? partner.over_first : !partner.over_first;
    if (over_t != partner_over_at_minus_t) fail("reflection does not preserve over/under at crossing " + std::to_string(c.index));
    out.mirror_pairing[c.index - 1] = partner.index;
  }

  // Events on the left half, grouped by interval.
  std::vector<std::vector<PartialEvent>> intervals(passages);
  for (const auto& c : crossings) {
    if (out.mirror_pairing[c.index - 1] == 0) continue;
    const Rational ts[2] = {frac(*c.t_exact), frac(*c.t_prime_exact)};
    const int k0 = interval_of(ts[0], passages);
    const int k1 = interval_of(ts[1], passages);
    if ((k0 % 2 == 0) != (k1 % 2 == 0)) fail("crossing " + std::to_string(c.index) + " straddles the axis");
    if (k0 % 2 != 0) continue;
    intervals[k0].push_back({ts[0], c.index, c.over_first});
    intervals[k1].push_back({ts[1], c.index, !c.over_first});
  }
  for (auto& iv : intervals)
    std::sort(iv.begin(), iv.end(), [](const PartialEvent& a, const PartialEvent& b) { return a.t < b.t; });

  // Walk the left half: a cap joins passage q to K - q, the axis arc joins
  // 0 to K/2. Entering at an even passage runs the interval forwards.
  const int half = passages / 2;
  std::vector<int> gauss_original;
  std::map<int, int> direction_product;
  std::vector<bool> visited(passages, false);
  int passage = 0;
  do {
    const bool forward = passage % 2 == 0;
    const int k = forward ? passage : passage - 1;
    if (visited[k]) fail("left half does not close into one loop");
    visited[k] = true;
    const auto& iv = intervals[k];
    auto take = [&](const PartialEvent& e) {
      gauss_original.push_back(e.over ? e.crossing : -e.crossing);
      auto [slot, inserted] = direction_product.emplace(e.crossing, forward ? 1 : -1);
      if (!inserted) slot->second *= forward ? 1 : -1;
    };
    if (forward)
      std::for_each(iv.begin(), iv.end(), take);
    else
      std::for_each(iv.rbegin(), iv.rend(), take);
    const int reached = forward ? passage + 1 : passage - 1;
    if (reached == 0 || reached == half)
      passage = reached == 0 ? half : 0;
    else
      passage = passages - reached;
  } while (passage != 0);
  for (int k = 0; k < passages; k += 2)
    if (!visited[k]) fail("left half does not close into one loop");

  std::map<int, int> relabel;
  std::vector<int> gauss;
  std::vector<int> signs;
  for (int g : gauss_original) {
    const int orig = std::abs(g);
    auto [it, inserted] = relabel.emplace(orig, static_cast<int>(relabel.size()) + 1);
    if (inserted) {
      signs.push_back(crossings[orig - 1].sign * direction_product.at(orig));
      out.partial_origin.push_back(orig);
    }
    gauss.push_back(g > 0 ? it->second : -it->second);
  }
  if (static_cast<int>(signs.size()) * 2 + static_cast<int>(out.axis_crossings.size()) != count)
    fail("partial knot has the wrong number of crossings");
  out.partial = diagram_from_gauss(gauss, signs);
  // diagram_from_gauss numbers crossings by first visit, as relabel did.
  out.diagram = std::move(diagram);
  return out;
}

SymmetricUnionDecomposition decompose_R(int s, int n, int m) {
  BilliardParams p;
  p.geometry = Geometry::Cube;
  p.s = s;
  p.n = n;
  p.m = m;
  auto decomposition = decompose_symmetric(build_diagram(p), 2 * s);
  decomposition.experimental = std::gcd(n, m) != 1;
  return decomposition;
}

SymmetricUnionDecomposition decompose_T(int two_s, int n, int m) {
  if (two_s < 2 || two_s % 2 != 0) throw ParameterError("the string count of T must be even");
  BilliardParams p;
  p.geometry = Geometry::FlatTorus;
  p.s = two_s;
  p.n = n;
  p.m = m;
  validate(p);
  auto crossings = enumerate_crossings(p);
  const Rational phase = choose_phase_near_zero(crossings, m);
  auto decomposition = decompose_symmetric(resolve_diagram(p, std::move(crossings), phase), 2 * two_s);
  decomposition.experimental = std::gcd(n, m) != 1;
  return decomposition;
}

}  // namespace billiard
