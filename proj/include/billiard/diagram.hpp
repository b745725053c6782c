#pragma once

#include <array>
#include <optional>
#include <vector>

#include "billiard/rational.hpp"
#include "billiard/trajectory.hpp"

namespace billiard {

// Cylinder crossing data: chord a meets chord b, where b starts l*beta/n
// further round the circle. With x = x_l(beta),
//   t  = (k + x) / 2n   (point on chord a, k = 2a + 1),
//   t' = (k' - x) / 2n  (point on chord b, k' = 2b + 1 mod 2n, lifted so t < t').
struct CrossingCombinatorics {
  int k = 0;
  int k_prime = 0;
  int l = 0;
  friend bool operator==(const CrossingCombinatorics&, const CrossingCombinatorics&) = default;
};

// One double point of the projection. For the cylinder, t is the strand
// carrying +x_l and t_prime may exceed 1 (it lies in (t, t + 1)); otherwise
// 0 <= t < t_prime < 1.
struct Crossing {
  int index = 0;  // 1-based, ascending (t, t') at construction
  double t = 0.0;
  double t_prime = 0.0;
  std::optional<Rational> t_exact;
  std::optional<Rational> t_prime_exact;
  std::optional<CrossingCombinatorics> combinatorics;
  int sign = 0;             // 0 until resolved
  bool over_first = false;  // strand at t lies above strand at t_prime
};

struct KnotDiagram {
  std::optional<BilliardParams> params;  // phase filled in once resolved
  bool stable_limit = false;             // cylinder beta -> 0+ diagram
  std::vector<Crossing> crossings;       // crossings[i].index == i + 1
  std::vector<int> gauss;                // +i over, -i under, in traversal order
  std::vector<std::array<int, 4>> pd;    // X[under_in, ., under_out, .], counterclockwise
  int components = 1;

  std::size_t crossing_count() const { return crossings.size(); }
  int sign_of(int index) const { return crossings.at(index - 1).sign; }
};

// The (s - 1) n crossing combinatorics of the star polygon {n/s}, ordered by
// chord a then offset l. n = 1 is allowed (each chord meets its own lifts).
std::vector<CrossingCombinatorics> cylinder_combinatorics(int s, int n);

// Positions only (sign 0). Ordered and indexed by (t, t').
// Throws DegenerateProjectionError for non-generic projections.
std::vector<Crossing> enumerate_crossings(const BilliardParams& params);

// Cylinder crossings at the beta -> 0+ limit, with exact rational positions
// t = (k + l/s) / 2n.
std::vector<Crossing> enumerate_stable_crossings(int s, int n);

// (t + t') exactly; cylinder crossings recover it from k + k'.
Rational exact_parameter_sum(const Crossing& c);
// True when m (t - t') is an integer, i.e. the height difference vanishes
// for every phase.
bool difference_vanishes(const Crossing& c, int m);

// All phases in [0, 1) at which some crossing has zero height difference,
// sorted and unique.
std::vector<Rational> singular_phases(const std::vector<Crossing>& crossings, int m);

// Midpoint of the widest gap between consecutive singular phases (cylinder
// and flat torus); half the smallest positive singular phase (cube).
// Throws NoValidPhaseError when every phase is singular.
Rational choose_phase(const BilliardParams& params, const std::vector<Crossing>& crossings);
Rational choose_phase(const BilliardParams& params);
// Half the smallest positive singular phase.
Rational choose_phase_near_zero(const std::vector<Crossing>& crossings, int m);

// Sign of g(m t + phase) - g(m t' + phase); exact where positions are exact.
int height_difference_sign(const Crossing& c, int m, const Rational& phase);

// Fills over_first and sign, then builds Gauss and PD codes.
// Throws SingularPhaseError if some crossing has zero height difference.
KnotDiagram resolve_diagram(const BilliardParams& params, std::vector<Crossing> crossings,
                            const Rational& phase);

// enumerate_crossings + choose_phase (when params.phase is empty) + resolve.
KnotDiagram build_diagram(BilliardParams params);

// Builds gauss/pd from crossings whose over_first and sign are set.
// Crossings are re-indexed by ascending (t, t').
KnotDiagram assemble_diagram(std::optional<BilliardParams> params, std::vector<Crossing> crossings);

// Diagram from a signed Gauss code (+i over / -i under) and per-crossing
// signs (signs[i - 1]).
KnotDiagram diagram_from_gauss(const std::vector<int>& gauss, const std::vector<int>& signs);

// Diagram from a PD code. Signs are taken from `signs` when given, otherwise
// read off the over-strand labels. A link (more than one component) comes back
// with its PD code and component count but no Gauss code.
KnotDiagram diagram_from_pd(const std::vector<std::array<int, 4>>& pd,
                            const std::vector<int>& signs = {});

// Each label twice in the Gauss code, once over and once under; PD labels
// 1..2c each used twice; PD traversal closes into `components` loops.
// Throws ConsistencyError describing the first violation.
void check_structure(const KnotDiagram& diagram);

enum class SymmetryKind {
  Rotation,     // t -> t + 1/d, over/under and signs preserved
  HalfTurnFlip  // t -> t + 1/2 with heights reflected: over/under swapped, signs preserved
};

// True iff shifting the Gauss code by 2c/d positions is a relabeling of the
// crossings compatible with `kind`. HalfTurnFlip requires d == 2.
bool verify_cyclic_symmetry(const KnotDiagram& diagram, int d, SymmetryKind kind = SymmetryKind::Rotation);

}  // namespace billiard
