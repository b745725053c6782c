#pragma once

#include <vector>

#include "billiard/diagram.hpp"

namespace billiard {

struct SymmetricUnionDecomposition {
  KnotDiagram diagram;
  std::vector<int> axis_crossings;   // crossing indices on the symmetry axis
  std::vector<int> mirror_pairing;   // mirror_pairing[i - 1] = partner of crossing i, 0 on the axis
  KnotDiagram partial;
  std::vector<int> partial_origin;   // partial crossing j -> crossing of `diagram`
  bool experimental = false;         // gcd(n, m) > 1
};

// R(s, n, m): mirror symmetric about x = 1/2 under t -> -t.
SymmetricUnionDecomposition decompose_R(int s, int n, int m);
// T(2s, n, m): mirror symmetric about the lines x = 0 and x = 1/2 under t -> -t.
SymmetricUnionDecomposition decompose_T(int two_s, int n, int m);

// Shared machinery: `passages` points t = k / passages lie on the axis, the
// left half is the union of the intervals (k, k + 1) / passages for even k.
// The phase must be small enough that t -> -t carries over-strands to
// over-strands. Throws ConsistencyError when the symmetry fails.
SymmetricUnionDecomposition decompose_symmetric(KnotDiagram diagram, int passages);

}  // namespace billiard
