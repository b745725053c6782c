#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "billiard/diagram.hpp"
#include "billiard/laurent.hpp"

namespace billiard {

struct InvariantReport {
  std::int64_t determinant = 1;
  LaurentPolynomial alexander{1};
  bool is_square = true;
  std::optional<std::int64_t> square_root;
};

// Crossing matrix of the Wirtinger presentation after Fox differentiation:
// row i belongs to crossing i, column j to the j-th over-arc (arcs start at the
// first event of the Gauss code and change after each under-passage).
std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const KnotDiagram& diagram);

// Determinant of a square matrix over Z[t, t^-1], fraction-free elimination.
LaurentPolynomial laurent_determinant(std::vector<std::vector<LaurentPolynomial>> matrix);

// Normalized (lowest exponent 0, positive leading coefficient).
// Throws UnsupportedLinkError for diagrams with more than one component.
LaurentPolynomial alexander_polynomial(const KnotDiagram& diagram);
std::int64_t determinant(const KnotDiagram& diagram);

std::optional<std::int64_t> perfect_square_root(std::int64_t k);

InvariantReport invariant_report(const LaurentPolynomial& alexander);
InvariantReport compute_invariants(const KnotDiagram& diagram);

}  // namespace billiard
