#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace billiard {

// Integer Laurent polynomial sum_k c_k t^(min_exp + k), stored densely.
// Invariant: either empty (the zero polynomial) or both end coefficients are
// nonzero. Arithmetic throws std::overflow_error instead of wrapping.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(std::vector<std::int64_t> coeffs, int min_exp = 0);

  static LaurentPolynomial monomial(std::int64_t c, int exp);
  static LaurentPolynomial t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  // Width of the exponent range; 0 for monomials, -1 for zero.
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(int exp) const;
  std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_unit() const;  // +-t^k

  std::int64_t evaluate(std::int64_t x) const;  // requires min_exp >= 0 or |x| == 1
  std::int64_t evaluate_at_minus_one() const;

  // Lowest exponent 0, positive leading coefficient. Idempotent.
  LaurentPolynomial normalized() const;
  // f(t^-1).
  LaurentPolynomial inverted() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // a / b when b divides a exactly in Z[t, t^-1]; throws std::domain_error otherwise.
  friend LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

  // Equal up to multiplication by +-t^k.
  bool equivalent(const LaurentPolynomial& other) const;

  // e.g. "t^2 - t + 1"; zero prints as "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<std::int64_t> coeffs_;
  int min_exp_ = 0;
};

}  // namespace billiard
