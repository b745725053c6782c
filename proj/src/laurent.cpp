#include "billiard/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace billiard {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPolynomial::LaurentPolynomial(std::vector<std::int64_t> coeffs, int min_exp)
    : coeffs_(std::move(coeffs)), min_exp_(min_exp) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t c, int exp) {
  return LaurentPolynomial(std::vector<std::int64_t>{c}, exp);
}

void LaurentPolynomial::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t LaurentPolynomial::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; }));
}

std::int64_t LaurentPolynomial::coeff(int exp) const {
  const int k = exp - min_exp_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

bool LaurentPolynomial::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

std::int64_t LaurentPolynomial::evaluate(std::int64_t x) const {
  if (min_exp_ < 0 && x != 1 && x != -1)
    throw std::domain_error("negative powers evaluate exactly only at +-1");
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_checked(mul_checked(acc, x), *it);
  if (x == -1 && (min_exp_ % 2 != 0)) acc = -acc;
  if (x != -1 && x != 1)
    for (int k = 0; k < min_exp_; ++k) acc = mul_checked(acc, x);
  return acc;
}

std::int64_t LaurentPolynomial::evaluate_at_minus_one() const { return evaluate(-1); }

LaurentPolynomial LaurentPolynomial::normalized() const {
  LaurentPolynomial out = *this;
  out.min_exp_ = 0;
  if (!out.coeffs_.empty() && out.coeffs_.back() < 0) out = -out;
  return out;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  LaurentPolynomial out;
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  out.min_exp_ = coeffs_.empty() ? 0 : -max_exp();
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& c : out.coeffs_) c = mul_checked(c, -1);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(min_exp_, other.min_exp_);
  const int hi = std::max(max_exp(), other.max_exp());
  std::vector<std::int64_t> sum(hi - lo + 1, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum[min_exp_ - lo + k] = coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    auto& slot = sum[other.min_exp_ - lo + k];
    slot = add_checked(slot, other.coeffs_[k]);
  }
  coeffs_ = std::move(sum);
  min_exp_ = lo;
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) { return *this += -other; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> prod(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      prod[i + j] = add_checked(prod[i + j], mul_checked(a.coeffs_[i], b.coeffs_[j]));
  }
  return LaurentPolynomial(std::move(prod), a.min_exp_ + b.min_exp_);
}

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.span() < b.span()) throw std::domain_error("inexact Laurent division");
  // Long division from the top; every quotient coefficient must be integral.
  std::vector<std::int64_t> rem = a.coeffs_;
  const auto& d = b.coeffs_;
  const std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<std::int64_t> q(qlen, 0);
  for (std::size_t k = qlen; k-- > 0;) {
    const std::int64_t top = rem[k + d.size() - 1];
    if (top % d.back() != 0) throw std::domain_error("inexact Laurent division");
    const std::int64_t c = top / d.back();
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] = add_checked(rem[k + j], -mul_checked(c, d[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](auto c) { return c != 0; }))
    throw std::domain_error("inexact Laurent division");
  return LaurentPolynomial(std::move(q), a.min_exp_ - b.min_exp_);
}

bool LaurentPolynomial::equivalent(const LaurentPolynomial& other) const {
  return normalized() == other.normalized();
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const int e = min_exp_ + k;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += std::to_string(mag);
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace billiard
