#include "billiard/rational.hpp"

#include <charconv>
#include <cstdlib>

#include "billiard/errors.hpp"

namespace billiard {

std::int64_t floor(const Rational& q) {
  const auto num = q.numerator();
  const auto den = q.denominator();
  auto d = num / den;
  if (num % den != 0 && num < 0) --d;
  return d;
}

std::int64_t ceil(const Rational& q) {
  return is_integer(q) ? q.numerator() : floor(q) + 1;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParameterError("not a rational number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text));
  const auto int_part = text.substr(0, dot);
  const auto frac_part = text.substr(dot + 1);
  if (frac_part.size() > 15) throw ParameterError("too many decimals in '" + std::string(text) + "'");
  const bool negative = !int_part.empty() && int_part.front() == '-';
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const auto whole = (int_part.empty() || int_part == "-" || int_part == "+")
                         ? 0
                         : parse_int(int_part, text);
  const auto digits = frac_part.empty() ? 0 : parse_int(frac_part, text);
  if (digits < 0) throw ParameterError("not a rational number: '" + std::string(text) + "'");
  Rational value(std::abs(whole) * scale + digits, scale);
  return negative ? -value : value;
}

int sin_pi_sign(const Rational& q) {
  if (is_integer(q)) return 0;
  const auto k = floor(q);
  return (k % 2 == 0) ? 1 : -1;
}

}  // namespace billiard
