#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace oracle {

using billiard::floor;
using billiard::frac;

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(r);
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly rem = poly_trim(a);
  const Poly d = poly_trim(b);
  if (d.empty()) throw std::domain_error("division by zero");
  if (rem.size() < d.size()) {
    if (rem.empty()) return {};
    throw std::domain_error("inexact");
  }
  Poly q(rem.size() - d.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t top = rem[k + d.size() - 1];
    if (top % d.back() != 0) throw std::domain_error("inexact");
    q[k] = top / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q[k] * d[j];
  }
  if (!poly_trim(rem).empty()) throw std::domain_error("inexact");
  return poly_trim(q);
}

Poly poly_normalize(Poly p) {
  p = poly_trim(p);
  auto first = std::find_if(p.begin(), p.end(), [](auto c) { return c != 0; });
  p.erase(p.begin(), first);
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

Poly from_coeffs(const std::vector<std::int64_t>& c, int) { return poly_normalize(c); }

namespace {

Poly t_power_minus_one(int k) {
  Poly p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  return p;
}

}  // namespace

Poly torus_knot_alexander(int p, int q) {
  const Poly num = poly_mul(t_power_minus_one(p * q), t_power_minus_one(1));
  const Poly den = poly_mul(t_power_minus_one(p), t_power_minus_one(q));
  return poly_normalize(poly_div_exact(num, den));
}

namespace {

// Laurent entries kept as polynomials in t (signs of t^-1 never arise here).
Poly det_cofactor(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Poly term = poly_mul(m[0][j], det_cofactor(minor));
    acc = (j % 2 == 0) ? poly_sub(acc, poly_sub({}, term)) : poly_sub(acc, term);
  }
  return acc;
}

}  // namespace

Poly fox_alexander_from_pd(const std::vector<std::array<int, 4>>& pd, const std::vector<int>& signs) {
  const int c = static_cast<int>(pd.size());
  if (c <= 1) return {1};
  const int edges = 2 * c;
  // An arc ends where its edge enters as the incoming under-strand.
  std::vector<bool> arc_start(edges + 1, false);
  for (const auto& x : pd) arc_start[x[2]] = true;
  std::vector<int> arc_of(edges + 1, -1);
  int start = 1;
  while (!arc_start[start]) ++start;
  int arc = -1;
  for (int k = 0; k < edges; ++k) {
    const int e = (start - 1 + k) % edges + 1;
    if (arc_start[e]) ++arc;
    arc_of[e] = arc;
  }
  std::vector<std::vector<Poly>> m(c, std::vector<Poly>(c));
  auto add = [](Poly& slot, const Poly& v) { slot = poly_sub(slot, poly_sub({}, v)); };
  for (int i = 0; i < c; ++i) {
    const auto& x = pd[i];
    const int over = arc_of[x[1]];
    const int in = arc_of[x[0]];
    const int out = arc_of[x[2]];
    add(m[i][over], {1, -1});
    if (signs[i] > 0) {
      add(m[i][in], {0, 1});
      add(m[i][out], {-1});
    } else {
      add(m[i][in], {-1});
      add(m[i][out], {0, 1});
    }
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  return poly_normalize(det_cofactor(m));
}

namespace {

struct Segment {
  Rational t0, t1;
  Rational x0, y0, x1, y1;
};

std::vector<Segment> projected_segments(const billiard::BilliardParams& p) {
  std::set<Rational> cuts;
  // Corners of g(n t): n t in Z/2.
  for (int k = 0; k <= 2 * p.n; ++k) cuts.insert(Rational(k, 2 * p.n));
  if (p.geometry == billiard::Geometry::FlatTorus) {
    for (int k = 0; k <= p.s; ++k) cuts.insert(Rational(k, p.s));
  } else {
    // Corners of g(s t + 1/4): s t + 1/4 in Z/2.
    for (int k = -1; k <= 2 * p.s + 1; ++k) {
      const Rational t = (Rational(k, 2) - Rational(1, 4)) / p.s;
      if (t >= Rational(0) && t <= Rational(1)) cuts.insert(t);
    }
  }
  std::vector<Rational> ts(cuts.begin(), cuts.end());
  std::vector<Segment> out;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Rational a = ts[i], b = ts[i + 1];
    Rational xa, xb;
    if (p.geometry == billiard::Geometry::FlatTorus) {
      // s t mod 1 on [a, b] does not wrap inside the segment; use the lift.
      const Rational base = Rational(floor(p.s * a));
      xa = p.s * a - base;
      xb = p.s * b - base;
    } else {
      xa = billiard::sawtooth(p.s * a + Rational(1, 4));
      xb = billiard::sawtooth(p.s * b + Rational(1, 4));
    }
    out.push_back({a, b, xa, billiard::sawtooth(p.n * a), xb, billiard::sawtooth(p.n * b)});
  }
  return out;
}

}  // namespace

std::vector<SegmentCrossing> polyline_crossings(const billiard::BilliardParams& p) {
  const auto segs = projected_segments(p);
  std::map<std::pair<Rational, Rational>, SegmentCrossing> found;
  const Rational zero(0), one(1);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& a = segs[i];
      const auto& b = segs[j];
      const Rational dax = a.x1 - a.x0, day = a.y1 - a.y0;
      const Rational dbx = b.x1 - b.x0, dby = b.y1 - b.y0;
      const Rational den = dax * dby - day * dbx;
      if (den == zero) continue;
      const Rational ex = b.x0 - a.x0, ey = b.y0 - a.y0;
      const Rational u = (ex * dby - ey * dbx) / den;
      const Rational v = (ex * day - ey * dax) / den;
      // Half-open in both parameters so shared breakpoints are not counted twice.
      if (u < zero || u >= one || v < zero || v >= one) continue;
      const Rational t = a.t0 + u * (a.t1 - a.t0);
      const Rational tp = b.t0 + v * (b.t1 - b.t0);
      if (t == tp) continue;
      SegmentCrossing c{t, tp, dax / (a.t1 - a.t0), day / (a.t1 - a.t0), dbx / (b.t1 - b.t0), dby / (b.t1 - b.t0)};
      if (tp < t) c = {tp, t, c.dx2, c.dy2, c.dx1, c.dy1};
      found.emplace(std::make_pair(c.t, c.t_prime), c);
    }
  }
  // Curve points at t = 0 and t = 1 coincide; dropped by the half-open rule.
  std::vector<SegmentCrossing> out;
  for (const auto& [key, c] : found) out.push_back(c);
  return out;
}

std::vector<std::pair<double, double>> star_chord_crossings(int s, int n, double beta) {
  const double alpha = s * beta / n;
  struct P {
    double x, y;
  };
  auto point = [](double angle) { return P{std::cos(angle), std::sin(angle)}; };
  std::vector<std::pair<double, double>> out;
  const int copies = static_cast<int>(std::ceil(2 * std::numbers::pi / beta)) + 1;
  auto wrap = [](double t) { return t - std::floor(t); };
  for (int a = 0; a < n; ++a) {
    const P a0 = point(a * alpha), a1 = point((a + 1) * alpha);
    for (int b = 0; b < n; ++b) {
      for (int j = -s - copies; j <= s + copies; ++j) {
        if (a == b && j == 0) continue;
        const double shift = j * beta;
        const P b0 = point(b * alpha + shift), b1 = point((b + 1) * alpha + shift);
        const double dax = a1.x - a0.x, day = a1.y - a0.y;
        const double dbx = b1.x - b0.x, dby = b1.y - b0.y;
        const double den = dax * dby - day * dbx;
        if (std::abs(den) < 1e-9) continue;
        const double ex = b0.x - a0.x, ey = b0.y - a0.y;
        const double u = (ex * dby - ey * dbx) / den;
        const double v = (ex * day - ey * dax) / den;
        if (u <= 1e-12 || u >= 1 - 1e-12 || v <= 1e-12 || v >= 1 - 1e-12) continue;
        // The plane only sees angles mod 2*pi; the slice needs the developed
        // angles to differ by exactly j*beta.
        auto local = [&](double w) { return std::atan2(w * std::sin(alpha), (1 - w) + w * std::cos(alpha)); };
        if (std::abs(b * alpha + local(v) + shift - (a * alpha + local(u))) > 1e-9) continue;
        double t = wrap((a + u) / n), tp = wrap((b + v) / n);
        if (tp < t) std::swap(t, tp);
        const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& q) {
          return std::abs(q.first - t) < 1e-9 && std::abs(q.second - tp) < 1e-9;
        });
        if (!dup) out.emplace_back(t, tp);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleDiagram polyline_diagram(const billiard::BilliardParams& p) {
  const auto crossings = polyline_crossings(p);
  const Rational phase = p.phase.value_or(Rational(0));
  struct Ev {
    Rational t;
    int label;
    bool over;
  };
  std::vector<Ev> events;
  OracleDiagram d;
  int label = 0;
  std::vector<int> raw_signs;
  for (const auto& c : crossings) {
    ++label;
    const Rational z1 = billiard::sawtooth(p.m * c.t + phase);
    const Rational z2 = billiard::sawtooth(p.m * c.t_prime + phase);
    if (z1 == z2) throw std::runtime_error("oracle: singular crossing");
    const bool first_over = z2 < z1;
    const Rational ox = first_over ? c.dx1 : c.dx2, oy = first_over ? c.dy1 : c.dy2;
    const Rational ux = first_over ? c.dx2 : c.dx1, uy = first_over ? c.dy2 : c.dy1;
    const Rational cross = ox * uy - oy * ux;
    raw_signs.push_back(cross > Rational(0) ? 1 : -1);
    events.push_back({c.t, label, first_over});
    events.push_back({c.t_prime, label, !first_over});
  }
  std::sort(events.begin(), events.end(), [](const Ev& a, const Ev& b) { return a.t < b.t; });
  // Relabel by first visit.
  std::map<int, int> relabel;
  for (const auto& e : events) {
    auto [it, inserted] = relabel.emplace(e.label, static_cast<int>(relabel.size()) + 1);
    if (inserted) d.signs.push_back(raw_signs[e.label - 1]);
    d.gauss.push_back(e.over ? it->second : -it->second);
  }
  return d;
}

}  // namespace oracle
