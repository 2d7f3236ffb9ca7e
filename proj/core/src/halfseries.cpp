#include "isomon/halfseries.hpp"

#include "isomon/errors.hpp"

#include <algorithm>

namespace isomon {

void HalfSeries::set(int e2, const Rational& c) {
  if (e2 < order2_) return;
  if (c == 0)
    t_.erase(e2);
  else
    t_[e2] = c;
}

HalfSeries HalfSeries::from_poly(const UniPoly& p, int order2) {
  HalfSeries s(order2);
  for (int k = 0; k <= p.degree(); ++k) s.set(2 * k, p.coeff(k));
  return s;
}

HalfSeries HalfSeries::monomial(const Rational& c, int e2, int order2) {
  HalfSeries s(order2);
  s.set(e2, c);
  return s;
}

int HalfSeries::leading2() const {
  if (t_.empty()) throw InvalidInput("leading term of zero series");
  return t_.rbegin()->first;
}

Rational HalfSeries::coeff2(int e2) const {
  if (e2 < order2_) throw Truncated("exponent " + std::to_string(e2) + "/2 below order");
  auto it = t_.find(e2);
  return it == t_.end() ? Rational(0) : it->second;
}

HalfSeries HalfSeries::truncated(int order2) const {
  HalfSeries s(std::max(order2, order2_));
  for (const auto& [e, c] : t_) s.set(e, c);
  return s;
}

HalfSeries HalfSeries::times_power(int e2) const {
  HalfSeries s(order2_ + e2);
  for (const auto& [e, c] : t_) s.t_[e + e2] = c;
  return s;
}

HalfSeries& HalfSeries::operator+=(const HalfSeries& o) {
  order2_ = std::max(order2_, o.order2_);
  std::erase_if(t_, [&](const auto& kv) { return kv.first < order2_; });
  for (const auto& [e, c] : o.t_)
    if (e >= order2_) set(e, coeff2(e) + c);
  return *this;
}

HalfSeries& HalfSeries::operator-=(const HalfSeries& o) { return *this += -o; }

HalfSeries& HalfSeries::operator*=(const Rational& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

HalfSeries operator*(const HalfSeries& a, const HalfSeries& b) {
  if (a.is_zero() || b.is_zero()) return HalfSeries(std::max(a.order2_, b.order2_));
  int order = std::min(a.order2_ + b.leading2(), b.order2_ + a.leading2());
  HalfSeries r(order);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      int e = ea + eb;
      if (e < order) continue;
      r.t_[e] += ca * cb;
    }
  std::erase_if(r.t_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

bool HalfSeries::same_terms(const HalfSeries& o, int down_to2) const {
  for (const auto& [e, c] : t_)
    if (e >= down_to2 && o.coeff2(e) != c) return false;
  for (const auto& [e, c] : o.t_)
    if (e >= down_to2 && coeff2(e) != c) return false;
  return true;
}

std::string HalfSeries::to_string(const std::string& var) const {
  if (t_.empty()) return "O(" + var + "^" + std::to_string(order2_) + "/2)";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string ex = e % 2 == 0 ? std::to_string(e / 2) : "(" + std::to_string(e) + "/2)";
    out += isomon::to_string(abs(c));
    if (e != 0) out += "*" + var + "^" + ex;
  }
  return out;
}

HalfSeries series_sqrt(const HalfSeries& s, int order2) {
  int lead = s.leading2();
  if (lead % 2 != 0) throw NonSquareLeading();
  auto r0 = rational_sqrt(s.coeff2(lead));
  if (!r0) throw NonSquareLeading();
  int top = lead / 2;
  if (order2 > top) order2 = top;
  int steps = top - order2;
  if (lead - steps < s.order2())
    throw Truncated("square root needs input down to " + std::to_string(lead - steps) + "/2");
  std::vector<Rational> r(static_cast<std::size_t>(steps) + 1);
  r[0] = *r0;
  Rational inv = 1 / (2 * r[0]);
  for (int m = 1; m <= steps; ++m) {
    Rational acc = s.coeff2(lead - m);
    for (int i = 1; i < m; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(m - i)];
    r[static_cast<std::size_t>(m)] = acc * inv;
  }
  HalfSeries out(order2);
  for (int m = 0; m <= steps; ++m)
    if (r[static_cast<std::size_t>(m)] != 0) out += HalfSeries::monomial(r[static_cast<std::size_t>(m)], top - m, order2);
  return out;
}

Rational residue_at_infinity(const HalfSeries& s) { return -2 * s.coeff2(-2); }

}  // namespace isomon
