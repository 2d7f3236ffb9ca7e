#pragma once

#include "isomon/unipoly.hpp"

#include <map>

namespace isomon {

// Truncated series in l^(1/2) around infinity. Exponents are stored doubled:
// key e2 stands for l^(e2/2). Terms with e2 < order2() are unknown.
class HalfSeries {
 public:
  explicit HalfSeries(int order2) : order2_(order2) {}
  static HalfSeries from_poly(const UniPoly& p, int order2);
  static HalfSeries monomial(const Rational& c, int e2, int order2);

  int order2() const { return order2_; }
  const std::map<int, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  // highest stored doubled exponent; throws on zero series
  int leading2() const;
  Rational coeff2(int e2) const;

  HalfSeries truncated(int order2) const;
  HalfSeries times_power(int e2) const;  // multiply by l^(e2/2)

  HalfSeries& operator+=(const HalfSeries& o);
  HalfSeries& operator-=(const HalfSeries& o);
  HalfSeries& operator*=(const Rational& s);
  friend HalfSeries operator+(HalfSeries a, const HalfSeries& b) { return a += b; }
  friend HalfSeries operator-(HalfSeries a, const HalfSeries& b) { return a -= b; }
  friend HalfSeries operator*(HalfSeries a, const Rational& s) { return a *= s; }
  friend HalfSeries operator*(const Rational& s, HalfSeries a) { return a *= s; }
  friend HalfSeries operator*(const HalfSeries& a, const HalfSeries& b);
  friend HalfSeries operator-(HalfSeries a) { return a *= Rational(-1); }
  // same known terms, truncation ignored
  bool same_terms(const HalfSeries& o, int down_to2) const;

  std::string to_string(const std::string& var = "l") const;

 private:
  void set(int e2, const Rational& c);
  std::map<int, Rational> t_;
  int order2_;
};

// r with r*r = s down to doubled exponent order2 for r
HalfSeries series_sqrt(const HalfSeries& s, int order2);
// coefficient of z^-1 in the pullback of s dl under l = z^-2
Rational residue_at_infinity(const HalfSeries& s);

}  // namespace isomon
