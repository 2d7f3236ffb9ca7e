#pragma once

#include "isomon/rational.hpp"

#include <span>
#include <string>
#include <utility>

namespace isomon {

// Dense polynomial in l, index = power.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);
  UniPoly(int c) : UniPoly(Rational(c)) {}
  explicit UniPoly(RVec coeffs);

  static UniPoly monomial(const Rational& c, int power);
  static UniPoly x() { return monomial(1, 1); }
  // prod (l - r_i)
  static UniPoly from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RVec& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly shifted(int k) const;  // times l^k, k >= 0

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "l") const;

 private:
  void trim();
  RVec c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// quotient when b divides a, NonDivisible otherwise
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
// monic gcd, zero when both are zero
UniPoly gcd(UniPoly a, UniPoly b);
// distinct rational roots with multiplicity; IrrationalRoots if it does not split
RVec rational_roots(const UniPoly& p);

}  // namespace isomon
