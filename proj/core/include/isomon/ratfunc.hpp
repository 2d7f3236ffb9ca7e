#pragma once

#include "isomon/unipoly.hpp"

namespace isomon {

// num/den with gcd 1 and monic den.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(int c) : RatFunc(Rational(c)) {}
  RatFunc(UniPoly p) : num_(std::move(p)), den_(1) {}
  RatFunc(UniPoly num, UniPoly den);

  // c / (l - a)^k
  static RatFunc pole(const Rational& c, const Rational& a, int k = 1);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // polynomial part of the division num/den
  UniPoly polynomial_part() const;
  UniPoly as_polynomial() const;  // NonDivisible if not polynomial

  Rational operator()(const Rational& x) const;
  RatFunc derivative() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "l") const;

 private:
  void normalize();
  UniPoly num_, den_;
};

}  // namespace isomon
