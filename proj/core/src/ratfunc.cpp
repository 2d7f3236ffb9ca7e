#include "isomon/ratfunc.hpp"

#include "isomon/errors.hpp"

namespace isomon {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidInput("zero denominator");
  normalize();
}

RatFunc RatFunc::pole(const Rational& c, const Rational& a, int k) {
  UniPoly d(1);
  UniPoly lin(RVec{-a, 1});
  for (int i = 0; i < k; ++i) d *= lin;
  return RatFunc(UniPoly(c), d);
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

UniPoly RatFunc::polynomial_part() const { return divmod(num_, den_).first; }

UniPoly RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw NonDivisible(to_string());
  return num_;
}

Rational RatFunc::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw InvalidInput("evaluation at a pole");
  return num_(x) / d;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw InvalidInput("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace isomon
