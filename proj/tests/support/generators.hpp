#pragma once

#include "isomon/chart.hpp"
#include "isomon/connection.hpp"
#include "isomon/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace isomon::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 9, int max_den = 5) {
    Rational r(integer(-span, span), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero(int span = 9, int max_den = 5) {
    for (;;) {
      Rational r = rational(span, max_den);
      if (r != 0) return r;
    }
  }

  RVec vec(std::size_t n, int span = 9, int max_den = 5) {
    RVec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(span, max_den));
    return v;
  }

  RVec distinct(std::size_t n, int span = 9, int max_den = 4) {
    RVec v;
    while (v.size() < n) {
      Rational r = rational(span, max_den);
      if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
    }
    return v;
  }

  IrregularTimes times(int r_inf, int span = 6, int max_den = 3) {
    IrregularTimes t{r_inf, vec(static_cast<std::size_t>(2 * r_inf - 2), span, max_den), 1};
    t.at(2 * r_inf - 3) = nonzero(span, max_den);
    return t;
  }

  IrregularTimes canonical(int r_inf, int span = 6, int max_den = 3) {
    return canonical_times(r_inf, vec(static_cast<std::size_t>(r_inf - 3), span, max_den));
  }

  DarbouxChart chart(int genus, int span = 6, int max_den = 3) {
    return qp_chart(distinct(static_cast<std::size_t>(genus), span, max_den),
                    vec(static_cast<std::size_t>(genus), span, max_den));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace isomon::testing
