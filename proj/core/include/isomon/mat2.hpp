#pragma once

#include <string>

namespace isomon {

template <class T>
struct Mat2 {
  T a{}, b{}, c{}, d{};  // [[a, b], [c, d]]

  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  // inverse times det: [[d, -b], [-c, a]]
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  template <class F>
  Mat2 map(F f) const {
    return {f(a), f(b), f(c), f(d)};
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const T& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

template <class T>
Mat2<T> commutator(const Mat2<T>& x, const Mat2<T>& y) {
  return x * y - y * x;
}

}  // namespace isomon
