#include "isomon/oper.hpp"

#include "isomon/errors.hpp"
#include "isomon/solvers.hpp"

namespace isomon {

UniPoly ptilde1(const IrregularTimes& times) {
  RVec c;
  for (int j = 0; j <= times.r_inf - 2; ++j) c.push_back(-times(2 * j + 2));
  return UniPoly(c);
}

UniPoly ptilde2_bilinear(const IrregularTimes& a, const IrregularTimes& b) {
  const int r = a.r_inf;
  RVec c(static_cast<std::size_t>(2 * r - 3));
  for (int k = r - 2; k <= 2 * r - 4; ++k) {
    Rational s = 0;
    for (int j = 2 * k - 2 * r + 6; j <= 2 * r - 2; ++j) {
      Rational term = a(j) * b(2 * k - j + 4);
      s += j % 2 == 0 ? term : Rational(-term);
    }
    c[static_cast<std::size_t>(k)] = s / 4;
  }
  Rational s = 0;
  for (int j = 1; j <= 2 * r - 3; ++j) {
    Rational term = a(j) * b(2 * r - j - 2);
    s += j % 2 == 0 ? term : Rational(-term);
  }
  c[static_cast<std::size_t>(r - 3)] = s / 4;
  return UniPoly(c);
}

UniPoly ptilde2_hbar_term(const IrregularTimes& times, const Rational& hbar) {
  const int r = times.r_inf;
  return UniPoly::monomial(hbar * times(2 * r - 2) / 2, r - 3);
}

UniPoly ptilde2(const IrregularTimes& times) {
  return ptilde2_bilinear(times, times) + ptilde2_hbar_term(times, times.hbar);
}

UniPoly lagrange_interpolant(const RVec& q, const RVec& p) {
  DarbouxChart{ChartKind::qp, q, p}.validate();
  UniPoly out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    UniPoly basis(1);
    Rational scale = 1;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j == i) continue;
      basis *= UniPoly(RVec{-q[j], 1});
      scale *= q[i] - q[j];
    }
    out -= basis * Rational(p[i] / scale);
  }
  return out;
}

Rational g0(const IrregularTimes& times, const RVec& q) {
  Rational sum = 0;
  for (const auto& x : q) sum += x;
  const int r = times.r_inf;
  return (times(2 * r - 4) + times(2 * r - 2) * sum) / 2;
}

RVec oper_rhs(const DarbouxChart& chart, const IrregularTimes& times) {
  const RVec& q = chart.first;
  const RVec& p = chart.second;
  UniPoly P1 = ptilde1(times), P2 = ptilde2(times);
  RVec rhs;
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational v = p[i] * p[i] - P1(q[i]) * p[i] + P2(q[i]);
    Rational s = 0;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (j != i) s += (p[j] - p[i]) / (q[i] - q[j]);
    rhs.push_back(v + times.hbar * s);
  }
  return rhs;
}

RVec oper_coeffs_H(const DarbouxChart& chart, const IrregularTimes& times) {
  chart.validate();
  return vandermonde_solve(chart.first, oper_rhs(chart, times), true);
}

OperData build_oper(const DarbouxChart& chart, const IrregularTimes& times) {
  times.validate();
  chart.validate();
  if (static_cast<int>(chart.genus()) != times.genus()) throw InvalidInput("chart size must equal g = r_inf - 3");
  OperData o;
  o.chart = chart;
  o.times = times;
  o.H = oper_coeffs_H(chart, times);
  o.ptilde1 = ptilde1(times);
  o.ptilde2 = ptilde2(times);
  o.lagrange = lagrange_interpolant(chart.first, chart.second);
  o.g0 = g0(times, chart.first);
  RatFunc l21 = RatFunc(UniPoly(o.H) - o.ptilde2);
  RatFunc l22 = RatFunc(o.ptilde1);
  for (std::size_t j = 0; j < chart.genus(); ++j) {
    l21 -= RatFunc::pole(chart.second[j], chart.first[j]);
    l22 += RatFunc::pole(times.hbar, chart.first[j]);
  }
  o.L = {RatFunc(0), RatFunc(1), l21, l22};
  return o;
}

Mat2<UniPoly> gauge_matrix(const DarbouxChart& chart, const IrregularTimes& times) {
  const int r = times.r_inf;
  UniPoly pi = UniPoly::from_roots(chart.first);
  UniPoly lin(RVec{g0(times, chart.first), Rational(times(2 * r - 2) / 2)});
  UniPoly row21 = -lagrange_interpolant(chart.first, chart.second) - lin * pi;
  return {UniPoly(1), UniPoly(), row21, pi};
}

Mat2<UniPoly> gauge_matrix(const TwistedConnection& c) {
  return {UniPoly(1), UniPoly(), c.m.a.as_polynomial(), c.m.b.as_polynomial()};
}

Mat2<RatFunc> to_ratfunc(const Mat2<UniPoly>& m) {
  return {RatFunc(m.a), RatFunc(m.b), RatFunc(m.c), RatFunc(m.d)};
}

Mat2<RatFunc> derivative(const Mat2<RatFunc>& m) {
  return m.map([](const RatFunc& f) { return f.derivative(); });
}

TwistedConnection gauge_backward(const OperData& oper, const Mat2<UniPoly>& G) {
  Mat2<RatFunc> g = to_ratfunc(G);
  RatFunc det = g.det();
  Mat2<RatFunc> inv = g.adjugate().map([&](const RatFunc& f) { return f / det; });
  Mat2<RatFunc> lt = inv * oper.L * g - inv * derivative(g);
  TwistedConnection c{oper.times.r_inf, lt, oper.times, oper.chart};
  for (const RatFunc* e : {&lt.a, &lt.b, &lt.c, &lt.d})
    if (!e->is_polynomial()) throw NonDivisible(e->to_string());
  return c;
}

Mat2<RatFunc> gauge_forward(const TwistedConnection& c) {
  Mat2<RatFunc> g = to_ratfunc(gauge_matrix(c));
  RatFunc det = g.det();
  Mat2<RatFunc> inv = g.adjugate().map([&](const RatFunc& f) { return f / det; });
  return g * c.m * inv + derivative(g) * inv;
}

DarbouxChart apparent_singularities(const TwistedConnection& c) {
  UniPoly l12 = c.m.b.as_polynomial();
  RVec q;
  if (c.chart && c.chart->kind == ChartKind::qp) {
    q = c.chart->first;
    for (const auto& x : q)
      if (l12(x) != 0) throw InvalidInput("chart provenance does not match L12");
    if (static_cast<int>(q.size()) != l12.degree()) throw InvalidInput("chart provenance does not match L12");
  } else {
    q = rational_roots(l12);
  }
  DarbouxChart out{ChartKind::qp, q, {}};
  for (const auto& x : q) out.second.push_back(c.m.a(x));
  out.validate();
  return out;
}

TwistedConnection build_connection(const DarbouxChart& chart, const IrregularTimes& times) {
  OperData o = build_oper(chart, times);
  return gauge_backward(o, gauge_matrix(chart, times));
}

}  // namespace isomon
