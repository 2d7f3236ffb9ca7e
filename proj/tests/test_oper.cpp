#include "isomon/errors.hpp"
#include "isomon/oper.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace isomon;
using isomon::testing::Gen;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// P2 coefficients summed directly with every index pair written out, r = 4
UniPoly ptilde2_r4_by_hand(const IrregularTimes& t) {
  Rational c1 = (-t(1) * t(5) + t(2) * t(4) - t(3) * t(3) + t(4) * t(2) - t(5) * t(1)) / 4;
  Rational c2 = (t(2) * t(6) - t(3) * t(5) + t(4) * t(4) - t(5) * t(3) + t(6) * t(2)) / 4;
  Rational c3 = (t(4) * t(6) - t(5) * t(5) + t(6) * t(4)) / 4;
  Rational c4 = (t(6) * t(6)) / 4;
  return UniPoly(RVec{0, c1, c2, c3, c4});
}

}  // namespace

TEST(Ptilde, ReducedTimesKillPtilde1) {
  Gen g(31);
  for (int r = 3; r <= 7; ++r) EXPECT_TRUE(ptilde1(g.canonical(r)).is_zero());
}

TEST(Ptilde, CanonicalR4) {
  Rational tau = q(7, 3);
  IrregularTimes t = canonical_times(4, RVec{tau});
  EXPECT_EQ(ptilde2(t), UniPoly(RVec{0, -2 * tau, 0, -1}));
}

TEST(Ptilde, CanonicalR3) { EXPECT_EQ(ptilde2(canonical_times(3, {})), UniPoly(RVec{0, -1})); }

TEST(Ptilde, GeneralR4MatchesHandExpansion) {
  Gen g(37);
  for (int i = 0; i < 20; ++i) {
    IrregularTimes t = g.times(4);
    EXPECT_EQ(ptilde2_bilinear(t, t), ptilde2_r4_by_hand(t));
    EXPECT_EQ(ptilde2(t), ptilde2_r4_by_hand(t) + UniPoly::monomial(t(6) / 2, 1));
  }
}

TEST(Ptilde, HbarTermScalesWithHbar) {
  Gen g(39);
  for (int r = 3; r <= 7; ++r) {
    IrregularTimes t = g.times(r);
    t.hbar = g.rational();
    UniPoly extra = ptilde2(t) - ptilde2_bilinear(t, t);
    EXPECT_EQ(extra, UniPoly::monomial(t.hbar * t(2 * r - 2) / 2, r - 3));
  }
}

TEST(Ptilde, BilinearFormIsSymmetric) {
  Gen g(41);
  for (int r = 3; r <= 7; ++r) {
    IrregularTimes a = g.times(r), b = g.times(r);
    EXPECT_EQ(ptilde2_bilinear(a, b), ptilde2_bilinear(b, a));
  }
}

TEST(Lagrange, Examples) {
  EXPECT_EQ(lagrange_interpolant(RVec{4}, RVec{9}), UniPoly(-9));
  EXPECT_EQ(lagrange_interpolant(RVec{0, 1}, RVec{1, 2}), UniPoly(RVec{-1, -1}));
}

TEST(Lagrange, InterpolatesMinusP) {
  Gen g(43);
  for (int i = 0; i < 50; ++i) {
    DarbouxChart c = g.chart(g.integer(1, 5));
    UniPoly Q = lagrange_interpolant(c.first, c.second);
    EXPECT_LE(Q.degree(), static_cast<int>(c.genus()) - 1);
    for (std::size_t j = 0; j < c.genus(); ++j) EXPECT_EQ(Q(c.first[j]) + c.second[j], 0);
  }
}

TEST(G0, Examples) {
  Gen g(47);
  EXPECT_EQ(g0(g.canonical(5), RVec{1, 2}), 0);
  IrregularTimes t{5, RVec(8), 1};
  t.at(6) = 6;
  t.at(7) = 1;
  EXPECT_EQ(g0(t, RVec{1, 2}), 3);
}

TEST(G0, FixesSubleadingCoefficientOfRowTwo) {
  Gen g(53);
  for (int r = 4; r <= 7; ++r) {
    IrregularTimes t = g.times(r);
    DarbouxChart c = g.chart(r - 3);
    UniPoly l11 = gauge_matrix(c, t).c;
    Rational sum_q = 0;
    for (const auto& x : c.first) sum_q += x;
    Rational q_top = -sum_q;  // coefficient of l^(g-1) in prod (l - q_j)
    EXPECT_EQ(-g0(t, c.first) - t(2 * r - 2) * q_top / 2, Rational(-t(2 * r - 4) / 2));
    EXPECT_EQ(l11.coeff(r - 3), Rational(-t(2 * r - 4) / 2));
  }
}

TEST(OperCoefficients, SingleNodeExample) {
  IrregularTimes t = canonical_times(4, RVec{3});
  EXPECT_EQ(oper_coeffs_H(qp_chart({1}, {2}), t), RVec{-3});
  EXPECT_TRUE(oper_coeffs_H(qp_chart({}, {}), canonical_times(3, {})).empty());
}

TEST(OperCoefficients, ResidualsVanish) {
  Gen g(59);
  for (int i = 0; i < 20; ++i) {
    IrregularTimes t = g.times(5);
    DarbouxChart c = g.chart(2);
    RVec H = oper_coeffs_H(c, t);
    UniPoly P1 = ptilde1(t), P2 = ptilde2(t);
    for (std::size_t k = 0; k < 2; ++k) {
      std::size_t o = 1 - k;
      Rational rhs = c.second[k] * c.second[k] - P1(c.first[k]) * c.second[k] + P2(c.first[k]) +
                     (c.second[o] - c.second[k]) / (c.first[k] - c.first[o]);
      EXPECT_EQ(H[0] + H[1] * c.first[k], rhs);
    }
  }
  EXPECT_THROW(oper_coeffs_H(qp_chart({1, 1}, {0, 0}), g.times(5)), CoincidentNodes);
}

TEST(BuildOper, SingleNodeExample) {
  OperData o = build_oper(qp_chart({1}, {2}), canonical_times(4, RVec{3}));
  RatFunc expected21 = RatFunc(UniPoly(RVec{-3, 6, 0, 1})) - RatFunc::pole(2, 1);
  EXPECT_EQ(o.L.c, expected21);
  EXPECT_EQ(o.L.d, RatFunc::pole(1, 1));
  EXPECT_EQ(o.L.a, RatFunc(0));
  EXPECT_EQ(o.L.b, RatFunc(1));
}

TEST(BuildOper, SimplePolesCarryHbar) {
  Gen g(61);
  IrregularTimes t = g.times(6);
  t.hbar = q(5, 2);
  DarbouxChart c = g.chart(3);
  OperData o = build_oper(c, t);
  RatFunc rest = o.L.d - RatFunc(ptilde1(t));
  for (const auto& x : c.first) rest -= RatFunc::pole(t.hbar, x);
  EXPECT_TRUE(rest.is_zero());
}

TEST(GaugeMatrix, Shape) {
  Gen g(67);
  auto G = gauge_matrix(qp_chart({}, {}), g.times(3));
  EXPECT_EQ(G.d, UniPoly(1));
  for (int r = 4; r <= 7; ++r) {
    DarbouxChart c = g.chart(r - 3);
    auto Gm = gauge_matrix(c, g.times(r));
    UniPoly det = Gm.det();
    EXPECT_EQ(det, UniPoly::from_roots(c.first));
    for (const auto& x : c.first) EXPECT_EQ(det(x), 0);
  }
}

TEST(GaugeBackward, ExactDivisionExample) {
  TwistedConnection lt = build_connection(qp_chart({1}, {2}), canonical_times(4, RVec{3}));
  UniPoly l11 = lt.m.a.as_polynomial(), l22 = lt.m.d.as_polynomial(), l12 = lt.m.b.as_polynomial();
  UniPoly det = lt.m.det().as_polynomial();
  UniPoly quotient = exact_div(l11 * l22 - det, l12);
  EXPECT_EQ(quotient, lt.m.c.as_polynomial());
  EXPECT_EQ(quotient.degree(), 2);
}

class GaugeRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(GaugeRoundTrip, RandomCharts) {
  const int r = GetParam();
  Gen g(1000 + static_cast<unsigned>(r));
  for (int i = 0; i < 20; ++i) {
    IrregularTimes t = g.times(r);
    DarbouxChart c = g.chart(r - 3);
    OperData o = build_oper(c, t);
    Mat2<UniPoly> G = gauge_matrix(c, t);
    TwistedConnection lt = gauge_backward(o, G);
    auto report = validate_normalization(lt);
    EXPECT_TRUE(report.ok) << report.block << " " << report.entry << " " << report.detail;
    EXPECT_EQ(gauge_forward(lt), o.L);
    EXPECT_EQ(lt.m.b.as_polynomial(), UniPoly::from_roots(c.first));
    EXPECT_EQ(lt.m.a.as_polynomial(), G.c);
    EXPECT_EQ(lt.m.trace().as_polynomial(), ptilde1(t));
    for (std::size_t j = 0; j < c.genus(); ++j) {
      Mat2<Rational> at{lt.m.a(c.first[j]), lt.m.b(c.first[j]), lt.m.c(c.first[j]), lt.m.d(c.first[j])};
      Mat2<Rational> shifted{c.second[j] - at.a, -at.b, -at.c, c.second[j] - at.d};
      EXPECT_EQ(shifted.det(), 0);
    }
    EXPECT_EQ(apparent_singularities(lt), c);
  }
}

INSTANTIATE_TEST_SUITE_P(Ranks, GaugeRoundTrip, ::testing::Values(3, 4, 5, 6));

TEST(GaugeForward, MatchesEntryFormulas) {
  Gen g(71);
  for (int r = 4; r <= 6; ++r) {
    TwistedConnection lt = build_connection(g.chart(r - 3), g.times(r));
    const auto& m = lt.m;
    RatFunc dlog = m.b.derivative() / m.b;
    RatFunc l21 = -m.det() + m.a.derivative() - m.a * dlog;
    RatFunc l22 = m.trace() + dlog;
    Mat2<RatFunc> L = gauge_forward(lt);
    EXPECT_EQ(L.c, l21);
    EXPECT_EQ(L.d, l22);
  }
}

TEST(GaugeForward, DeterminantRelation) {
  Gen g(73);
  for (int r = 4; r <= 6; ++r) {
    DarbouxChart c = g.chart(r - 3);
    IrregularTimes t = g.times(r);
    TwistedConnection lt = build_connection(c, t);
    Mat2<RatFunc> G = to_ratfunc(gauge_matrix(c, t));
    RatFunc det = G.det();
    Mat2<RatFunc> ginv = G.adjugate().map([&](const RatFunc& f) { return f / det; });
    Mat2<RatFunc> term = G * derivative(ginv);
    EXPECT_TRUE((lt.m.det() + gauge_forward(lt).c + term.c).is_zero());
  }
}

TEST(ApparentSingularities, FromPolynomialAlone) {
  Gen g(79);
  TwistedConnection lt = build_connection(g.chart(2), g.times(5));
  lt.chart.reset();
  DarbouxChart found = apparent_singularities(lt);
  EXPECT_EQ(found.first, rational_roots(lt.m.b.as_polynomial()));

  TwistedConnection fake{5, {RatFunc(0), RatFunc(UniPoly(RVec{2, -3, 1})), RatFunc(0), RatFunc(0)}, g.times(5), {}};
  EXPECT_EQ(apparent_singularities(fake).first, (RVec{1, 2}));
  fake.m.b = RatFunc(UniPoly(RVec{-2, 0, 1}));
  EXPECT_THROW(apparent_singularities(fake), IrrationalRoots);
}
