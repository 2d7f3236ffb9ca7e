#include "isomon/deformation.hpp"
#include "isomon/errors.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace isomon;
using isomon::testing::Gen;

namespace {

DeformationVector random_alpha(Gen& g, int r) { return {g.vec(static_cast<std::size_t>(2 * r - 2))}; }

// on the canonical slice at r = 4, t_1 = 2 tau_1
DeformationVector t1_direction() { return DeformationVector::unit(4, 1); }

bool is_zero(const Mat2<RatFunc>& m) { return m.a.is_zero() && m.b.is_zero() && m.c.is_zero() && m.d.is_zero(); }

}  // namespace

TEST(Nu, CanonicalLeadingDirection) {
  Gen g(201);
  for (int r = 3; r <= 7; ++r) {
    RVec nu = nu_coefficients(DeformationVector::unit(r, 2 * r - 3), g.canonical(r));
    ASSERT_EQ(nu.size(), static_cast<std::size_t>(r - 1));
    EXPECT_EQ(nu[0], Rational(1, 2 * r - 3));
  }
}

TEST(Nu, ZeroDirection) {
  Gen g(203);
  RVec nu = nu_coefficients(DeformationVector{RVec(8)}, g.times(5));
  for (const auto& x : nu) EXPECT_EQ(x, 0);
}

TEST(Nu, SolvesToeplitzSystem) {
  Gen g(205);
  for (int r = 3; r <= 7; ++r) {
    IrregularTimes t = g.times(r);
    DeformationVector a = random_alpha(g, r);
    RVec nu = nu_coefficients(a, t);
    for (int i = 0; i < r - 1; ++i) {
      Rational row = 0;
      for (int j = 0; j <= i; ++j) row += t(2 * r - 3 - 2 * (i - j)) * nu[static_cast<std::size_t>(j)];
      int k = 2 * r - 3 - 2 * i;
      EXPECT_EQ(row, 2 * a(k) / k);
    }
  }
}

TEST(C, ReducedTimesOddDirections) {
  Gen g(207);
  for (int r = 3; r <= 7; ++r) {
    DeformationVector a{RVec(static_cast<std::size_t>(2 * r - 2))};
    for (int k = 1; k <= 2 * r - 3; k += 2) a.alpha[static_cast<std::size_t>(k - 1)] = g.rational();
    RVec c = c_coefficients(a, g.canonical(r));
    for (const auto& x : c) EXPECT_EQ(x, 0);
  }
}

TEST(C, TopRowByHand) {
  Gen g(209);
  for (int r = 3; r <= 6; ++r) {
    IrregularTimes t = g.times(r);
    DeformationVector a = random_alpha(g, r);
    RVec c = c_coefficients(a, t);
    EXPECT_EQ(c[0], 0);
    Rational top = a(2 * r - 3) / (2 * r - 3) * t(2 * r - 2) - a(2 * r - 2) / (2 * r - 2) * t(2 * r - 3);
    EXPECT_EQ(t(2 * r - 3) * c[static_cast<std::size_t>(r - 1)], top);
  }
}

TEST(Mu, Examples) {
  auto [mu1, rho1] = mu_coefficients(RVec{5, 7, 3}, qp_chart({2}, {4}));
  EXPECT_EQ(mu1, RVec{3});
  EXPECT_EQ(rho1, RVec{-12});
  auto [mu2, rho2] = mu_coefficients(RVec{0, 0, 5, 2}, qp_chart({0, 1}, {1, 1}));
  EXPECT_EQ(mu2, (RVec{3, 2}));
  EXPECT_THROW(mu_coefficients(RVec{0, 0, 1, 1}, qp_chart({1, 1}, {0, 0})), CoincidentNodes);
}

TEST(AuxMatrix, ShapeAndReducedExample) {
  AuxMatrix aux = auxiliary_matrix(t1_direction(), qp_chart({1}, {2}), canonical_times(4, RVec{3}));
  EXPECT_EQ(aux.a12, RatFunc::pole(1, 1));
  EXPECT_EQ(aux.a11, RatFunc::pole(-2, 1));
  Gen g(211);
  for (int r = 4; r <= 6; ++r) {
    DarbouxChart c = g.chart(r - 3);
    AuxMatrix a = auxiliary_matrix(random_alpha(g, r), c, g.times(r));
    EXPECT_LE(a.a12.polynomial_part().degree(), 1);
    EXPECT_EQ(a.a12.polynomial_part().coeff(1), a.nu[0]);
    EXPECT_EQ(a.a12.polynomial_part().coeff(0), a.nu[1]);
    for (std::size_t j = 0; j < c.genus(); ++j) EXPECT_EQ(a.rho[j] + a.mu[j] * c.second[j], 0);
  }
  AuxMatrix zero = auxiliary_matrix(DeformationVector{RVec(8)}, g.chart(2), g.times(5));
  EXPECT_TRUE(zero.a11.is_zero());
  EXPECT_TRUE(zero.a12.is_zero());
}

TEST(Hamiltonian, PainleveOneExample) {
  DeformationVector a = t1_direction();
  IrregularTimes t = canonical_times(4, RVec{3});
  EXPECT_EQ(general_hamiltonian(a, qp_chart({1}, {2}), t), -3);
  Gen g(213);
  for (int i = 0; i < 20; ++i) {
    Rational tau = g.rational(), q = g.rational(), p = g.rational();
    Rational expected = p * p - q * q * q - 2 * tau * q;
    EXPECT_EQ(general_hamiltonian(a, qp_chart({q}, {p}), canonical_times(4, RVec{tau})), expected);
    Gradients grad = hamiltonian_gradients(a, qp_chart({q}, {p}), canonical_times(4, RVec{tau}));
    EXPECT_EQ(grad.dp[0], 2 * p);
    EXPECT_EQ(grad.dq[0], -3 * q * q - 2 * tau);
  }
}

TEST(Hamiltonian, TauDirectionIsTwiceT1Direction) {
  Gen g(214);
  DeformationVector tau{RVec{2, 0, 0, 0, 0, 0}};
  for (int i = 0; i < 10; ++i) {
    DarbouxChart c = g.chart(1);
    IrregularTimes t = g.canonical(4);
    EXPECT_EQ(general_hamiltonian(tau, c, t), 2 * oper_coeffs_H(c, t)[0]);
  }
}

TEST(Hamiltonian, ZeroDirection) {
  Gen g(215);
  DarbouxChart c = g.chart(2);
  IrregularTimes t = g.times(5);
  DeformationVector zero{RVec(8)};
  EXPECT_EQ(general_hamiltonian(zero, c, t), 0);
  Gradients grad = hamiltonian_gradients(zero, c, t);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_EQ(grad.dq[j], 0);
    EXPECT_EQ(grad.dp[j], 0);
  }
}

TEST(Hamiltonian, LinearInAlpha) {
  Gen g(217);
  for (int r = 4; r <= 6; ++r)
    for (int i = 0; i < 5; ++i) {
      IrregularTimes t = g.times(r);
      DarbouxChart c = g.chart(r - 3);
      DeformationVector a1 = random_alpha(g, r), a2 = random_alpha(g, r);
      Rational s1 = g.rational(), s2 = g.rational();
      DeformationVector mix{RVec(a1.alpha.size())};
      for (std::size_t k = 0; k < mix.alpha.size(); ++k) mix.alpha[k] = s1 * a1.alpha[k] + s2 * a2.alpha[k];
      EXPECT_EQ(general_hamiltonian(mix, c, t), s1 * general_hamiltonian(a1, c, t) + s2 * general_hamiltonian(a2, c, t));
      RVec n1 = nu_coefficients(a1, t), n2 = nu_coefficients(a2, t), nm = nu_coefficients(mix, t);
      RVec c1 = c_coefficients(a1, t), c2 = c_coefficients(a2, t), cm = c_coefficients(mix, t);
      for (std::size_t k = 0; k < nm.size(); ++k) EXPECT_EQ(nm[k], s1 * n1[k] + s2 * n2[k]);
      for (std::size_t k = 0; k < cm.size(); ++k) EXPECT_EQ(cm[k], s1 * c1[k] + s2 * c2[k]);
      AuxMatrix x1 = auxiliary_matrix(a1, c, t), x2 = auxiliary_matrix(a2, c, t), xm = auxiliary_matrix(mix, c, t);
      for (std::size_t j = 0; j < c.genus(); ++j) {
        EXPECT_EQ(xm.mu[j], s1 * x1.mu[j] + s2 * x2.mu[j]);
        EXPECT_EQ(xm.rho[j], s1 * x1.rho[j] + s2 * x2.rho[j]);
      }
    }
}

TEST(Hamiltonian, GradientsMatchFiniteDifferences) {
  Gen g(219);
  const Rational h(1, 1000000);
  for (int r = 4; r <= 6; ++r)
    for (int i = 0; i < 5; ++i) {
      IrregularTimes t = g.times(r);
      DarbouxChart c = g.chart(r - 3);
      DeformationVector a = random_alpha(g, r);
      Gradients grad = hamiltonian_gradients(a, c, t);
      for (std::size_t j = 0; j < c.genus(); ++j) {
        for (int which = 0; which < 2; ++which) {
          DarbouxChart plus = c, minus = c;
          RVec& vp = which == 0 ? plus.first : plus.second;
          RVec& vm = which == 0 ? minus.first : minus.second;
          vp[j] += h;
          vm[j] -= h;
          double fd = to_double((general_hamiltonian(a, plus, t) - general_hamiltonian(a, minus, t)) / (2 * h));
          double exact = to_double(which == 0 ? grad.dq[j] : grad.dp[j]);
          EXPECT_NEAR(fd, exact, 1e-6 * (1 + std::abs(exact)));
        }
      }
    }
}

TEST(OperJacobian, MatchesExactDifferenceQuotientLimit) {
  // H is rational in (q, p); compare with a symmetric difference of step 1e-8 in exact arithmetic
  Gen g(221);
  const Rational h(1, 100000000);
  IrregularTimes t = g.times(6);
  DarbouxChart c = g.chart(3);
  OperJacobian jac = oper_jacobian(c, t);
  for (std::size_t j = 0; j < 3; ++j) {
    DarbouxChart plus = c, minus = c;
    plus.first[j] += h;
    minus.first[j] -= h;
    RVec hp = oper_coeffs_H(plus, t), hm = oper_coeffs_H(minus, t);
    for (std::size_t k = 0; k < 3; ++k) {
      double fd = to_double((hp[k] - hm[k]) / (2 * h));
      EXPECT_NEAR(fd, to_double(jac.dq[k][j]), 1e-6 * (1 + std::abs(to_double(jac.dq[k][j]))));
    }
  }
}

TEST(ZeroCurvature, ZeroDirection) {
  Gen g(223);
  EXPECT_TRUE(is_zero(zero_curvature_residual(DeformationVector{RVec(6)}, g.chart(1), g.times(4))));
}

TEST(ZeroCurvature, PainleveOneDirection) {
  Gen g(225);
  for (int i = 0; i < 10; ++i)
    EXPECT_TRUE(is_zero(zero_curvature_residual(t1_direction(), g.chart(1), g.canonical(4))));
}

class ZeroCurvatureBasis : public ::testing::TestWithParam<int> {};

TEST_P(ZeroCurvatureBasis, EveryDirectionVanishes) {
  const int r = GetParam();
  Gen g(3000 + static_cast<unsigned>(r));
  for (int i = 0; i < 20; ++i) {
    IrregularTimes t = g.times(r);
    DarbouxChart c = g.chart(r - 3);
    for (int k = 1; k <= 2 * r - 2; ++k) {
      Mat2<RatFunc> res = zero_curvature_residual(DeformationVector::unit(r, k), c, t);
      EXPECT_TRUE(is_zero(res)) << "r=" << r << " k=" << k << " residual(2,1)=" << res.c.to_string()
                                << " residual(2,2)=" << res.d.to_string();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Ranks, ZeroCurvatureBasis, ::testing::Values(4, 5));
