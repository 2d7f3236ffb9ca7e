#include "isomon/deformation.hpp"

#include "isomon/errors.hpp"
#include "isomon/solvers.hpp"

namespace isomon {

Rational DeformationVector::operator()(int k) const {
  if (k < 1 || k > static_cast<int>(alpha.size())) return 0;
  return alpha[static_cast<std::size_t>(k - 1)];
}

DeformationVector DeformationVector::unit(int r_inf, int k) {
  DeformationVector v{RVec(static_cast<std::size_t>(2 * r_inf - 2))};
  if (k < 1 || k > 2 * r_inf - 2) throw InvalidInput("basis index out of range");
  v.alpha[static_cast<std::size_t>(k - 1)] = 1;
  return v;
}

IrregularTimes DeformationVector::as_times(int r_inf) const { return IrregularTimes{r_inf, alpha, 1}; }

namespace {

void check_length(const DeformationVector& a, const IrregularTimes& t) {
  if (static_cast<int>(a.alpha.size()) != t.count())
    throw InvalidInput("deformation vector must have 2r_inf - 2 components");
}

Rational qpow(const Rational& x, int k) { return pow(x, k); }

}  // namespace

RVec toeplitz_column(const IrregularTimes& times) {
  RVec col;
  for (int k = 2 * times.r_inf - 3; k >= 1; k -= 2) col.push_back(times(k));
  return col;
}

RVec nu_coefficients(const DeformationVector& alpha, const IrregularTimes& times) {
  check_length(alpha, times);
  RVec rhs;
  for (int k = 2 * times.r_inf - 3; k >= 1; k -= 2) rhs.push_back(2 * alpha(k) / k);
  return toeplitz_lower_solve(toeplitz_column(times), rhs);
}

RVec c_coefficients(const DeformationVector& alpha, const IrregularTimes& times) {
  check_length(alpha, times);
  const int r = times.r_inf;
  auto a_over = [&](int i) -> Rational { return i < 1 ? Rational(0) : Rational(alpha(i) / i); };
  RVec rhs;
  for (int k = r - 1; k >= 1; --k) {
    Rational s = 0;
    for (int m = k; m <= r - 1; ++m)
      s += a_over(2 * k + 2 * r - 2 * m - 3) * times(2 * m) - a_over(2 * k + 2 * r - 2 * m - 2) * times(2 * m - 1);
    rhs.push_back(s);
  }
  RVec top_down = toeplitz_lower_solve(toeplitz_column(times), rhs);
  RVec c(static_cast<std::size_t>(r));
  for (int k = 1; k <= r - 1; ++k) c[static_cast<std::size_t>(k)] = top_down[static_cast<std::size_t>(r - 1 - k)];
  return c;
}

std::pair<RVec, RVec> mu_coefficients(const RVec& nu, const DarbouxChart& chart) {
  chart.validate();
  const std::size_t g = chart.genus();
  if (nu.size() != g + 2) throw InvalidInput("nu must hold nu_{-1}..nu_{g}");
  RVec rhs(nu.begin() + 2, nu.end());
  RVec mu = vandermonde_solve(chart.first, rhs, false);
  RVec rho;
  for (std::size_t j = 0; j < g; ++j) rho.push_back(-mu[j] * chart.second[j]);
  return {mu, rho};
}

AuxMatrix auxiliary_matrix(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times) {
  AuxMatrix aux;
  aux.nu = nu_coefficients(alpha, times);
  aux.c = c_coefficients(alpha, times);
  std::tie(aux.mu, aux.rho) = mu_coefficients(aux.nu, chart);
  aux.a11 = RatFunc(UniPoly(aux.c));
  aux.a12 = RatFunc(UniPoly(RVec{aux.nu[1], aux.nu[0]}));
  for (std::size_t j = 0; j < chart.genus(); ++j) {
    aux.a11 += RatFunc::pole(aux.rho[j], chart.first[j]);
    aux.a12 += RatFunc::pole(aux.mu[j], chart.first[j]);
  }
  return aux;
}

Mat2<RatFunc> auxiliary_full(const AuxMatrix& aux, const Mat2<RatFunc>& L) {
  RatFunc a21 = aux.a11.derivative() + aux.a12 * L.c;
  RatFunc a22 = aux.a11 + aux.a12.derivative() + aux.a12 * L.d;
  return {aux.a11, aux.a12, a21, a22};
}

Rational general_hamiltonian(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times) {
  RVec H = oper_coeffs_H(chart, times);
  RVec nu = nu_coefficients(alpha, times);
  RVec c = c_coefficients(alpha, times);
  const Rational& hbar = times.hbar;
  Rational ham = 0;
  for (std::size_t k = 0; k < H.size(); ++k) ham += nu[k + 2] * H[k];
  for (std::size_t j = 0; j < chart.genus(); ++j) {
    const Rational& q = chart.first[j];
    const Rational& p = chart.second[j];
    for (int k = 1; k < static_cast<int>(c.size()); ++k) ham -= hbar * c[static_cast<std::size_t>(k)] * qpow(q, k);
    ham -= hbar * nu[1] * p + hbar * nu[0] * q * p;
  }
  return ham;
}

namespace {

// solves V^T x = column for each column of `cols` ([row][col] layout)
RMatrix transposed_vandermonde_columns(const RVec& q, const RMatrix& cols) {
  const std::size_t g = q.size();
  RMatrix out(g, RVec(g));
  for (std::size_t j = 0; j < g; ++j) {
    RVec col;
    for (std::size_t i = 0; i < g; ++i) col.push_back(cols[i][j]);
    RVec x = vandermonde_solve(q, col, true);
    for (std::size_t k = 0; k < g; ++k) out[k][j] = x[k];
  }
  return out;
}

}  // namespace

OperJacobian oper_jacobian(const DarbouxChart& chart, const IrregularTimes& times) {
  chart.validate();
  const RVec& q = chart.first;
  const RVec& p = chart.second;
  const std::size_t g = q.size();
  const Rational& hbar = times.hbar;
  UniPoly H(oper_coeffs_H(chart, times));
  UniPoly P1 = ptilde1(times), P2 = ptilde2(times);
  UniPoly dH = H.derivative(), dP1 = P1.derivative(), dP2 = P2.derivative();

  RMatrix rq(g, RVec(g)), rp(g, RVec(g));  // d rhs_i / d x_j
  for (std::size_t i = 0; i < g; ++i) {
    rp[i][i] = 2 * p[i] - P1(q[i]);
    rq[i][i] = -dP1(q[i]) * p[i] + dP2(q[i]) - dH(q[i]);
    for (std::size_t j = 0; j < g; ++j) {
      if (j == i) continue;
      Rational d = q[i] - q[j];
      rp[i][i] -= hbar / d;
      rp[i][j] = hbar / d;
      Rational cross = hbar * (p[j] - p[i]) / (d * d);
      rq[i][i] -= cross;
      rq[i][j] = cross;
    }
  }
  return {transposed_vandermonde_columns(q, rq), transposed_vandermonde_columns(q, rp)};
}

RVec oper_time_derivative(const DarbouxChart& chart, const IrregularTimes& times, const DeformationVector& alpha) {
  check_length(alpha, times);
  IrregularTimes a = alpha.as_times(times.r_inf);
  UniPoly dP1 = ptilde1(a);
  UniPoly dP2 = ptilde2_bilinear(a, times) * Rational(2) + ptilde2_hbar_term(a, times.hbar);
  RVec rhs;
  for (std::size_t i = 0; i < chart.genus(); ++i)
    rhs.push_back(-dP1(chart.first[i]) * chart.second[i] + dP2(chart.first[i]));
  return vandermonde_solve(chart.first, rhs, true);
}

Gradients hamiltonian_gradients(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times) {
  OperJacobian jac = oper_jacobian(chart, times);
  RVec nu = nu_coefficients(alpha, times);
  RVec c = c_coefficients(alpha, times);
  const Rational& hbar = times.hbar;
  const std::size_t g = chart.genus();
  Gradients out{RVec(g), RVec(g)};
  for (std::size_t j = 0; j < g; ++j) {
    const Rational& q = chart.first[j];
    const Rational& p = chart.second[j];
    Rational gq = 0, gp = 0;
    for (std::size_t k = 0; k < g; ++k) {
      gq += nu[k + 2] * jac.dq[k][j];
      gp += nu[k + 2] * jac.dp[k][j];
    }
    for (int k = 1; k < static_cast<int>(c.size()); ++k) gq -= hbar * k * c[static_cast<std::size_t>(k)] * qpow(q, k - 1);
    gq -= hbar * nu[0] * p;
    gp -= hbar * nu[1] + hbar * nu[0] * q;
    out.dq[j] = gq;
    out.dp[j] = gp;
  }
  return out;
}

Evolution hamiltonian_flow(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times) {
  Gradients grad = hamiltonian_gradients(alpha, chart, times);
  Evolution e{grad.dp, grad.dq};
  for (auto& x : e.pdot) x = -x;
  return e;
}

Mat2<RatFunc> companion_variation(const DeformationVector& alpha, const DarbouxChart& chart,
                                  const IrregularTimes& times, const Evolution& flow) {
  const std::size_t g = chart.genus();
  IrregularTimes a = alpha.as_times(times.r_inf);
  RVec dH = oper_time_derivative(chart, times, alpha);
  if (g > 0) {
    OperJacobian jac = oper_jacobian(chart, times);
    for (std::size_t k = 0; k < g; ++k)
      for (std::size_t j = 0; j < g; ++j) dH[k] += jac.dq[k][j] * flow.qdot[j] + jac.dp[k][j] * flow.pdot[j];
  }
  UniPoly dP2 = ptilde2_bilinear(a, times) * Rational(2) + ptilde2_hbar_term(a, times.hbar);
  RatFunc d21 = RatFunc(UniPoly(dH) - dP2);
  RatFunc d22 = RatFunc(ptilde1(a));
  for (std::size_t j = 0; j < g; ++j) {
    const Rational& q = chart.first[j];
    d21 -= RatFunc::pole(flow.pdot[j], q) + RatFunc::pole(chart.second[j] * flow.qdot[j], q, 2);
    d22 += RatFunc::pole(times.hbar * flow.qdot[j], q, 2);
  }
  return {RatFunc(0), RatFunc(0), d21, d22};
}

Mat2<RatFunc> zero_curvature_residual(const DeformationVector& alpha, const DarbouxChart& chart,
                                      const IrregularTimes& times) {
  return zero_curvature_residual(alpha, build_oper(chart, times));
}

Mat2<RatFunc> zero_curvature_residual(const DeformationVector& alpha, const OperData& oper) {
  const DarbouxChart& chart = oper.chart;
  const IrregularTimes& times = oper.times;
  check_length(alpha, times);
  Mat2<RatFunc> A = auxiliary_full(auxiliary_matrix(alpha, chart, times), oper.L);
  Mat2<RatFunc> dL = companion_variation(alpha, chart, times, hamiltonian_flow(alpha, chart, times));
  return derivative(A) - dL + commutator(A, oper.L);
}

}  // namespace isomon
