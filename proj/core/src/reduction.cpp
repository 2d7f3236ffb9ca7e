#include "isomon/reduction.hpp"

#include "isomon/errors.hpp"

#include <stdexcept>
#include <tuple>

namespace isomon {

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational tau_at(const RVec& tau, int k) {
  if (k < 1 || k > static_cast<int>(tau.size())) return 0;
  return tau[static_cast<std::size_t>(k - 1)];
}

// coefficient of T1^(r-k-p-2) tau_p in t_{2k-1} / (2 T2^((2k-1)/2))
Rational delta_coeff(int r, int k, int p) {
  Rational num = 1;
  for (int m = p + 1; m <= r - k - 2; ++m) num *= 2 * r - 2 * m - 5;
  return num / (pow(Rational(2), r - k - p - 2) * factorial(r - k - p - 2));
}

Rational gamma_coeff(int r, int k) {
  Rational num = 1;
  for (int m = 0; m <= r - k - 2; ++m) num *= 2 * r - 2 * m - 5;
  return num / (pow(Rational(2), r - 1 - k) * factorial(r - 1 - k));
}

// a = (t_{2r-3}/2)^(1/(2r-3)), positive
Rational leading_root(const IrregularTimes& times) {
  const int r = times.r_inf;
  Rational s = times(2 * r - 3) / 2;
  auto a = rational_root(s, static_cast<unsigned>(2 * r - 3));
  if (!a || *a <= 0) throw IrrationalPower();
  return *a;
}

}  // namespace

ReducedTimes ReducedTimes::canonical(int r_inf, const RVec& tau, const Rational& hbar) {
  if (r_inf < 3) throw InvalidInput("r_inf must be at least 3");
  if (static_cast<int>(tau.size()) != r_inf - 3) throw InvalidInput("expected g = r_inf - 3 tau values");
  return {r_inf, tau, RVec(static_cast<std::size_t>(r_inf - 1)), 0, 1, hbar};
}

bool ReducedTimes::is_canonical() const {
  for (const auto& x : T_inf)
    if (x != 0) return false;
  return T1 == 0 && T2 == 1;
}

Rational sqrt_T2(const ReducedTimes& rt) {
  auto a = rational_sqrt(rt.T2);
  if (!a || rt.T2 <= 0) throw IrrationalPower();
  return abs(*a);
}

ReducedTimes times_forward(const IrregularTimes& times) {
  times.validate();
  const int r = times.r_inf;
  Rational a = leading_root(times);
  ReducedTimes rt;
  rt.r_inf = r;
  rt.hbar = times.hbar;
  for (int k = 1; k <= r - 1; ++k) rt.T_inf.push_back(times(2 * k));
  rt.T2 = a * a;
  rt.T1 = times(2 * r - 5) / (2 * r - 5) * pow(a, -(2 * r - 5));
  Rational h = times(2 * r - 5) / 2;
  for (int k = 1; k <= r - 3; ++k) {
    Rational tau = 0;
    Rational prod = 1;
    for (int i = 0; i <= k - 1; ++i) {
      if (i > 0) prod *= 2 * r - 2 * k + 2 * i - 7;
      Rational term = prod * pow(h, i) * pow(a, -((2 * r - 3) * i + 2 * r - 5 - 2 * k)) *
                      (times(2 * r - 5 - 2 * k + 2 * i) / 2) / (factorial(i) * pow(Rational(2 * r - 5), i));
      tau += i % 2 == 0 ? term : Rational(-term);
    }
    prod *= 2 * r - 7;  // s = k factor
    Rational tail = prod * pow(h, k + 1) * pow(a, -(k + 1) * (2 * r - 5)) /
                    ((k + 1) * factorial(k - 1) * pow(Rational(2 * r - 5), k));
    tau += k % 2 == 0 ? tail : Rational(-tail);
    rt.tau.push_back(tau);
  }
  return rt;
}

IrregularTimes times_backward(const ReducedTimes& rt) {
  const int r = rt.r_inf;
  if (static_cast<int>(rt.tau.size()) != r - 3 || static_cast<int>(rt.T_inf.size()) != r - 1)
    throw InvalidInput("reduced times have the wrong shape");
  Rational a = sqrt_T2(rt);
  IrregularTimes t{r, RVec(static_cast<std::size_t>(2 * r - 2)), rt.hbar};
  for (int k = 1; k <= r - 1; ++k) t.at(2 * k) = rt.T_inf[static_cast<std::size_t>(k - 1)];
  t.at(2 * r - 3) = 2 * pow(a, 2 * r - 3);
  t.at(2 * r - 5) = (2 * r - 5) * rt.T1 * pow(a, 2 * r - 5);
  for (int k = 1; k <= r - 3; ++k) {
    Rational s = pow(rt.T1, r - 1 - k) * gamma_coeff(r, k);
    for (int p = 1; p <= r - k - 2; ++p) s += delta_coeff(r, k, p) * pow(rt.T1, r - k - p - 2) * tau_at(rt.tau, p);
    t.at(2 * k - 1) = 2 * pow(a, 2 * k - 1) * s;
  }
  return t;
}

DeformationBasis basis_vectors(const IrregularTimes& times) {
  const int r = times.r_inf;
  const auto n = static_cast<std::size_t>(2 * r - 2);
  DeformationBasis b;
  for (int k = 1; k <= r - 1; ++k) b.w.push_back(DeformationVector::unit(r, 2 * k));
  for (int k = -1; k <= r - 3; ++k) {
    DeformationVector u{RVec(n)};
    for (int m = 1; m <= 2 * r - 2 * k - 4; ++m) u.alpha[static_cast<std::size_t>(m - 1)] = Rational(m, 2) * times(m + 2 * k + 2);
    b.u.push_back(u);
  }
  return b;
}

RMatrix basis_matrix(const DeformationBasis& basis) {
  RMatrix m;
  for (const auto& v : basis.w) m.push_back(v.alpha);
  for (const auto& v : basis.u) m.push_back(v.alpha);
  return m;
}

DeformationVector tau_direction(const ReducedTimes& rt, int k) {
  const int r = rt.r_inf;
  if (k < 1 || k > r - 3) throw InvalidInput("isomonodromic time index out of range");
  Rational a = sqrt_T2(rt);
  DeformationVector v{RVec(static_cast<std::size_t>(2 * r - 2))};
  for (int i = 1; i <= r - k - 2; ++i)
    v.alpha[static_cast<std::size_t>(2 * i - 2)] = 2 * delta_coeff(r, i, k) * pow(rt.T1, r - i - k - 2) * pow(a, 2 * i - 1);
  return v;
}

DarbouxChart shift_coordinates(const DarbouxChart& chart, const IrregularTimes& times) {
  ReducedTimes rt = times_forward(times);
  UniPoly P1 = ptilde1(times);
  DarbouxChart out{ChartKind::qp, {}, {}};
  for (std::size_t j = 0; j < chart.genus(); ++j) {
    out.first.push_back(rt.T2 * chart.first[j] + rt.T1);
    out.second.push_back((chart.second[j] - P1(chart.first[j]) / 2) / rt.T2);
  }
  return out;
}

DarbouxChart unshift_coordinates(const DarbouxChart& shifted, const IrregularTimes& times) {
  ReducedTimes rt = times_forward(times);
  UniPoly P1 = ptilde1(times);
  DarbouxChart out{ChartKind::qp, {}, {}};
  for (std::size_t j = 0; j < shifted.genus(); ++j) {
    Rational q = (shifted.first[j] - rt.T1) / rt.T2;
    out.first.push_back(q);
    out.second.push_back(rt.T2 * shifted.second[j] + P1(q) / 2);
  }
  return out;
}

RMatrix shift_jacobian(const DarbouxChart& chart, const IrregularTimes& times) {
  ReducedTimes rt = times_forward(times);
  UniPoly dP1 = ptilde1(times).derivative();
  const std::size_t g = chart.genus();
  RMatrix J(2 * g, RVec(2 * g));
  for (std::size_t j = 0; j < g; ++j) {
    J[j][j] = rt.T2;
    J[g + j][j] = -dP1(chart.first[j]) / (2 * rt.T2);
    J[g + j][g + j] = 1 / rt.T2;
  }
  return J;
}

bool is_symplectic(const RMatrix& J) {
  const std::size_t n = J.size();
  if (n % 2 != 0) return false;
  const std::size_t g = n / 2;
  RMatrix omega(n, RVec(n));
  for (std::size_t j = 0; j < g; ++j) {
    omega[j][g + j] = 1;
    omega[g + j][j] = -1;
  }
  return matmul(matmul(transpose(J), omega), J) == omega;
}

std::pair<Rational, Rational> trivial_time_variation(const DeformationVector& alpha, const IrregularTimes& times) {
  const int r = times.r_inf;
  ReducedTimes rt = times_forward(times);
  Rational a = leading_root(times);
  Rational s = times(2 * r - 3) / 2;
  Rational dT2 = rt.T2 / ((2 * r - 3) * s) * alpha(2 * r - 3);
  Rational dT1 = alpha(2 * r - 5) / (2 * r - 5) * pow(a, -(2 * r - 5)) -
                 Rational(2 * r - 5, 2 * r - 3) * rt.T1 / s * alpha(2 * r - 3) / 2;
  return {times.hbar * dT1, times.hbar * dT2};
}

ShiftedFlow shifted_flow(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times) {
  ReducedTimes rt = times_forward(times);
  auto [dT1, dT2] = trivial_time_variation(alpha, times);
  Evolution ev = hamiltonian_flow(alpha, chart, times);
  UniPoly P1 = ptilde1(times), dP1q = P1.derivative();
  UniPoly dP1 = ptilde1(alpha.as_times(times.r_inf)) * times.hbar;
  ShiftedFlow out;
  for (std::size_t j = 0; j < chart.genus(); ++j) {
    const Rational& q = chart.first[j];
    const Rational& p = chart.second[j];
    out.qdot.push_back(dT2 * q + rt.T2 * ev.qdot[j] + dT1);
    out.pdot.push_back(-dT2 / (rt.T2 * rt.T2) * (p - P1(q) / 2) +
                       (ev.pdot[j] - dP1(q) / 2 - dP1q(q) * ev.qdot[j] / 2) / rt.T2);
  }
  return out;
}

Rational shifted_hamiltonian(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times) {
  auto [dT1, dT2] = trivial_time_variation(alpha, times);
  DarbouxChart shifted = shift_coordinates(chart, times);
  UniPoly dP1 = ptilde1(alpha.as_times(times.r_inf)) * times.hbar;
  // antiderivative vanishing at 0
  RVec prim(static_cast<std::size_t>(dP1.degree() + 2));
  for (int i = 0; i <= dP1.degree(); ++i) prim[static_cast<std::size_t>(i + 1)] = dP1.coeff(i) / (i + 1);
  UniPoly integral(prim);
  Rational k = general_hamiltonian(alpha, chart, times);
  for (std::size_t j = 0; j < chart.genus(); ++j)
    k += shifted.second[j] * (dT2 * chart.first[j] + dT1) + integral(chart.first[j]) / 2;
  return k;
}

namespace {

CheckReport failure(std::string direction, std::size_t index, std::string detail) {
  return {false, std::move(direction), index, std::move(detail)};
}

}  // namespace

CheckReport trivial_flow_check(const DarbouxChart& chart, const IrregularTimes& times) {
  const int r = times.r_inf;
  const Rational& hbar = times.hbar;
  ReducedTimes rt = times_forward(times);
  DeformationBasis basis = basis_vectors(times);
  const std::size_t g = chart.genus();

  auto check_shifted = [&](const DeformationVector& v, const std::string& name) -> CheckReport {
    ShiftedFlow sf = shifted_flow(v, chart, times);
    for (std::size_t j = 0; j < g; ++j) {
      if (sf.qdot[j] != 0) return failure(name, j, "shifted q moves: " + to_string(sf.qdot[j]));
      if (sf.pdot[j] != 0) return failure(name, j, "shifted p moves: " + to_string(sf.pdot[j]));
    }
    return {};
  };

  for (int k = 1; k <= r - 1; ++k) {
    std::string name = "w_" + std::to_string(k);
    const DeformationVector& w = basis.w[static_cast<std::size_t>(k - 1)];
    Evolution ev = hamiltonian_flow(w, chart, times);
    for (std::size_t j = 0; j < g; ++j) {
      if (ev.qdot[j] != 0) return failure(name, j, "q evolves");
      if (ev.pdot[j] != -hbar / 2 * pow(chart.first[j], k - 1)) return failure(name, j, "p evolution differs from -hbar/2 q^(k-1)");
    }
    auto [dT1, dT2] = trivial_time_variation(w, times);
    if (dT1 != 0 || dT2 != 0) return failure(name, 0, "T1 or T2 varies");
    if (auto rep = check_shifted(w, name); !rep.ok) return rep;
  }

  const DeformationVector& um1 = basis.u[0];
  Evolution e1 = hamiltonian_flow(um1, chart, times);
  for (std::size_t j = 0; j < g; ++j) {
    if (e1.qdot[j] != -hbar * chart.first[j]) return failure("u_-1", j, "q evolution differs from -hbar q");
    if (e1.pdot[j] != hbar * chart.second[j]) return failure("u_-1", j, "p evolution differs from hbar p");
  }
  auto [v1T1, v1T2] = trivial_time_variation(um1, times);
  if (v1T1 != 0 || v1T2 != hbar * rt.T2) return failure("u_-1", 0, "trivial time variation differs from (0, hbar T2)");
  if (auto rep = check_shifted(um1, "u_-1"); !rep.ok) return rep;

  const DeformationVector& u0 = basis.u[1];
  Evolution e0 = hamiltonian_flow(u0, chart, times);
  for (std::size_t j = 0; j < g; ++j) {
    if (e0.qdot[j] != -hbar) return failure("u_0", j, "q evolution differs from -hbar");
    if (e0.pdot[j] != 0) return failure("u_0", j, "p evolves");
  }
  auto [v0T1, v0T2] = trivial_time_variation(u0, times);
  if (v0T1 != hbar * rt.T2 || v0T2 != 0) return failure("u_0", 0, "trivial time variation differs from (hbar T2, 0)");
  if (auto rep = check_shifted(u0, "u_0"); !rep.ok) return rep;
  return {};
}

CheckReport two_form_reduction_check(const DarbouxChart& chart, const IrregularTimes& times) {
  const int r = times.r_inf;
  DeformationBasis basis = basis_vectors(times);
  for (int k = 1; k <= r - 1; ++k) {
    Rational h = shifted_hamiltonian(basis.w[static_cast<std::size_t>(k - 1)], chart, times);
    if (h != 0) return failure("w_" + std::to_string(k), 0, "shifted Hamiltonian " + to_string(h));
  }
  Rational hm1 = shifted_hamiltonian(basis.u[0], chart, times);
  if (hm1 != 0) return failure("u_-1", 0, "shifted Hamiltonian " + to_string(hm1));
  // u_0 leaves a function of the trivial times only, zero on the canonical slice
  Rational h0 = shifted_hamiltonian(basis.u[1], chart, times);
  Rational expected0 = times.hbar * static_cast<long>(chart.genus()) * times(2) / 2;
  if (h0 != expected0) return failure("u_0", 0, "shifted Hamiltonian " + to_string(h0) + ", expected " + to_string(expected0));
  if (!is_symplectic(shift_jacobian(chart, times))) return failure("shift", 0, "Jacobian is not symplectic");

  // t is affine in tau, so a unit step gives the exact partial derivative
  ReducedTimes rt = times_forward(times);
  IrregularTimes base = times_backward(rt);
  for (int k = 1; k <= r - 3; ++k) {
    ReducedTimes step = rt;
    step.tau[static_cast<std::size_t>(k - 1)] += 1;
    IrregularTimes moved = times_backward(step);
    DeformationVector expected = tau_direction(rt, k);
    for (int i = 1; i <= 2 * r - 2; ++i)
      if (moved(i) - base(i) != expected(i))
        return failure("tau_" + std::to_string(k), static_cast<std::size_t>(i), "d t_i / d tau_k differs from the closed form");
  }
  return {};
}

UniPoly reduced_ptilde2(const RVec& tau, int r) {
  if (static_cast<int>(tau.size()) != r - 3) throw InvalidInput("expected g = r_inf - 3 tau values");
  if (r == 3) return UniPoly(RVec{0, -1});
  RVec c(static_cast<std::size_t>(2 * r - 4));
  c[static_cast<std::size_t>(2 * r - 5)] = -1;
  for (int k = r - 2; k <= 2 * r - 7; ++k) {
    Rational s = 2 * tau_at(tau, 2 * r - k - 6);
    for (int m = k - r + 6; m <= r - 3; ++m) s += tau_at(tau, r - m - 2) * tau_at(tau, r - k + m - 5);
    c[static_cast<std::size_t>(k)] -= s;
  }
  Rational s = 2 * tau_at(tau, r - 3);
  for (int m = 3; m <= r - 3; ++m) s += tau_at(tau, r - m - 2) * tau_at(tau, m - 2);
  c[static_cast<std::size_t>(r - 3)] -= s;
  return UniPoly(c);
}

RVec reduced_nu(const RVec& tau, int r, int j) {
  const int g = r - 3;
  if (j < 1 || j > g) throw InvalidInput("isomonodromic time index out of range");
  RVec F = toeplitz_unit_inverse_coeffs(tau);
  Rational scale(2, 2 * r - 2 * j - 5);
  RVec nu(static_cast<std::size_t>(g));
  nu[static_cast<std::size_t>(j - 1)] = scale;
  for (int k = j + 2; k <= g; ++k) nu[static_cast<std::size_t>(k - 1)] = scale * F[static_cast<std::size_t>(k - j - 2)];
  return nu;
}

RVec reduced_oper_coeffs(const RVec& tau, int r, const DarbouxChart& chart, const Rational& hbar) {
  chart.validate();
  if (static_cast<int>(chart.genus()) != r - 3) throw InvalidInput("chart size must equal g = r_inf - 3");
  UniPoly P2 = reduced_ptilde2(tau, r);
  const RVec& q = chart.first;
  const RVec& p = chart.second;
  RVec rhs;
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational v = p[i] * p[i] + P2(q[i]);
    for (std::size_t l = 0; l < q.size(); ++l)
      if (l != i) v += hbar * (p[l] - p[i]) / (q[i] - q[l]);
    rhs.push_back(v);
  }
  return vandermonde_solve(q, rhs, true);
}

Rational reduced_hamiltonian(const RVec& tau, int r, const DarbouxChart& chart, int j, const Rational& hbar) {
  RVec H = reduced_oper_coeffs(tau, r, chart, hbar);
  RVec nu = reduced_nu(tau, r, j);
  Rational ham = 0;
  for (std::size_t k = 0; k < H.size(); ++k) ham += nu[k] * H[k];
  return ham;
}

namespace {

const std::vector<std::string> painleve_vars{"q", "p", "tau"};

MultiPoly lagrange_basis(const std::string& var, const RVec& nodes, std::size_t i) {
  MultiPoly b = MultiPoly::constant(painleve_vars, 1);
  MultiPoly x = MultiPoly::variable(painleve_vars, var);
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (j != i) b = b * (x - MultiPoly::constant(painleve_vars, nodes[j])) * (1 / (nodes[i] - nodes[j]));
  return b;
}

Rational t1_hamiltonian(const Rational& q, const Rational& p, const Rational& tau) {
  return general_hamiltonian(DeformationVector::unit(4, 1), qp_chart({q}, {p}), canonical_times(4, RVec{tau}));
}

}  // namespace

MultiPoly painleve_one_hamiltonian() {
  const RVec qs{0, 1, 2, 3}, ps{0, 1, 2}, taus{0, 1};
  MultiPoly ham(painleve_vars);
  for (std::size_t a = 0; a < qs.size(); ++a)
    for (std::size_t b = 0; b < ps.size(); ++b)
      for (std::size_t c = 0; c < taus.size(); ++c)
        ham += lagrange_basis("q", qs, a) * lagrange_basis("p", ps, b) * lagrange_basis("tau", taus, c) *
               t1_hamiltonian(qs[a], ps[b], taus[c]);
  for (const auto& [q, p, tau] : {std::tuple<Rational, Rational, Rational>{Rational(5, 3), Rational(-7, 2), Rational(11, 5)},
                                  {Rational(-9, 4), Rational(13, 3), Rational(-2, 7)}})
    if (ham.evaluate({{"q", q}, {"p", p}, {"tau", tau}}) != t1_hamiltonian(q, p, tau))
      throw std::logic_error("Hamiltonian exceeds the interpolation degrees");
  return ham;
}

MultiPoly painleve_one_second_derivative() {
  MultiPoly ham = painleve_one_hamiltonian();
  MultiPoly hq = ham.derivative("q"), hp = ham.derivative("p");
  // t_1 = 2 tau on the slice
  return hp.derivative("q") * hp - hp.derivative("p") * hq + hp.derivative("tau") * Rational(1, 2);
}

}  // namespace isomon
