#include "isomon/correspondence.hpp"

#include "isomon/errors.hpp"
#include "isomon/oper.hpp"
#include "isomon/reduction.hpp"
#include "isomon/solvers.hpp"

namespace isomon {

bool on_canonical_slice(const IrregularTimes& times) {
  const int r = times.r_inf;
  for (int k = 2; k <= 2 * r - 2; k += 2)
    if (times(k) != 0) return false;
  return times(2 * r - 3) == 2 && times(2 * r - 5) == 0;
}

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Rational at(const RVec& v, int i) { return i < 0 || i >= static_cast<int>(v.size()) ? Rational(0) : v[sz(i)]; }

UniPoly monic_from_coeffs(const RVec& Q) {
  RVec c = Q;
  c.push_back(1);
  return UniPoly(c);
}

Rational g0_from_Q(const RVec& Q, const IrregularTimes& times) {
  const int r = times.r_inf;
  return (times(2 * r - 4) - times(2 * r - 2) * at(Q, static_cast<int>(Q.size()) - 1)) / 2;
}

// coefficient matrix of P in R_k: -(P_{g-1-k} + sum_m P_m Q_{k+1+m})
RMatrix lax_p_matrix(const RVec& Q) {
  const int g = static_cast<int>(Q.size());
  RMatrix a(sz(g), RVec(sz(g)));
  for (int k = 0; k < g; ++k) {
    a[sz(k)][sz(g - 1 - k)] -= 1;
    for (int m = 0; m <= g - 2 - k; ++m) a[sz(k)][sz(m)] -= Q[sz(k + 1 + m)];
  }
  return a;
}

// -1/2 t_{2r-2} Q_{k-1} - g0 Q_k
RVec lax_shift(const RVec& Q, const IrregularTimes& times) {
  const int g = static_cast<int>(Q.size());
  const Rational top = times(2 * times.r_inf - 2);
  const Rational g0 = g0_from_Q(Q, times);
  RVec s(sz(g));
  for (int k = 0; k < g; ++k) s[sz(k)] = -(k > 0 ? top * Q[sz(k - 1)] / 2 : Rational(0)) - g0 * Q[sz(k)];
  return s;
}

// nu_{-1}..nu_g extended by the tail of sum mu_j / (l - q_j) = (lower terms) / L12
RVec extended_nu(const RVec& nu, const RVec& Q, int last) {
  const int g = static_cast<int>(Q.size());
  RVec ext = nu;  // ext[i + 1] = nu_i
  for (int i = g + 1; i <= last; ++i) {
    Rational s = 0;
    for (int k = 0; k < g; ++k) s -= Q[sz(k)] * ext[sz(i - g + k + 1)];
    ext.push_back(s);
  }
  return ext;
}

// polynomial part of L (nu_{-1} l + nu_0 + sum_{i >= 1} nu_i l^-i)
UniPoly truncated_product(const UniPoly& L, const RVec& nu, const RVec& Q) {
  const int d = L.degree();
  if (d < 0) return {};
  RVec ext = extended_nu(nu, Q, d);
  RVec out(sz(d + 2));
  for (int j = 0; j <= d + 1; ++j) {
    Rational s = ext[0] * L.coeff(j - 1);
    for (int i = 0; i <= d - j; ++i) s += ext[sz(i + 1)] * L.coeff(j + i);
    out[sz(j)] = s;
  }
  return UniPoly(out);
}

FirstRows assemble(const UniPoly& L11, const RVec& Q, const IrregularTimes& times, const DeformationVector& alpha) {
  RVec nu = nu_coefficients(alpha, times);
  RVec c = c_coefficients(alpha, times);
  UniPoly L12 = monic_from_coeffs(Q);
  return {L11, L12, UniPoly(c) + truncated_product(L11, nu, Q), truncated_product(L12, nu, Q)};
}

void check_reduced(const IrregularTimes& times) {
  for (int k = 2; k <= times.count(); k += 2)
    if (times(k) != 0) throw InvalidInput("even times must vanish");
}

}  // namespace

RMatrix geometric_dQ(const RVec& q) {
  const std::size_t g = q.size();
  RMatrix J(g, RVec(g));
  for (std::size_t j = 0; j < g; ++j) {
    RVec others;
    for (std::size_t i = 0; i < g; ++i)
      if (i != j) others.push_back(q[i]);
    UniPoly d = -UniPoly::from_roots(others);
    for (std::size_t k = 0; k < g; ++k) J[k][j] = d.coeff(static_cast<int>(k));
  }
  return J;
}

DarbouxChart geometric_forward(const DarbouxChart& qp) {
  qp.validate();
  const std::size_t g = qp.genus();
  UniPoly pi = UniPoly::from_roots(qp.first);
  RVec Q;
  for (std::size_t k = 0; k < g; ++k) Q.push_back(pi.coeff(static_cast<int>(k)));
  RVec P = g == 0 ? RVec{} : dense_solve(transpose(geometric_dQ(qp.first)), qp.second);
  return {ChartKind::geometric, Q, P};
}

DarbouxChart geometric_backward(const DarbouxChart& geometric) {
  geometric.validate();
  const std::size_t g = geometric.genus();
  RVec q = rational_roots(monic_from_coeffs(geometric.first));
  for (std::size_t i = 1; i < q.size(); ++i)
    if (q[i] == q[i - 1]) throw CoincidentNodes(i - 1, i);
  RMatrix J = geometric_dQ(q);
  RVec p(g);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < g; ++k) p[j] += J[k][j] * geometric.second[k];
  return qp_chart(q, p);
}

RMatrix geometric_jacobian(const DarbouxChart& qp) {
  qp.validate();
  const std::size_t g = qp.genus();
  const RVec& q = qp.first;
  RMatrix J = geometric_dQ(q);
  RMatrix JTinv = dense_inverse(transpose(J));
  RVec P = geometric_forward(qp).second;
  RMatrix out(2 * g, RVec(2 * g));
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t j = 0; j < g; ++j) {
      out[k][j] = J[k][j];
      out[g + k][g + j] = JTinv[k][j];
    }
  for (std::size_t i = 0; i < g; ++i) {
    // d_i J^T P, with d_i d_j Q_k = [l^k] prod_{l != i, j} (l - q_l)
    RVec v(g);
    for (std::size_t j = 0; j < g; ++j) {
      if (j == i) continue;
      RVec others;
      for (std::size_t l = 0; l < g; ++l)
        if (l != i && l != j) others.push_back(q[l]);
      UniPoly d = UniPoly::from_roots(others);
      for (std::size_t k = 0; k < g; ++k) v[j] += d.coeff(static_cast<int>(k)) * P[k];
    }
    for (std::size_t k = 0; k < g; ++k) {
      Rational s = 0;
      for (std::size_t j = 0; j < g; ++j) s -= JTinv[k][j] * v[j];
      out[g + k][i] = s;
    }
  }
  return out;
}

DarbouxChart lax_forward(const DarbouxChart& geometric, const IrregularTimes& times) {
  geometric.validate();
  const RVec& Q = geometric.first;
  RMatrix a = lax_p_matrix(Q);
  RVec s = lax_shift(Q, times);
  RVec R(Q.size());
  for (std::size_t k = 0; k < Q.size(); ++k) {
    R[k] = s[k];
    for (std::size_t m = 0; m < Q.size(); ++m) R[k] += a[k][m] * geometric.second[m];
  }
  return {ChartKind::lax, Q, R};
}

DarbouxChart lax_backward(const DarbouxChart& lax, const IrregularTimes& times) {
  lax.validate();
  const RVec& Q = lax.first;
  if (Q.empty()) return {ChartKind::geometric, {}, {}};
  RVec s = lax_shift(Q, times);
  RVec rhs(Q.size());
  for (std::size_t k = 0; k < Q.size(); ++k) rhs[k] = lax.second[k] - s[k];
  return {ChartKind::geometric, Q, dense_solve(lax_p_matrix(Q), rhs)};
}

RMatrix lax_jacobian(const DarbouxChart& geometric, const IrregularTimes& times) {
  const RVec& Q = geometric.first;
  const RVec& P = geometric.second;
  const int g = static_cast<int>(Q.size());
  const Rational top = times(2 * times.r_inf - 2);
  const Rational g0 = g0_from_Q(Q, times);
  RMatrix a = lax_p_matrix(Q);
  RMatrix out(sz(2 * g), RVec(sz(2 * g)));
  for (int k = 0; k < g; ++k) {
    out[sz(k)][sz(k)] = 1;
    for (int m = 0; m < g; ++m) out[sz(g + k)][sz(g + m)] = a[sz(k)][sz(m)];
    for (int l = 0; l < g; ++l) {
      Rational d = 0;
      if (l >= k + 1) d -= P[sz(l - k - 1)];
      if (k > 0 && l == k - 1) d -= top / 2;
      if (l == k) d -= g0;
      if (l == g - 1) d += Q[sz(k)] * top / 2;
      out[sz(g + k)][sz(l)] = d;
    }
  }
  return out;
}

FirstRows matrices_in_qp(const DarbouxChart& qp, const IrregularTimes& times, const DeformationVector& alpha) {
  TwistedConnection conn = build_connection(qp, times);
  AuxMatrix aux = auxiliary_matrix(alpha, qp, times);
  UniPoly L11 = conn.m.a.as_polynomial(), L12 = conn.m.b.as_polynomial();
  RatFunc a12 = RatFunc(L12) * aux.a12;
  RatFunc a11 = aux.a11 + RatFunc(L11) * aux.a12;
  return {L11, L12, a11.polynomial_part(), a12.polynomial_part()};
}

FirstRows matrices_in_geometric(const DarbouxChart& geometric, const IrregularTimes& times,
                                const DeformationVector& alpha) {
  const RVec& Q = geometric.first;
  const RVec& P = geometric.second;
  const int g = static_cast<int>(Q.size());
  RVec low(sz(g));
  for (int k = 0; k < g; ++k) {
    low[sz(k)] = -P[sz(g - 1 - k)];
    for (int m = 0; m <= g - 2 - k; ++m) low[sz(k)] -= P[sz(m)] * Q[sz(k + 1 + m)];
  }
  UniPoly lin(RVec{g0_from_Q(Q, times), Rational(times(2 * times.r_inf - 2) / 2)});
  UniPoly L11 = UniPoly(low) - lin * monic_from_coeffs(Q);
  return assemble(L11, Q, times, alpha);
}

FirstRows matrices_in_lax(const DarbouxChart& lax, const IrregularTimes& times, const DeformationVector& alpha) {
  const RVec& Q = lax.first;
  const int r = times.r_inf;
  const int g = static_cast<int>(Q.size());
  UniPoly L11 = UniPoly(lax.second) - UniPoly::monomial(times(2 * r - 4) / 2, g) -
                UniPoly::monomial(times(2 * r - 2) / 2, g + 1);
  return assemble(L11, Q, times, alpha);
}

HIMap h_i_map(const DarbouxChart& qp, const IrregularTimes& times) {
  check_reduced(times);
  const int r = times.r_inf;
  const int g = times.genus();
  TwistedConnection conn = build_connection(qp, times);
  RatFunc L11 = conn.m.a, L12 = conn.m.b;
  UniPoly E = (L12 * (L11 / L12).derivative()).polynomial_part();
  UniPoly P2 = ptilde2(times);
  HIMap map;
  map.H = oper_coeffs_H(qp, times);
  map.M.assign(sz(g), RVec(sz(g)));
  map.N.resize(sz(g));
  for (int a = 0; a < g; ++a) {
    const int i = g - 1 - a;
    Rational tt = 0;
    for (int k = 1; k <= 2 * i + 3; k += 2) tt += times(k) * times(2 * i + 4 - k);
    map.N[sz(a)] = P2.coeff(i) + E.coeff(i) + tt / 4;
    for (int b = 0; b <= a; ++b) map.M[sz(a)][sz(b)] = times(2 * r - 3 - 2 * (a - b));
  }
  return map;
}

RVec isospectral_from_oper(const HIMap& map, const RVec& H) {
  const std::size_t g = map.N.size();
  if (H.size() != g) throw InvalidInput("need H_0..H_{g-1}");
  RVec col, rhs;
  for (std::size_t a = 0; a < g; ++a) {
    col.push_back(map.M[a][0]);
    rhs.push_back(map.N[a] - H[g - 1 - a]);
  }
  RVec x = toeplitz_lower_solve(col, rhs);
  for (std::size_t b = 0; b < g; ++b) x[b] /= static_cast<long>(2 * b + 1);
  return x;
}

RVec oper_from_isospectral(const HIMap& map, const RVec& odd_I) {
  const std::size_t g = map.N.size();
  if (odd_I.size() != g) throw InvalidInput("need I_1, I_3, ..., I_{2g-1}");
  RVec H(g);
  for (std::size_t a = 0; a < g; ++a) {
    Rational s = 0;
    for (std::size_t b = 0; b <= a; ++b) s += map.M[a][b] * static_cast<long>(2 * b + 1) * odd_I[b];
    H[g - 1 - a] = map.N[a] - s;
  }
  return H;
}

RVec isospectral_hams_by_eigenvalues(const DarbouxChart& qp, const IrregularTimes& times) {
  SpectralData sd = spectral_data(build_connection(qp, times), default_series_order2(times.r_inf));
  RVec odd;
  for (int m = 1; m <= times.genus(); ++m) odd.push_back(sd.iso_hams[sz(2 * m - 2)]);
  return odd;
}

Rational hamiltonian_in_I(const RVec& tau, const DarbouxChart& qp, int j) {
  const int r = static_cast<int>(tau.size()) + 3;
  IrregularTimes times = canonical_times(r, tau);
  HIMap map = h_i_map(qp, times);
  RVec H = oper_from_isospectral(map, isospectral_hams_by_eigenvalues(qp, times));
  RVec nu = reduced_nu(tau, r, j);
  Rational ham = 0;
  for (std::size_t k = 0; k < H.size(); ++k) ham += nu[k] * H[k];
  return ham;
}

}  // namespace isomon
