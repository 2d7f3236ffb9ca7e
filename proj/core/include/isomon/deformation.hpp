#pragma once

#include "isomon/oper.hpp"
#include "isomon/solvers.hpp"

namespace isomon {

// alpha over the basis e_1..e_{2r-2}
struct DeformationVector {
  RVec alpha;

  Rational operator()(int k) const;
  static DeformationVector unit(int r_inf, int k);
  // alpha laid out as a times vector, for bilinear forms in t
  IrregularTimes as_times(int r_inf) const;
};

struct AuxMatrix {
  RatFunc a11, a12;
  RVec nu;   // nu_{-1}..nu_{r-3}, nu[k+1] holds nu_k
  RVec c;    // c_0..c_{r-1}
  RVec mu, rho;
};

// lower-triangular Toeplitz M with diagonal t_{2r-3}, subdiagonals t_{2r-5}, ..., t_1
RVec toeplitz_column(const IrregularTimes& times);

RVec nu_coefficients(const DeformationVector& alpha, const IrregularTimes& times);
RVec c_coefficients(const DeformationVector& alpha, const IrregularTimes& times);
std::pair<RVec, RVec> mu_coefficients(const RVec& nu, const DarbouxChart& chart);
AuxMatrix auxiliary_matrix(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times);
// full 2x2 auxiliary matrix in the companion gauge
Mat2<RatFunc> auxiliary_full(const AuxMatrix& aux, const Mat2<RatFunc>& L);

Rational general_hamiltonian(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times);

// exact derivatives of H_0..H_{g-1} with respect to q_j and p_j
struct OperJacobian {
  RMatrix dq, dp;  // [k][j]
};
OperJacobian oper_jacobian(const DarbouxChart& chart, const IrregularTimes& times);
// derivative of H along a time direction at fixed (q, p)
RVec oper_time_derivative(const DarbouxChart& chart, const IrregularTimes& times, const DeformationVector& alpha);

struct Gradients {
  RVec dq, dp;  // dHam/dq_j, dHam/dp_j
};
Gradients hamiltonian_gradients(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times);

struct Evolution {
  RVec qdot, pdot;
};
// qdot = dHam/dp, pdot = -dHam/dq
Evolution hamiltonian_flow(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times);

// derivative of the companion matrix L along alpha, with (q, p) moving by `flow`
Mat2<RatFunc> companion_variation(const DeformationVector& alpha, const DarbouxChart& chart,
                                  const IrregularTimes& times, const Evolution& flow);

// dA/dl - delta_alpha L + [A, L], the compatibility of dPsi = L Psi and delta_alpha Psi = A Psi
Mat2<RatFunc> zero_curvature_residual(const DeformationVector& alpha, const DarbouxChart& chart,
                                      const IrregularTimes& times);
// same with a given companion matrix oper.L, flows taken at oper.chart and oper.times
Mat2<RatFunc> zero_curvature_residual(const DeformationVector& alpha, const OperData& oper);

}  // namespace isomon
