#pragma once

#include "isomon/deformation.hpp"
#include "isomon/multipoly.hpp"

#include <string>
#include <vector>

namespace isomon {

// tau_1..tau_g with the trivial times T_{inf,1..r-1}, T1, T2
struct ReducedTimes {
  int r_inf = 3;
  RVec tau;
  RVec T_inf;  // T_inf[k-1] holds T_{inf,k} = t_{2k}
  Rational T1 = 0, T2 = 1;
  Rational hbar = 1;

  static ReducedTimes canonical(int r_inf, const RVec& tau, const Rational& hbar = 1);
  bool is_canonical() const;
  int genus() const { return r_inf - 3; }
};

// T2^(1/2): the positive rational root, IrrationalPower otherwise
Rational sqrt_T2(const ReducedTimes& rt);

ReducedTimes times_forward(const IrregularTimes& times);
IrregularTimes times_backward(const ReducedTimes& rt);

struct DeformationBasis {
  std::vector<DeformationVector> w;  // w_1..w_{r-1}
  std::vector<DeformationVector> u;  // u_{-1}..u_{r-3}, u[k+1] holds u_k
};
DeformationBasis basis_vectors(const IrregularTimes& times);
// the 2r-2 vectors as rows: w_1..w_{r-1}, u_{-1}..u_{r-3}
RMatrix basis_matrix(const DeformationBasis& basis);

// d t / d tau_k at fixed trivial times, from the closed form
DeformationVector tau_direction(const ReducedTimes& rt, int k);

DarbouxChart shift_coordinates(const DarbouxChart& chart, const IrregularTimes& times);
DarbouxChart unshift_coordinates(const DarbouxChart& shifted, const IrregularTimes& times);
// d(q_check, p_check) / d(q, p), 2g x 2g in the order q_1..q_g, p_1..p_g
RMatrix shift_jacobian(const DarbouxChart& chart, const IrregularTimes& times);
bool is_symplectic(const RMatrix& jacobian);

// hbar * (dT1, dT2) along alpha
std::pair<Rational, Rational> trivial_time_variation(const DeformationVector& alpha, const IrregularTimes& times);

struct ShiftedFlow {
  RVec qdot, pdot;  // evolution of q_check, p_check
};
ShiftedFlow shifted_flow(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times);
// Ham + explicit time derivative of the shift's generating function
Rational shifted_hamiltonian(const DeformationVector& alpha, const DarbouxChart& chart, const IrregularTimes& times);

struct CheckReport {
  bool ok = true;
  std::string direction;
  std::size_t index = 0;
  std::string detail;
};
CheckReport trivial_flow_check(const DarbouxChart& chart, const IrregularTimes& times);
CheckReport two_form_reduction_check(const DarbouxChart& chart, const IrregularTimes& times);

UniPoly reduced_ptilde2(const RVec& tau, int r_inf);
// nu_1..nu_g for the direction d/dtau_j
RVec reduced_nu(const RVec& tau, int r_inf, int j);
RVec reduced_oper_coeffs(const RVec& tau, int r_inf, const DarbouxChart& chart, const Rational& hbar = 1);
Rational reduced_hamiltonian(const RVec& tau, int r_inf, const DarbouxChart& chart, int j, const Rational& hbar = 1);

// Ham of d/dt_1 at r_inf = 4 on the canonical slice, as a polynomial in q, p, tau
// recovered by exact interpolation of general_hamiltonian
MultiPoly painleve_one_hamiltonian();
// d^2 q / dt_1^2 along that flow, a polynomial in q, p, tau
MultiPoly painleve_one_second_derivative();

}  // namespace isomon
