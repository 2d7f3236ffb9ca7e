#pragma once

#include "isomon/deformation.hpp"
#include "isomon/multipoly.hpp"

#include <string>
#include <vector>

namespace isomon {

// even times zero, t_{2r-3} = 2, t_{2r-5} = 0
bool on_canonical_slice(const IrregularTimes& times);

// d Q_k / d q_j = [l^k] of -prod_{i != j} (l - q_i), as [k][j]
RMatrix geometric_dQ(const RVec& q);

DarbouxChart geometric_forward(const DarbouxChart& qp);
// IrrationalRoots when prod (l - q_j) does not split; q comes back in increasing order
DarbouxChart geometric_backward(const DarbouxChart& geometric);
// d(Q, P) / d(q, p), 2g x 2g
RMatrix geometric_jacobian(const DarbouxChart& qp);

DarbouxChart lax_forward(const DarbouxChart& geometric, const IrregularTimes& times);
DarbouxChart lax_backward(const DarbouxChart& lax, const IrregularTimes& times);
// d(Q, R) / d(Q, P) at fixed times
RMatrix lax_jacobian(const DarbouxChart& geometric, const IrregularTimes& times);

// first rows of the connection and of the auxiliary matrix in the initial gauge;
// auxiliary entries are polynomial parts
struct FirstRows {
  UniPoly L11, L12, A11, A12;
  friend bool operator==(const FirstRows&, const FirstRows&) = default;
};
FirstRows matrices_in_qp(const DarbouxChart& qp, const IrregularTimes& times, const DeformationVector& alpha);
FirstRows matrices_in_geometric(const DarbouxChart& geometric, const IrregularTimes& times,
                                const DeformationVector& alpha);
FirstRows matrices_in_lax(const DarbouxChart& lax, const IrregularTimes& times, const DeformationVector& alpha);

// M x = N - H with x = (I_1, 3 I_3, ..., (2g-1) I_{2g-1}); rows ordered H_{g-1}, ..., H_0
struct HIMap {
  RMatrix M;
  RVec N;
  RVec H;  // H_0..H_{g-1} of the chart
};
HIMap h_i_map(const DarbouxChart& qp, const IrregularTimes& times);
// odd isospectral Hamiltonians I_1, I_3, ..., I_{2g-1}
RVec isospectral_from_oper(const HIMap& map, const RVec& H);
RVec oper_from_isospectral(const HIMap& map, const RVec& odd_I);
// odd entries of extract_isospectral_hams on the built connection
RVec isospectral_hams_by_eigenvalues(const DarbouxChart& qp, const IrregularTimes& times);

// reduced Hamiltonian of d/dtau_j with H rebuilt from the eigenvalue-route I
Rational hamiltonian_in_I(const RVec& tau, const DarbouxChart& qp, int j);

// d X_m / d t_k = (m+1) (diagonal nu_{g-1-m} + coupling sum_{n >= m+2} nu_{n-m-1} X_n)
struct ShiftWeights {
  Rational diagonal, coupling;
};
ShiftWeights geometric_shift_weights();  // (1, 1)
ShiftWeights lax_shift_weights();        // (0, 1)

struct ShiftSolution {
  int r_inf = 4;
  std::string constant;           // "u" or "v"
  ShiftWeights weights;
  std::vector<int> time_indices;  // odd k with 3 <= k <= 2r-7, highest first
  std::vector<MultiPoly> coords;  // coords[k] holds X_k(t; c)

  std::vector<std::string> variables() const { return coords.empty() ? std::vector<std::string>{} : coords[0].vars(); }
};

std::string time_variable(int k);
// nu_1..nu_{g-1} of e_k on the canonical slice as polynomials in the free odd times
std::vector<MultiPoly> slice_nu(int r_inf, int k, const std::vector<std::string>& vars);

ShiftSolution solve_shift_system(int r_inf, const std::string& constant, const ShiftWeights& weights);
ShiftSolution solve_isospectral_u(int r_inf);
ShiftSolution solve_isospectral_v(int r_inf);

// right-hand side of d X_m / d t_k evaluated on the solution
MultiPoly shift_rhs(const ShiftSolution& sol, int m, int k);

struct CompatibilityReport {
  bool ok = true;
  int i = 0, j = 0, k = 0;  // times t_i, t_j and coordinate index k
  std::string detail;
};
// first-order system and [d_i, d_j] X_k = 0 for every pair and coordinate
CompatibilityReport flow_compatibility_check(const ShiftSolution& sol);

// integration constants from coordinate values at the given times
RVec invert_shift(const ShiftSolution& sol, const RVec& values, const IrregularTimes& times);
DarbouxChart map_qp_to_uv(const DarbouxChart& qp, const IrregularTimes& times, const ShiftSolution& u,
                          const ShiftSolution& v);
DarbouxChart map_qp_to_uv(const DarbouxChart& qp, const IrregularTimes& times);
// shift coordinate values for given integration constants
RVec evaluate_shift(const ShiftSolution& sol, const RVec& constants, const IrregularTimes& times);
// IrrationalRoots when the recovered L12 does not split over the rationals
DarbouxChart map_uv_to_qp(const DarbouxChart& uv, const IrregularTimes& times, const ShiftSolution& u,
                          const ShiftSolution& v);
DarbouxChart map_uv_to_qp(const DarbouxChart& uv, const IrregularTimes& times);

// (qdot, pdot) of the flow d/dt_k under which L12, L11 evolve by d/dl of the auxiliary first row
Evolution isospectral_flow(const DarbouxChart& qp, const IrregularTimes& times, int k);

struct InvarianceSample {
  double h = 0, drift = 0;
};
struct InvarianceReport {
  std::vector<InvarianceSample> samples;
  double slope = 0;  // least squares fit of log drift against log h
};
// one Euler step of each size along isospectral_flow, drift = max |change of (u, v)|
InvarianceReport euler_invariance(const DarbouxChart& qp, const IrregularTimes& times, int k,
                                  const std::vector<Rational>& steps);

}  // namespace isomon
