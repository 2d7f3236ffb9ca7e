#pragma once

#include "isomon/rational.hpp"

#include <span>

namespace isomon {

using RMatrix = std::vector<RVec>;

// M x = rhs, M lower triangular Toeplitz with the given first column
RVec toeplitz_lower_solve(std::span<const Rational> first_column, std::span<const Rational> rhs);

// Unit lower-triangular Toeplitz matrix I + sum_j tau_j S^(j+1): its inverse is
// I + sum_i F_i S^(i+1). Returns F_1..F_n from the multinomial sums.
RVec toeplitz_unit_inverse_coeffs(std::span<const Rational> subdiagonal);

// V x = rhs with V[i][j] = nodes[j]^i; transposed solves V^T x = rhs
RVec vandermonde_solve(std::span<const Rational> nodes, std::span<const Rational> rhs, bool transposed);

// dense Gaussian elimination, throws on singular input
RVec dense_solve(RMatrix a, RVec rhs);
RMatrix dense_inverse(const RMatrix& a);
RMatrix identity_matrix(std::size_t n);
RMatrix matmul(const RMatrix& a, const RMatrix& b);
RMatrix transpose(const RMatrix& a);

}  // namespace isomon
