#pragma once

#include "isomon/connection.hpp"

namespace isomon {

struct OperData {
  Mat2<RatFunc> L;  // companion form, row 1 = (0, 1)
  RVec H;           // oper coefficients H_0..H_{g-1}
  UniPoly ptilde1, ptilde2, lagrange;
  Rational g0;
  DarbouxChart chart;
  IrregularTimes times;
};

UniPoly ptilde1(const IrregularTimes& times);
// ptilde2(t) = B(t, t) + hbar t_{2r-2}/2 l^(r-3)
UniPoly ptilde2(const IrregularTimes& times);
// symmetric bilinear part B, both arguments over one r_inf
UniPoly ptilde2_bilinear(const IrregularTimes& a, const IrregularTimes& b);
// linear part hbar t_{2r-2}/2 l^(r-3)
UniPoly ptilde2_hbar_term(const IrregularTimes& times, const Rational& hbar);

// -sum_i p_i prod_{j != i} (l - q_j)/(q_i - q_j)
UniPoly lagrange_interpolant(const RVec& q, const RVec& p);
Rational g0(const IrregularTimes& times, const RVec& q);

// right-hand side of the transposed Vandermonde system for H
RVec oper_rhs(const DarbouxChart& chart, const IrregularTimes& times);
RVec oper_coeffs_H(const DarbouxChart& chart, const IrregularTimes& times);
OperData build_oper(const DarbouxChart& chart, const IrregularTimes& times);

Mat2<UniPoly> gauge_matrix(const DarbouxChart& chart, const IrregularTimes& times);
// G built from the first row of a normalized connection
Mat2<UniPoly> gauge_matrix(const TwistedConnection& c);

// G^-1 L G - G^-1 dG
TwistedConnection gauge_backward(const OperData& oper, const Mat2<UniPoly>& G);
// G Lt G^-1 + dG G^-1
Mat2<RatFunc> gauge_forward(const TwistedConnection& c);

DarbouxChart apparent_singularities(const TwistedConnection& c);

// convenience: chart and times to the normalized connection
TwistedConnection build_connection(const DarbouxChart& chart, const IrregularTimes& times);

Mat2<RatFunc> to_ratfunc(const Mat2<UniPoly>& m);
Mat2<RatFunc> derivative(const Mat2<RatFunc>& m);

}  // namespace isomon
