#pragma once

#include "isomon/chart.hpp"
#include "isomon/halfseries.hpp"
#include "isomon/mat2.hpp"
#include "isomon/ratfunc.hpp"

#include <optional>
#include <string>
#include <utility>

namespace isomon {

// Birkhoff invariants t_1..t_{2r-2} of the pole at infinity.
struct IrregularTimes {
  int r_inf = 3;
  RVec t;  // t[k-1] holds t_k
  Rational hbar = 1;

  // t_k, zero outside 1..2r-2
  Rational operator()(int k) const;
  Rational& at(int k);
  int genus() const { return r_inf - 3; }
  int count() const { return 2 * r_inf - 2; }
  void validate() const;
};

// Reduced slice: even times zero, t_{2r-3} = 2, t_{2r-5} = 0, t_{2k-1} = 2 tau_{r-k-2}.
IrregularTimes canonical_times(int r_inf, const RVec& tau, const Rational& hbar = 1);

// Normalized representative: L12 monic of degree g, polynomial entries.
struct TwistedConnection {
  int r_inf = 3;
  Mat2<RatFunc> m;
  IrregularTimes times;
  std::optional<DarbouxChart> chart;
};

struct NormalizationReport {
  bool ok = true;
  std::string block;  // "leading", "subleading" or "shape"
  std::string entry;  // e.g. "(1,2)"
  std::string detail;
};

NormalizationReport validate_normalization(const TwistedConnection& c);

struct SpectralCurve {
  UniPoly trace, det;
};
// y^2 - trace y + det = 0
SpectralCurve spectral_curve(const TwistedConnection& c);

struct SpectralData {
  int r_inf = 3;
  HalfSeries y1{0}, y2{0};
  RVec birkhoff_times;
  RVec iso_hams;  // I_1..I_{2r-2}
};

// default doubled truncation order: covers I up to index 2r-2 and the O(l^(-r-2)) tail
int default_series_order2(int r_inf);
// y1 is the sheet whose l^((2r-5)/2) coefficient is -leading_time/2, leading_time = t_{2r-3}
std::pair<HalfSeries, HalfSeries> eigenvalue_series(const SpectralCurve& curve, int r_inf,
                                                    const Rational& leading_time, int order2);
RVec extract_birkhoff_times(const HalfSeries& y1, int r_inf);
RVec extract_isospectral_hams(const HalfSeries& y1, int r_inf);
SpectralData spectral_data(const TwistedConnection& c, int order2);

}  // namespace isomon
