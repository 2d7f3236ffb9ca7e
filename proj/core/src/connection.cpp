#include "isomon/connection.hpp"

#include "isomon/errors.hpp"

namespace isomon {

std::string to_string(ChartKind k) {
  switch (k) {
    case ChartKind::qp: return "qp";
    case ChartKind::geometric: return "geometric";
    case ChartKind::lax: return "lax";
    case ChartKind::isospectral: return "isospectral";
  }
  return "qp";
}

ChartKind parse_chart_kind(const std::string& s) {
  if (s == "qp") return ChartKind::qp;
  if (s == "geometric") return ChartKind::geometric;
  if (s == "lax") return ChartKind::lax;
  if (s == "isospectral") return ChartKind::isospectral;
  throw InvalidInput("unknown chart kind '" + s + "'");
}

void DarbouxChart::validate() const {
  if (first.size() != second.size()) throw InvalidInput("chart coordinate vectors differ in length");
  if (kind == ChartKind::qp)
    for (std::size_t i = 0; i < first.size(); ++i)
      for (std::size_t j = i + 1; j < first.size(); ++j)
        if (first[i] == first[j]) throw CoincidentNodes(i, j);
}

Rational IrregularTimes::operator()(int k) const {
  if (k < 1 || k > static_cast<int>(t.size())) return 0;
  return t[static_cast<std::size_t>(k - 1)];
}

Rational& IrregularTimes::at(int k) {
  if (k < 1 || k > static_cast<int>(t.size())) throw InvalidInput("time index out of range");
  return t[static_cast<std::size_t>(k - 1)];
}

void IrregularTimes::validate() const {
  if (r_inf < 3) throw InvalidInput("r_inf must be at least 3");
  if (static_cast<int>(t.size()) != count())
    throw InvalidInput("expected " + std::to_string(count()) + " times, got " + std::to_string(t.size()));
  if ((*this)(2 * r_inf - 3) == 0) throw InvalidInput("t_{2r-3} must be nonzero");
}

IrregularTimes canonical_times(int r_inf, const RVec& tau, const Rational& hbar) {
  if (r_inf < 3) throw InvalidInput("r_inf must be at least 3");
  if (static_cast<int>(tau.size()) != r_inf - 3) throw InvalidInput("expected g = r_inf - 3 tau values");
  IrregularTimes times{r_inf, RVec(static_cast<std::size_t>(2 * r_inf - 2)), hbar};
  times.at(2 * r_inf - 3) = 2;
  for (int k = 1; k <= r_inf - 3; ++k) times.at(2 * k - 1) = 2 * tau[static_cast<std::size_t>(r_inf - k - 3)];
  return times;
}

namespace {

NormalizationReport fail(std::string block, std::string entry, std::string detail) {
  return {false, std::move(block), std::move(entry), std::move(detail)};
}

}  // namespace

NormalizationReport validate_normalization(const TwistedConnection& c) {
  const int r = c.r_inf;
  const auto& t = c.times;
  const RatFunc* entries[4] = {&c.m.a, &c.m.b, &c.m.c, &c.m.d};
  const char* names[4] = {"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
  UniPoly poly[4];
  for (int i = 0; i < 4; ++i) {
    if (!entries[i]->is_polynomial()) return fail("shape", names[i], "entry has finite poles");
    poly[i] = entries[i]->num();
    if (poly[i].degree() > r - 2) return fail("shape", names[i], "degree exceeds r-2");
  }
  Rational lead_diag = Rational(-t(2 * r - 2)) / 2;
  Rational lead[4] = {lead_diag, 0, t(2 * r - 3) * t(2 * r - 3) / 4, lead_diag};
  for (int i = 0; i < 4; ++i)
    if (poly[i].coeff(r - 2) != lead[i])
      return fail("leading", names[i], "expected " + to_string(lead[i]) + ", got " + to_string(poly[i].coeff(r - 2)));

  Rational sub_diag = Rational(-t(2 * r - 4)) / 2;
  if (poly[0].coeff(r - 3) != sub_diag) return fail("subleading", "(1,1)", "expected " + to_string(sub_diag));
  if (poly[1].coeff(r - 3) != 1) return fail("subleading", "(1,2)", "expected 1");
  if (poly[1].degree() != r - 3) return fail("shape", "(1,2)", "not monic of degree g");
  if (poly[3].coeff(r - 3) != sub_diag) return fail("subleading", "(2,2)", "expected " + to_string(sub_diag));
  return {};
}

SpectralCurve spectral_curve(const TwistedConnection& c) {
  RatFunc tr = c.m.trace(), det = c.m.det();
  if (!tr.is_polynomial() || !det.is_polynomial()) throw NonPolynomialDet();
  return {tr.num(), det.num()};
}

int default_series_order2(int r_inf) { return -2 * r_inf - 4; }

std::pair<HalfSeries, HalfSeries> eigenvalue_series(const SpectralCurve& curve, int r_inf,
                                                    const Rational& leading_time, int order2) {
  if (leading_time == 0) throw InvalidInput("t_{2r-3} must be nonzero");
  // exact polynomial input: any order below the square root's needs is fine
  int in_order = order2 - 4 * r_inf - 8;
  HalfSeries half_tr = HalfSeries::from_poly(curve.trace, in_order) * Rational(1, 2);
  HalfSeries disc = half_tr * half_tr - HalfSeries::from_poly(curve.det, in_order);
  HalfSeries root = series_sqrt(disc, order2);
  int top = 2 * r_inf - 5;
  if (root.coeff2(top) == 0) throw InvalidInput("spectral curve has unexpected leading order");
  Rational sign = root.coeff2(top) * leading_time < 0 ? 1 : -1;
  HalfSeries y1 = (half_tr + sign * root).truncated(order2);
  HalfSeries y2 = (half_tr - sign * root).truncated(order2);
  return {y1, y2};
}

RVec extract_birkhoff_times(const HalfSeries& y1, int r_inf) {
  RVec t;
  for (int k = 1; k <= 2 * r_inf - 2; ++k) t.push_back(residue_at_infinity(y1.times_power(-k)));
  return t;
}

RVec extract_isospectral_hams(const HalfSeries& y1, int r_inf) {
  RVec out;
  for (int k = 1; k <= 2 * r_inf - 2; ++k) out.push_back(y1.coeff2(-k - 2) / k);
  return out;
}

SpectralData spectral_data(const TwistedConnection& c, int order2) {
  auto curve = spectral_curve(c);
  auto [y1, y2] = eigenvalue_series(curve, c.r_inf, c.times(2 * c.r_inf - 3), order2);
  SpectralData d;
  d.r_inf = c.r_inf;
  d.birkhoff_times = extract_birkhoff_times(y1, c.r_inf);
  d.iso_hams = extract_isospectral_hams(y1, c.r_inf);
  d.y1 = std::move(y1);
  d.y2 = std::move(y2);
  return d;
}

}  // namespace isomon
