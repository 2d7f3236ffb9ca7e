#include "isomon/correspondence.hpp"

#include "isomon/errors.hpp"
#include "isomon/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

namespace isomon {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::vector<int> free_odd_times(int r) {
  std::vector<int> ks;
  for (int k = 2 * r - 7; k >= 3; k -= 2) ks.push_back(k);
  return ks;
}

std::map<int, std::vector<MultiPoly>> nu_table(const ShiftSolution& sol) {
  std::map<int, std::vector<MultiPoly>> nus;
  for (int k : sol.time_indices) nus.emplace(k, slice_nu(sol.r_inf, k, sol.variables()));
  return nus;
}

MultiPoly rhs_with(const ShiftSolution& sol, const std::vector<MultiPoly>& nu, int m) {
  const int g = sol.r_inf - 3;
  const auto& vars = sol.variables();
  if (m >= g - 1) return MultiPoly(vars);
  MultiPoly s = nu[sz(g - 2 - m)] * sol.weights.diagonal;
  for (int n = m + 2; n <= g - 1; ++n) s += nu[sz(n - m - 2)] * sol.coords[sz(n)] * sol.weights.coupling;
  return s * Rational(m + 1);
}

std::map<std::string, Rational> time_values(const ShiftSolution& sol, const IrregularTimes& times) {
  std::map<std::string, Rational> v;
  for (int k : sol.time_indices) v[time_variable(k)] = times(k);
  return v;
}

}  // namespace

ShiftWeights geometric_shift_weights() { return {1, 1}; }
ShiftWeights lax_shift_weights() { return {0, 1}; }

std::string time_variable(int k) { return "t" + std::to_string(k); }

std::vector<MultiPoly> slice_nu(int r, int k, const std::vector<std::string>& vars) {
  const int g = r - 3;
  auto col = [&](int i) -> MultiPoly {
    if (i == 0) return MultiPoly::constant(vars, 2);
    const int idx = 2 * r - 3 - 2 * i;
    if (i == 1 || idx < 3) return MultiPoly(vars);
    return MultiPoly::variable(vars, time_variable(idx));
  };
  // rows nu_{-1}..nu_{g-1}
  std::vector<MultiPoly> nu;
  for (int i = 0; i <= g; ++i) {
    MultiPoly s(vars);
    if (2 * r - 3 - 2 * i == k) s = MultiPoly::constant(vars, Rational(2, k));
    for (int l = 0; l < i; ++l) s -= col(i - l) * nu[sz(l)];
    nu.push_back(s * Rational(1, 2));
  }
  return std::vector<MultiPoly>(nu.begin() + 2, nu.end());
}

ShiftSolution solve_shift_system(int r, const std::string& constant, const ShiftWeights& weights) {
  if (r < 4) throw InvalidInput("shift system needs r_inf >= 4");
  const int g = r - 3;
  ShiftSolution sol;
  sol.r_inf = r;
  sol.constant = constant;
  sol.weights = weights;
  sol.time_indices = free_odd_times(r);
  std::vector<std::string> vars;
  for (auto it = sol.time_indices.rbegin(); it != sol.time_indices.rend(); ++it) vars.push_back(time_variable(*it));
  for (int m = 0; m < g; ++m) vars.push_back(constant + std::to_string(m));
  sol.coords.assign(sz(g), MultiPoly(vars));
  sol.coords[sz(g - 1)] = MultiPoly::variable(vars, constant + std::to_string(g - 1));
  auto nus = nu_table(sol);
  for (int m = g - 2; m >= 0; --m) {
    MultiPoly F(vars);
    std::vector<std::string> done;
    for (int k : sol.time_indices) {
      const std::string tk = time_variable(k);
      MultiPoly rest = rhs_with(sol, nus.at(k), m) - F.derivative(tk);
      for (const auto& d : done)
        if (rest.depends_on(d))
          throw InconsistentIntegration(constant + std::to_string(m) + " along " + tk + " depends on " + d);
      F += multipoly_integrate(rest, tk);
      done.push_back(tk);
    }
    sol.coords[sz(m)] = F + MultiPoly::variable(vars, constant + std::to_string(m));
  }
  return sol;
}

ShiftSolution solve_isospectral_u(int r) { return solve_shift_system(r, "u", geometric_shift_weights()); }
ShiftSolution solve_isospectral_v(int r) { return solve_shift_system(r, "v", lax_shift_weights()); }

MultiPoly shift_rhs(const ShiftSolution& sol, int m, int k) {
  return rhs_with(sol, slice_nu(sol.r_inf, k, sol.variables()), m);
}

CompatibilityReport flow_compatibility_check(const ShiftSolution& sol) {
  const int g = sol.r_inf - 3;
  auto nus = nu_table(sol);
  auto check = [&](int m) -> CompatibilityReport {
    std::map<int, MultiPoly> rhs;
    for (int k : sol.time_indices) {
      rhs.emplace(k, rhs_with(sol, nus.at(k), m));
      if (!(sol.coords[sz(m)].derivative(time_variable(k)) == rhs.at(k)))
        return {false, k, k, m, "first-order system fails"};
    }
    for (std::size_t a = 0; a < sol.time_indices.size(); ++a)
      for (std::size_t b = a + 1; b < sol.time_indices.size(); ++b) {
        int i = sol.time_indices[a], j = sol.time_indices[b];
        if (!(rhs.at(i).derivative(time_variable(j)) == rhs.at(j).derivative(time_variable(i))))
          return {false, i, j, m, "mixed partials differ"};
      }
    return {};
  };
  std::vector<std::future<CompatibilityReport>> jobs;
  for (int m = 0; m < g; ++m) jobs.push_back(std::async(std::launch::async, check, m));
  CompatibilityReport out;
  for (auto& j : jobs) {
    CompatibilityReport rep = j.get();
    if (out.ok && !rep.ok) out = rep;
  }
  return out;
}

RVec invert_shift(const ShiftSolution& sol, const RVec& values, const IrregularTimes& times) {
  const int g = sol.r_inf - 3;
  if (static_cast<int>(values.size()) != g) throw InvalidInput("need one value per shifted coordinate");
  auto env = time_values(sol, times);
  for (int m = 0; m < g; ++m) env[sol.constant + std::to_string(m)] = 0;
  RVec c(sz(g));
  for (int m = g - 1; m >= 0; --m) {
    c[sz(m)] = values[sz(m)] - sol.coords[sz(m)].evaluate(env);
    env[sol.constant + std::to_string(m)] = c[sz(m)];
  }
  return c;
}

DarbouxChart map_qp_to_uv(const DarbouxChart& qp, const IrregularTimes& times, const ShiftSolution& u,
                          const ShiftSolution& v) {
  if (!on_canonical_slice(times)) throw InvalidInput("isospectral coordinates need the canonical slice");
  DarbouxChart geo = geometric_forward(qp);
  DarbouxChart lax = lax_forward(geo, times);
  return {ChartKind::isospectral, invert_shift(u, geo.first, times), invert_shift(v, lax.second, times)};
}

DarbouxChart map_qp_to_uv(const DarbouxChart& qp, const IrregularTimes& times) {
  return map_qp_to_uv(qp, times, solve_isospectral_u(times.r_inf), solve_isospectral_v(times.r_inf));
}

RVec evaluate_shift(const ShiftSolution& sol, const RVec& constants, const IrregularTimes& times) {
  const int g = sol.r_inf - 3;
  if (static_cast<int>(constants.size()) != g) throw InvalidInput("need one constant per shifted coordinate");
  auto env = time_values(sol, times);
  for (int m = 0; m < g; ++m) env[sol.constant + std::to_string(m)] = constants[sz(m)];
  RVec out;
  for (const auto& c : sol.coords) out.push_back(c.evaluate(env));
  return out;
}

DarbouxChart map_uv_to_qp(const DarbouxChart& uv, const IrregularTimes& times, const ShiftSolution& u,
                          const ShiftSolution& v) {
  if (!on_canonical_slice(times)) throw InvalidInput("isospectral coordinates need the canonical slice");
  DarbouxChart lax{ChartKind::lax, evaluate_shift(u, uv.first, times), evaluate_shift(v, uv.second, times)};
  return geometric_backward(lax_backward(lax, times));
}

DarbouxChart map_uv_to_qp(const DarbouxChart& uv, const IrregularTimes& times) {
  return map_uv_to_qp(uv, times, solve_isospectral_u(times.r_inf), solve_isospectral_v(times.r_inf));
}

Evolution isospectral_flow(const DarbouxChart& qp, const IrregularTimes& times, int k) {
  if (!on_canonical_slice(times)) throw InvalidInput("isospectral flow needs the canonical slice");
  if (k < 1 || k > 2 * times.r_inf - 7 || k % 2 == 0) throw InvalidInput("flow must keep the canonical slice");
  const std::size_t g = qp.genus();
  DeformationVector alpha = DeformationVector::unit(times.r_inf, k);
  DarbouxChart geo = geometric_forward(qp);
  DarbouxChart lax = lax_forward(geo, times);
  UniPoly dA12 = matrices_in_geometric(geo, times, alpha).A12.derivative();
  UniPoly dA11 = matrices_in_lax(lax, times, alpha).A11.derivative();
  RVec rhs;
  for (std::size_t m = 0; m < g; ++m) rhs.push_back(dA12.coeff(static_cast<int>(m)));
  for (std::size_t m = 0; m < g; ++m) rhs.push_back(dA11.coeff(static_cast<int>(m)));
  RVec x = dense_solve(matmul(lax_jacobian(geo, times), geometric_jacobian(qp)), rhs);
  return {RVec(x.begin(), x.begin() + static_cast<long>(g)), RVec(x.begin() + static_cast<long>(g), x.end())};
}

InvarianceReport euler_invariance(const DarbouxChart& qp, const IrregularTimes& times, int k,
                                  const std::vector<Rational>& steps) {
  ShiftSolution u = solve_isospectral_u(times.r_inf), v = solve_isospectral_v(times.r_inf);
  DarbouxChart base = map_qp_to_uv(qp, times, u, v);
  Evolution flow = isospectral_flow(qp, times, k);
  InvarianceReport rep;
  for (const auto& h : steps) {
    DarbouxChart moved = qp;
    for (std::size_t j = 0; j < qp.genus(); ++j) {
      moved.first[j] += h * flow.qdot[j];
      moved.second[j] += h * flow.pdot[j];
    }
    IrregularTimes later = times;
    later.at(k) += h;
    DarbouxChart uv = map_qp_to_uv(moved, later, u, v);
    double drift = 0;
    for (std::size_t j = 0; j < qp.genus(); ++j) {
      drift = std::max(drift, std::abs(to_double(uv.first[j] - base.first[j])));
      drift = std::max(drift, std::abs(to_double(uv.second[j] - base.second[j])));
    }
    rep.samples.push_back({to_double(h), drift});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(rep.samples.size());
  for (const auto& s : rep.samples) {
    double x = std::log10(s.h), y = std::log10(s.drift);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

}  // namespace isomon
