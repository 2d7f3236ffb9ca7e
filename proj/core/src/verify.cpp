#include "isomon/verify.hpp"

#include "isomon/correspondence.hpp"
#include "isomon/errors.hpp"
#include "isomon/reduction.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>

namespace isomon {

namespace {

const Rational kPerturbation(1, 7);

class Sampler {
 public:
  Sampler(std::uint64_t seed, Suite suite, int r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(r)};
    rng_.seed(seq);
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 6, int max_den = 3) {
    Rational q(integer(-span, span), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  RVec vec(int n) {
    RVec v;
    for (int i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  DarbouxChart chart(int genus) {
    RVec q;
    while (static_cast<int>(q.size()) < genus) {
      Rational x = rational(9, 4);
      if (std::find(q.begin(), q.end(), x) == q.end()) q.push_back(x);
    }
    return qp_chart(q, vec(genus));
  }

  IrregularTimes times(int r) {
    IrregularTimes t{r, vec(2 * r - 2), 1};
    while (t(2 * r - 3) == 0) t.at(2 * r - 3) = rational();
    return t;
  }

  // trivial times random with T2 a rational square
  ReducedTimes reduced(int r) {
    ReducedTimes rt;
    rt.r_inf = r;
    rt.tau = vec(r - 3);
    rt.T_inf = vec(r - 1);
    rt.T1 = rational(3, 3);
    Rational a(integer(1, 4), integer(1, 3));
    a.canonicalize();
    rt.T2 = a * a;
    return rt;
  }

 private:
  std::mt19937_64 rng_;
};

class Tally {
 public:
  Tally(std::string identity, int r) { c_.identity = std::move(identity), c_.r_inf = r; }

  // runs one sample; exceptions count as failures
  void run(int sample, const std::function<std::string()>& body) {
    ++c_.samples;
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    if (!detail.empty() && c_.ok) {
      c_.ok = false;
      c_.detail = "sample " + std::to_string(sample) + ": " + detail;
    }
  }

  IdentityCheck result() const { return c_; }

 private:
  IdentityCheck c_;
};

bool is_zero(const Mat2<RatFunc>& m) { return m.a.is_zero() && m.b.is_zero() && m.c.is_zero() && m.d.is_zero(); }

std::string nonzero_entries(const Mat2<RatFunc>& m) {
  std::string s;
  if (!m.a.is_zero()) s += "(1,1) ";
  if (!m.b.is_zero()) s += "(1,2) ";
  if (!m.c.is_zero()) s += "(2,1) ";
  if (!m.d.is_zero()) s += "(2,2) ";
  return "residual nonzero at " + s;
}

std::vector<IdentityCheck> gauge_checks(int r, const SuiteOptions& opt, Sampler& gen) {
  Tally normal("normalization of the gauge image", r), round("gauge_forward recovers the companion matrix", r),
      nodes("apparent singularities recover the chart", r);
  for (int i = 0; i < opt.samples; ++i) {
    IrregularTimes t = gen.times(r);
    DarbouxChart c = gen.chart(r - 3);
    OperData o = build_oper(c, t);
    TwistedConnection lt = gauge_backward(o, gauge_matrix(c, t));
    if (opt.perturb) lt.m.c = lt.m.c + RatFunc(UniPoly(kPerturbation));
    normal.run(i, [&] {
      NormalizationReport rep = validate_normalization(lt);
      return rep.ok ? std::string() : rep.block + " " + rep.entry + " " + rep.detail;
    });
    round.run(i, [&] { return gauge_forward(lt) == o.L ? std::string() : "companion matrix differs"; });
    nodes.run(i, [&] { return apparent_singularities(lt) == c ? std::string() : "chart differs"; });
  }
  return {normal.result(), round.result(), nodes.result()};
}

std::vector<IdentityCheck> zero_curvature_checks(int r, const SuiteOptions& opt, Sampler& gen) {
  Tally basis("zero curvature along every basis direction", r), tau("zero curvature along every tau direction", r);
  auto residual = [&](const DeformationVector& dir, const DarbouxChart& c, const IrregularTimes& t) {
    OperData o = build_oper(c, t);
    if (opt.perturb) o.L.c = o.L.c + RatFunc(UniPoly(kPerturbation));
    return zero_curvature_residual(dir, o);
  };
  for (int i = 0; i < opt.samples; ++i) {
    IrregularTimes t = gen.times(r);
    DarbouxChart c = gen.chart(r - 3);
    basis.run(i, [&] {
      for (int k = 1; k <= 2 * r - 2; ++k) {
        Mat2<RatFunc> res = residual(DeformationVector::unit(r, k), c, t);
        if (!is_zero(res)) return "e_" + std::to_string(k) + ": " + nonzero_entries(res);
      }
      return std::string();
    });
    if (r < 4) continue;
    ReducedTimes rt = ReducedTimes::canonical(r, gen.vec(r - 3));
    IrregularTimes slice = times_backward(rt);
    tau.run(i, [&] {
      for (int j = 1; j <= r - 3; ++j) {
        Mat2<RatFunc> res = residual(tau_direction(rt, j), c, slice);
        if (!is_zero(res)) return "tau_" + std::to_string(j) + ": " + nonzero_entries(res);
      }
      return std::string();
    });
  }
  std::vector<IdentityCheck> out{basis.result()};
  if (r >= 4) out.push_back(tau.result());
  return out;
}

std::vector<IdentityCheck> reduction_checks(int r, const SuiteOptions& opt, Sampler& gen) {
  Tally agree("reduced Hamiltonian equals the general one on the canonical slice", r),
      trivial("trivial flows of shifted coordinates vanish", r), two_form("two-form reduction", r),
      invariant("reduced Hamiltonian independent of the trivial times", r);
  for (int i = 0; i < opt.samples; ++i) {
    RVec tau = gen.vec(r - 3);
    ReducedTimes canon = ReducedTimes::canonical(r, tau);
    IrregularTimes slice = times_backward(canon);
    DarbouxChart c = gen.chart(r - 3);
    RVec reduced_tau = tau;
    if (opt.perturb && !reduced_tau.empty()) reduced_tau[0] += kPerturbation;
    agree.run(i, [&] {
      for (int j = 1; j <= r - 3; ++j)
        if (reduced_hamiltonian(reduced_tau, r, c, j) != general_hamiltonian(tau_direction(canon, j), c, slice))
          return "direction tau_" + std::to_string(j);
      return std::string();
    });
    ReducedTimes rt = gen.reduced(r);
    IrregularTimes t = times_backward(rt);
    trivial.run(i, [&] {
      CheckReport rep = trivial_flow_check(c, t);
      return rep.ok ? std::string() : rep.direction + " " + rep.detail;
    });
    two_form.run(i, [&] {
      CheckReport rep = two_form_reduction_check(c, t);
      return rep.ok ? std::string() : rep.direction + " " + rep.detail;
    });
    DarbouxChart other = gen.chart(r - 3);
    RVec rt_tau = rt.tau;
    if (opt.perturb && !rt_tau.empty()) rt_tau[0] += kPerturbation;
    invariant.run(i, [&] {
      // shifted minus reduced may only depend on the times
      for (int j = 1; j <= r - 3; ++j) {
        DeformationVector dir = tau_direction(rt, j);
        Rational a = shifted_hamiltonian(dir, unshift_coordinates(c, t), t) - reduced_hamiltonian(rt_tau, r, c, j);
        Rational b = shifted_hamiltonian(dir, unshift_coordinates(other, t), t) - reduced_hamiltonian(rt_tau, r, other, j);
        if (a != b) return "direction tau_" + std::to_string(j) + " offset depends on the chart";
      }
      return std::string();
    });
  }
  return {agree.result(), trivial.result(), two_form.result(), invariant.result()};
}

std::vector<IdentityCheck> correspondence_checks(int r, const SuiteOptions& opt, Sampler& gen) {
  Tally routes("isospectral Hamiltonians by eigenvalues and by the H-I map", r),
      charts("first rows agree across qp, geometric and Lax charts", r),
      symplectic("(q,p) to (Q,P) is symplectic", r), in_i("Hamiltonian through I equals the reduced one", r),
      compat("shift polynomials are compatible", r);
  for (int i = 0; i < opt.samples; ++i) {
    RVec tau = gen.vec(r - 3);
    IrregularTimes slice = canonical_times(r, tau);
    DarbouxChart c = gen.chart(r - 3);
    routes.run(i, [&] {
      HIMap map = h_i_map(c, slice);
      if (opt.perturb && !map.N.empty()) map.N[0] += kPerturbation;
      return isospectral_from_oper(map, map.H) == isospectral_hams_by_eigenvalues(c, slice) ? std::string()
                                                                                            : "I vectors differ";
    });
    IrregularTimes t = gen.times(r);
    DeformationVector alpha{gen.vec(2 * r - 2)};
    charts.run(i, [&] {
      DarbouxChart geo = geometric_forward(c);
      if (opt.perturb && !geo.second.empty()) geo.second[0] += kPerturbation;
      FirstRows a = matrices_in_qp(c, t, alpha);
      if (!(matrices_in_geometric(geo, t, alpha) == a)) return std::string("geometric chart differs");
      if (!(matrices_in_lax(lax_forward(geo, t), t, alpha) == a)) return std::string("Lax chart differs");
      return std::string();
    });
    symplectic.run(i, [&] { return is_symplectic(geometric_jacobian(c)) ? std::string() : "not symplectic"; });
    in_i.run(i, [&] {
      for (int j = 1; j <= r - 3; ++j)
        if (hamiltonian_in_I(tau, c, j) != reduced_hamiltonian(tau, r, c, j)) return "direction tau_" + std::to_string(j);
      return std::string();
    });
  }
  compat.run(0, [&] {
    for (ShiftSolution s : {solve_isospectral_u(r), solve_isospectral_v(r)}) {
      if (opt.perturb && !s.time_indices.empty())
        s.coords[0] += MultiPoly::variable(s.variables(), time_variable(s.time_indices.back())) * kPerturbation;
      CompatibilityReport rep = flow_compatibility_check(s);
      if (!rep.ok)
        return s.constant + " coordinate " + std::to_string(rep.k) + ", times " + std::to_string(rep.i) + "," +
               std::to_string(rep.j) + ": " + rep.detail;
    }
    return std::string();
  });
  std::vector<IdentityCheck> out{routes.result(), charts.result(), symplectic.result(), in_i.result()};
  if (r >= 4) out.push_back(compat.result());
  return out;
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::gauge: return "gauge";
    case Suite::zero_curvature: return "zero-curvature";
    case Suite::reduction: return "reduction";
    case Suite::correspondence: return "correspondence";
  }
  return "";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  throw InvalidInput("unknown suite '" + name + "'");
}

std::vector<Suite> all_suites() { return {Suite::gauge, Suite::zero_curvature, Suite::reduction, Suite::correspondence}; }

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok; });
}

SuiteReport run_suite(Suite suite, const SuiteOptions& options) {
  const int lowest = suite == Suite::gauge || suite == Suite::zero_curvature ? 3 : 4;
  for (int r : options.r_values)
    if (r < lowest) throw InvalidInput("suite " + to_string(suite) + " needs r_inf >= " + std::to_string(lowest));
  auto one = [&](int r) {
    Sampler gen(options.seed, suite, r);
    switch (suite) {
      case Suite::gauge: return gauge_checks(r, options, gen);
      case Suite::zero_curvature: return zero_curvature_checks(r, options, gen);
      case Suite::reduction: return reduction_checks(r, options, gen);
      case Suite::correspondence: return correspondence_checks(r, options, gen);
    }
    return std::vector<IdentityCheck>{};
  };
  std::vector<std::future<std::vector<IdentityCheck>>> jobs;
  for (int r : options.r_values) jobs.push_back(std::async(std::launch::async, one, r));
  SuiteReport report{suite, {}};
  for (auto& j : jobs) {
    auto part = j.get();
    report.checks.insert(report.checks.end(), part.begin(), part.end());
  }
  return report;
}

}  // namespace isomon
