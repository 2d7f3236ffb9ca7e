#include "commands.hpp"

#include "isomon/correspondence.hpp"
#include "isomon/errors.hpp"
#include "isomon/reduction.hpp"
#include "isomon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace isomon::cli {

using nlohmann::json;

namespace {

struct NumericAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rational_json(const Rational& x) { return to_string(x); }

json vector_json(const RVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

json chart_json(const DarbouxChart& c) {
  return {{"kind", to_string(c.kind)}, {"first", vector_json(c.first)}, {"second", vector_json(c.second)}};
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  Rational rational(int span = 6, int max_den = 3) {
    Rational r(std::uniform_int_distribution<int>(-span, span)(rng_), std::uniform_int_distribution<int>(1, max_den)(rng_));
    r.canonicalize();
    return r;
  }

  RVec vec(int n) {
    RVec v;
    for (int i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  RVec distinct(int n) {
    RVec v;
    while (static_cast<int>(v.size()) < n) {
      Rational x = rational(9, 4);
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

void check_rank(const RunConfig& c) {
  if (c.r_inf < 3) throw InvalidInput("r_inf must be at least 3");
}

// times from the config and the tau they reduce to
std::pair<IrregularTimes, RVec> resolve_times(const RunConfig& c, Draw& draw) {
  check_rank(c);
  const int g = c.r_inf - 3;
  if (c.times) {
    if (c.tau) throw InvalidInput("give either times or tau, not both");
    if (static_cast<int>(c.times->size()) != 2 * c.r_inf - 2)
      throw InvalidInput("expected " + std::to_string(2 * c.r_inf - 2) + " times");
    IrregularTimes t{c.r_inf, *c.times, c.hbar};
    t.validate();
    return {t, times_forward(t).tau};
  }
  RVec tau = c.tau ? *c.tau : draw.vec(g);
  if (static_cast<int>(tau.size()) != g) throw InvalidInput("expected g = r_inf - 3 = " + std::to_string(g) + " tau values");
  return {canonical_times(c.r_inf, tau, c.hbar), tau};
}

DarbouxChart resolve_chart(const RunConfig& c, Draw& draw) {
  const int g = c.r_inf - 3;
  RVec q = c.q ? *c.q : draw.distinct(g);
  RVec p = c.p ? *c.p : draw.vec(g);
  if (static_cast<int>(q.size()) != g || static_cast<int>(p.size()) != g)
    throw InvalidInput("expected g = r_inf - 3 = " + std::to_string(g) + " values of q and of p");
  DarbouxChart chart = qp_chart(q, p);
  chart.validate();
  return chart;
}

json envelope(const RunConfig& c, const std::string& command) {
  return {{"command", command}, {"config", config_json(c, command)}, {"seed", c.seed}, {"version", ISOMON_VERSION}};
}

double finite(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e100) throw NumericAbort("state left the finite range");
  return x;
}

struct FlowState {
  std::vector<double> q, p;
  double tau = 0;
};

}  // namespace

json config_json(const RunConfig& c, const std::string& command) {
  json j{{"r_inf", c.r_inf}, {"hbar", rational_json(c.hbar)}, {"seed", c.seed}};
  if (c.tau) j["tau"] = vector_json(*c.tau);
  if (c.times) j["times"] = vector_json(*c.times);
  if (c.q) j["q"] = vector_json(*c.q);
  if (c.p) j["p"] = vector_json(*c.p);
  if (command == "hamiltonian") j["order"] = c.order;
  if (command == "verify") {
    j["suites"] = c.suites;
    j["r_values"] = c.r_values;
    j["samples"] = c.samples;
    j["perturb"] = c.perturb;
  }
  if (command == "flow-demo") {
    j["steps"] = c.steps;
    j["step_size"] = c.step_size;
    j["direction"] = c.direction;
    j["every"] = c.every;
  }
  return j;
}

Outcome cmd_hamiltonian(const RunConfig& c) {
  Draw draw(c.seed);
  auto [times, tau] = resolve_times(c, draw);
  json out = envelope(c, "hamiltonian");
  json result{{"times", vector_json(times.t)}, {"tau", vector_json(tau)}};
  if (c.r_inf == 3) {
    result["H"] = json::array();
    result["hamiltonians"] = json::array();
    result["note"] = "g=0: Airy case, no coordinates";
    out["result"] = result;
    return {out, pass};
  }
  DarbouxChart chart = resolve_chart(c, draw);
  result["chart"] = chart_json(chart);
  result["H"] = vector_json(oper_coeffs_H(chart, times));
  ReducedTimes rt = times_forward(times);
  json hams = json::array();
  for (int j = 1; j <= c.r_inf - 3; ++j)
    hams.push_back({{"direction", "tau_" + std::to_string(j)},
                    {"value", rational_json(general_hamiltonian(tau_direction(rt, j), chart, times))}});
  result["hamiltonians"] = hams;
  const int order = c.order > 0 ? c.order : default_series_order2(c.r_inf);
  result["isospectral_hamiltonians"] = vector_json(spectral_data(build_connection(chart, times), order).iso_hams);
  if (c.r_inf == 4) {
    result["painleve_one"] = {
        {"hamiltonian_t1", painleve_one_hamiltonian().to_string()},
        {"value_t1", rational_json(general_hamiltonian(DeformationVector::unit(4, 1), chart, times))},
        {"equation", "q'' = " + painleve_one_second_derivative().to_string()}};
  }
  out["result"] = result;
  return {out, pass};
}

Outcome cmd_verify(const RunConfig& c) {
  if (c.suites.empty()) throw InvalidInput("no suite given");
  std::vector<Suite> suites;
  for (const auto& name : c.suites) {
    if (name == "all") {
      for (Suite s : all_suites())
        if (std::find(suites.begin(), suites.end(), s) == suites.end()) suites.push_back(s);
      continue;
    }
    Suite s = parse_suite(name);
    if (std::find(suites.begin(), suites.end(), s) == suites.end()) suites.push_back(s);
  }
  if (c.samples < 1) throw InvalidInput("samples must be positive");
  SuiteOptions opt{c.r_values, c.samples, c.seed, c.perturb};
  json out = envelope(c, "verify");
  json reports = json::array();
  bool ok = true;
  for (Suite s : suites) {
    SuiteReport rep = run_suite(s, opt);
    json checks = json::array();
    for (const auto& ch : rep.checks)
      checks.push_back({{"identity", ch.identity}, {"r_inf", ch.r_inf}, {"samples", ch.samples}, {"pass", ch.ok},
                        {"detail", ch.detail}});
    reports.push_back({{"suite", to_string(s)}, {"pass", rep.ok()}, {"checks", checks}});
    ok = ok && rep.ok();
  }
  out["result"] = {{"pass", ok}, {"suites", reports}};
  return {out, ok ? pass : identity_failure};
}

Outcome cmd_correspond(const RunConfig& c) {
  Draw draw(c.seed);
  auto [times, tau] = resolve_times(c, draw);
  if (!on_canonical_slice(times)) throw InvalidInput("the correspondence needs the canonical slice");
  if (c.r_inf < 4) throw InvalidInput("the correspondence needs r_inf >= 4");
  DarbouxChart chart = resolve_chart(c, draw);
  ShiftSolution u = solve_isospectral_u(c.r_inf), v = solve_isospectral_v(c.r_inf);
  DarbouxChart geo = geometric_forward(chart);
  DarbouxChart lax = lax_forward(geo, times);
  DarbouxChart uv = map_qp_to_uv(chart, times, u, v);
  DarbouxChart back = map_uv_to_qp(uv, times, u, v);
  bool round_trip = map_qp_to_uv(back, times, u, v) == uv && back == geometric_backward(geo);
  json shifts = json::array();
  for (const auto* sol : {&u, &v})
    for (std::size_t m = 0; m < sol->coords.size(); ++m)
      shifts.push_back({{"coordinate", std::string(sol == &u ? "Q_" : "R_") + std::to_string(m)},
                        {"polynomial", sol->coords[m].to_string()}});
  json out = envelope(c, "correspond");
  out["result"] = {{"times", vector_json(times.t)}, {"tau", vector_json(tau)},     {"qp", chart_json(chart)},
                   {"geometric", chart_json(geo)},  {"lax", chart_json(lax)},       {"isospectral", chart_json(uv)},
                   {"shift_polynomials", shifts},   {"round_trip", round_trip}};
  return {out, round_trip ? pass : identity_failure};
}

Outcome cmd_flow_demo(const RunConfig& c) {
  check_rank(c);
  if (c.r_inf < 4 || c.r_inf > 6) throw InvalidInput("flow-demo supports r_inf 4, 5 and 6");
  if (!(c.step_size > 0) || !std::isfinite(c.step_size)) throw InvalidInput("step size must be positive and finite");
  if (c.steps < 0) throw InvalidInput("steps must be non-negative");
  if (c.every < 1) throw InvalidInput("every must be positive");
  const int g = c.r_inf - 3;
  if (c.direction < 1 || c.direction > g) throw InvalidInput("direction must lie in 1..g");
  Draw draw(c.seed);
  auto [times, tau0] = resolve_times(c, draw);
  if (!on_canonical_slice(times)) throw InvalidInput("flow-demo starts on the canonical slice");
  DarbouxChart chart = resolve_chart(c, draw);
  ShiftSolution u = solve_isospectral_u(c.r_inf), v = solve_isospectral_v(c.r_inf);
  const std::size_t dir = static_cast<std::size_t>(c.direction - 1);

  auto exact = [&](const FlowState& s) {
    RVec tau = tau0, q, p;
    tau[dir] = Rational(s.tau);
    for (int j = 0; j < g; ++j) {
      q.push_back(Rational(finite(s.q[static_cast<std::size_t>(j)])));
      p.push_back(Rational(finite(s.p[static_cast<std::size_t>(j)])));
    }
    return std::pair{ReducedTimes::canonical(c.r_inf, tau, c.hbar), qp_chart(q, p)};
  };
  auto field = [&](const FlowState& s) {
    auto [rt, ch] = exact(s);
    Evolution e = hamiltonian_flow(tau_direction(rt, c.direction), ch, times_backward(rt));
    FlowState d{{}, {}, 1};
    for (int j = 0; j < g; ++j) {
      d.q.push_back(to_double(e.qdot[static_cast<std::size_t>(j)]));
      d.p.push_back(to_double(e.pdot[static_cast<std::size_t>(j)]));
    }
    return d;
  };
  auto axpy = [](const FlowState& s, const FlowState& d, double h) {
    FlowState o = s;
    for (std::size_t j = 0; j < s.q.size(); ++j) {
      o.q[j] += h * d.q[j];
      o.p[j] += h * d.p[j];
    }
    o.tau += h * d.tau;
    return o;
  };
  auto rk4 = [&](FlowState s, double h) {
    FlowState k1 = field(s), k2 = field(axpy(s, k1, h / 2)), k3 = field(axpy(s, k2, h / 2)), k4 = field(axpy(s, k3, h));
    for (std::size_t j = 0; j < s.q.size(); ++j) {
      s.q[j] += h / 6 * (k1.q[j] + 2 * k2.q[j] + 2 * k3.q[j] + k4.q[j]);
      s.p[j] += h / 6 * (k1.p[j] + 2 * k2.p[j] + 2 * k3.p[j] + k4.p[j]);
    }
    s.tau += h;
    return s;
  };
  auto isospectral = [&](const FlowState& s) {
    auto [rt, ch] = exact(s);
    DarbouxChart uv = map_qp_to_uv(ch, times_backward(rt), u, v);
    std::vector<double> out;
    for (const auto& x : uv.first) out.push_back(to_double(x));
    for (const auto& x : uv.second) out.push_back(to_double(x));
    return out;
  };
  auto residual_entries = [&](const FlowState& s) {
    auto [rt, ch] = exact(s);
    Mat2<RatFunc> m = zero_curvature_residual(tau_direction(rt, c.direction), ch, times_backward(rt));
    return int(!m.a.is_zero()) + int(!m.b.is_zero()) + int(!m.c.is_zero()) + int(!m.d.is_zero());
  };

  FlowState start{{}, {}, to_double(tau0[dir])};
  for (int j = 0; j < g; ++j) {
    start.q.push_back(to_double(chart.first[static_cast<std::size_t>(j)]));
    start.p.push_back(to_double(chart.second[static_cast<std::size_t>(j)]));
  }
  json out = envelope(c, "flow-demo");
  json series = json::array();
  auto record = [&](int step, const FlowState& s) {
    series.push_back({{"step", step}, {"tau", s.tau}, {"q", s.q}, {"p", s.p}, {"uv", isospectral(s)}});
  };
  try {
    FlowState s = start;
    record(0, s);
    for (int n = 1; n <= c.steps; ++n) {
      s = rk4(s, c.step_size);
      if (n % c.every == 0 || n == c.steps) record(n, s);
    }
    FlowState fine = start;
    for (int n = 0; n < 2 * c.steps; ++n) fine = rk4(fine, c.step_size / 2);
    std::vector<double> a = isospectral(s), b = isospectral(fine);
    double drift = 0;
    for (std::size_t i = 0; i < a.size(); ++i) drift = std::max(drift, std::abs(a[i] - b[i]));
    out["result"] = {{"floating_point", true},
                     {"series", series},
                     {"refinement_drift", drift},
                     {"zero_curvature_residual_entries", residual_entries(s)}};
  } catch (const NumericAbort& e) {
    out["result"] = {{"floating_point", true}, {"series", series}, {"aborted", e.what()}};
    return {out, numeric_abort};
  } catch (const CoincidentNodes& e) {
    out["result"] = {{"floating_point", true}, {"series", series}, {"aborted", e.what()}};
    return {out, numeric_abort};
  }
  return {out, pass};
}

Outcome error_outcome(const std::exception& e) {
  std::string kind = "error";
  int code = usage_error;
  if (dynamic_cast<const InvalidInput*>(&e)) kind = "invalid_input";
  else if (dynamic_cast<const CoincidentNodes*>(&e)) kind = "coincident_nodes";
  else if (dynamic_cast<const IrrationalPower*>(&e)) kind = "irrational_power";
  else if (dynamic_cast<const IrrationalRoots*>(&e)) kind = "irrational_roots";
  else if (dynamic_cast<const InconsistentIntegration*>(&e)) {
    kind = "inconsistent_integration";
    code = identity_failure;
  }
  return {{{"error", kind}, {"message", e.what()}}, code};
}

}  // namespace isomon::cli
