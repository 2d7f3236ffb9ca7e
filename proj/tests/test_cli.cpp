#include "commands.hpp"
#include "isomon/errors.hpp"

#include <gtest/gtest.h>

using namespace isomon;
using namespace isomon::cli;

namespace {

RunConfig painleve_fixture() {
  RunConfig c;
  c.r_inf = 4;
  c.tau = RVec{3};
  c.q = RVec{1};
  c.p = RVec{2};
  return c;
}

}  // namespace

TEST(CliHamiltonian, PainleveOneFixture) {
  Outcome o = cmd_hamiltonian(painleve_fixture());
  EXPECT_EQ(o.exit, pass);
  const auto& r = o.report["result"];
  EXPECT_EQ(r["H"], nlohmann::json::array({"-3"}));
  EXPECT_EQ(r["painleve_one"]["value_t1"], "-3");
  EXPECT_EQ(r["painleve_one"]["equation"], "q'' = 6*q^2 + 4*tau");
  EXPECT_EQ(r["hamiltonians"][0]["value"], "-6");
  EXPECT_EQ(o.report["version"], ISOMON_VERSION);
  EXPECT_EQ(o.report["config"]["tau"], nlohmann::json::array({"3"}));
}

TEST(CliHamiltonian, AiryCase) {
  RunConfig c;
  c.r_inf = 3;
  Outcome o = cmd_hamiltonian(c);
  EXPECT_EQ(o.exit, pass);
  EXPECT_TRUE(o.report["result"]["H"].empty());
  EXPECT_EQ(o.report["result"]["note"], "g=0: Airy case, no coordinates");
}

TEST(CliHamiltonian, DeterministicForSeed) {
  RunConfig c;
  c.r_inf = 5;
  c.seed = 42;
  EXPECT_EQ(cmd_hamiltonian(c).report.dump(), cmd_hamiltonian(c).report.dump());
  RunConfig other = c;
  other.seed = 43;
  EXPECT_NE(cmd_hamiltonian(other).report.dump(), cmd_hamiltonian(c).report.dump());
}

TEST(CliHamiltonian, ValidationErrors) {
  RunConfig c = painleve_fixture();
  c.q = RVec{1, 2};
  EXPECT_THROW(cmd_hamiltonian(c), InvalidInput);
  c = painleve_fixture();
  c.times = RVec{1, 0, 0, 0, 2, 0};
  EXPECT_THROW(cmd_hamiltonian(c), InvalidInput);
  try {
    cmd_hamiltonian(c);
  } catch (const std::exception& e) {
    Outcome o = error_outcome(e);
    EXPECT_EQ(o.exit, usage_error);
    EXPECT_EQ(o.report["error"], "invalid_input");
  }
}

TEST(CliHamiltonian, ExplicitTimes) {
  RunConfig c = painleve_fixture();
  c.tau.reset();
  c.times = RVec{6, 0, 0, 0, 2, 0};
  EXPECT_EQ(cmd_hamiltonian(c).report["result"], cmd_hamiltonian(painleve_fixture()).report["result"]);
}

TEST(CliVerify, AllSuitesPass) {
  RunConfig c;
  c.suites = {"all"};
  Outcome o = cmd_verify(c);
  EXPECT_EQ(o.exit, pass);
  EXPECT_EQ(o.report["result"]["suites"].size(), 4u);
}

TEST(CliVerify, PerturbedFixtureFails) {
  RunConfig c;
  c.suites = {"zero-curvature"};
  c.samples = 2;
  c.perturb = true;
  Outcome o = cmd_verify(c);
  EXPECT_EQ(o.exit, identity_failure);
  EXPECT_FALSE(o.report["result"]["pass"].get<bool>());
}

TEST(CliVerify, UsageErrors) {
  RunConfig c;
  EXPECT_THROW(cmd_verify(c), InvalidInput);
  c.suites = {""};
  EXPECT_THROW(cmd_verify(c), InvalidInput);
  c.suites = {"reduction"};
  c.r_values = {3};
  EXPECT_THROW(cmd_verify(c), InvalidInput);
}

TEST(CliCorrespond, R5Offset) {
  RunConfig c;
  c.r_inf = 5;
  c.tau = RVec{Rational(1, 2), -1};
  c.q = RVec{1, 2};
  c.p = RVec{3, -1};
  Outcome o = cmd_correspond(c);
  EXPECT_EQ(o.exit, pass);
  const auto& r = o.report["result"];
  Rational Q0 = parse_rational(r["geometric"]["first"][0].get<std::string>());
  Rational t3 = parse_rational(r["times"][2].get<std::string>());
  EXPECT_EQ(parse_rational(r["isospectral"]["first"][0].get<std::string>()), Q0 - t3 / 3);
  EXPECT_TRUE(r["round_trip"].get<bool>());
  EXPECT_EQ(r["shift_polynomials"][0]["coordinate"], "Q_0");
  EXPECT_EQ(r["shift_polynomials"][0]["polynomial"], "1/3*t3 + u0");
}

TEST(CliCorrespond, ZeroTimes) {
  RunConfig c;
  c.r_inf = 6;
  c.tau = RVec{0, 0, 0};
  c.seed = 7;
  const auto r = cmd_correspond(c).report["result"];
  EXPECT_EQ(r["isospectral"]["first"], r["geometric"]["first"]);
  EXPECT_EQ(r["isospectral"]["second"], r["lax"]["second"]);
}

TEST(CliCorrespond, NeedsCanonicalSlice) {
  RunConfig c;
  c.r_inf = 5;
  c.times = RVec{1, 0, 1, 0, 1, 1, 2, 0};
  EXPECT_THROW(cmd_correspond(c), InvalidInput);
}

TEST(CliFlowDemo, ZeroStepsEchoInitialState) {
  RunConfig c = painleve_fixture();
  c.steps = 0;
  Outcome o = cmd_flow_demo(c);
  EXPECT_EQ(o.exit, pass);
  const auto& s = o.report["result"]["series"];
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0]["q"][0].get<double>(), 1.0);
  EXPECT_EQ(s[0]["p"][0].get<double>(), 2.0);
  EXPECT_EQ(o.report["result"]["refinement_drift"].get<double>(), 0.0);
}

TEST(CliFlowDemo, FourthOrderRefinement) {
  RunConfig c;
  c.r_inf = 4;
  c.tau = RVec{Rational(1, 10)};
  c.q = RVec{Rational(1, 2)};
  c.p = RVec{Rational(1, 3)};
  c.every = 1000;
  std::vector<double> drift;
  for (int n : {100, 200}) {
    c.steps = n;
    c.step_size = 0.2 / n;
    Outcome o = cmd_flow_demo(c);
    ASSERT_EQ(o.exit, pass);
    EXPECT_EQ(o.report["result"]["zero_curvature_residual_entries"], 0);
    drift.push_back(o.report["result"]["refinement_drift"].get<double>());
  }
  EXPECT_NEAR(drift[0] / drift[1], 16.0, 1.0);
}

TEST(CliFlowDemo, BlowUpAborts) {
  RunConfig c = painleve_fixture();
  c.tau = RVec{0};
  c.q = RVec{3};
  c.p = RVec{10};
  c.steps = 2000;
  c.step_size = 0.01;
  Outcome o = cmd_flow_demo(c);
  EXPECT_EQ(o.exit, numeric_abort);
  EXPECT_TRUE(o.report["result"].contains("aborted"));
}

TEST(CliFlowDemo, Validation) {
  RunConfig c = painleve_fixture();
  c.step_size = 0;
  EXPECT_THROW(cmd_flow_demo(c), InvalidInput);
  c = painleve_fixture();
  c.r_inf = 7;
  EXPECT_THROW(cmd_flow_demo(c), InvalidInput);
  c = painleve_fixture();
  c.direction = 2;
  EXPECT_THROW(cmd_flow_demo(c), InvalidInput);
}
