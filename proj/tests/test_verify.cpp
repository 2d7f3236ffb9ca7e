#include "isomon/errors.hpp"
#include "isomon/verify.hpp"

#include <gtest/gtest.h>

using namespace isomon;

TEST(Verify, SuitesPassOnCleanFixtures) {
  for (Suite s : all_suites()) {
    SuiteReport rep = run_suite(s, {{4, 5}, 3, 11, false});
    EXPECT_TRUE(rep.ok()) << to_string(s);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << c.identity << " " << c.detail;
  }
}

TEST(Verify, PerturbationBreaksEverySuite) {
  for (Suite s : all_suites()) EXPECT_FALSE(run_suite(s, {{4, 5}, 2, 11, true}).ok()) << to_string(s);
}

TEST(Verify, ReportOrderIsDeterministic) {
  SuiteReport a = run_suite(Suite::correspondence, {{6, 4, 5}, 2, 3, false});
  SuiteReport b = run_suite(Suite::correspondence, {{6, 4, 5}, 2, 3, false});
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].identity, b.checks[i].identity);
    EXPECT_EQ(a.checks[i].r_inf, b.checks[i].r_inf);
  }
  EXPECT_EQ(a.checks.front().r_inf, 6);
}

TEST(Verify, SuiteNames) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_THROW(parse_suite(""), InvalidInput);
  EXPECT_THROW(parse_suite("all"), InvalidInput);
}
