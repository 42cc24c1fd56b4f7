#include <gtest/gtest.h>

#include <set>

#include "csplab/errors.hpp"
#include "csplab/perms.hpp"

using namespace csplab;

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1, 2}), PreconditionViolation);
  EXPECT_THROW(Permutation({0, 1}), PreconditionViolation);
  EXPECT_NO_THROW(Permutation({2, 3, 1}));
}

TEST(Permutation, CompositionIsRightToLeft) {
  const auto u = Permutation::from_string("231");
  const auto v = Permutation::from_string("213");
  // (u*v)(1) = u(v(1)) = u(2) = 3
  EXPECT_EQ((u * v)(1), 3);
  EXPECT_EQ(u * u.inverse(), Permutation::identity(3));
  EXPECT_EQ(u.pow(3), Permutation::identity(3));
  EXPECT_EQ(u.pow(-1), u.inverse());
}

TEST(Permutation, Cycles) {
  const auto g = Permutation::from_cycles("(1,2,4)(3,5)", 5);
  EXPECT_EQ(g.to_string(), "24513");
  EXPECT_EQ(g.order(), 6U);
  EXPECT_EQ(Permutation::long_cycle(4).to_string(), "2341");
  EXPECT_EQ(cycle_type(Permutation::from_cycles("(1,5,2)(3,7)(4,8,9)(6)", 9)), (std::vector<int>{3, 3, 2, 1}));
  EXPECT_EQ(cycle_type(Permutation::identity(4)), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(Permutation::from_string("231")), (std::vector<int>{3}));
}

TEST(Statistics, WorkedExample) {
  const auto w = Permutation::from_string("31524");
  EXPECT_EQ(stat(w, Statistic::inv), 4U);
  EXPECT_EQ(stat(w, Statistic::maj), 4U);
  EXPECT_EQ(stat(w, Statistic::des), 2U);
  EXPECT_EQ(stat(w, Statistic::exc), 2U);
  for (auto s : {Statistic::inv, Statistic::maj, Statistic::des, Statistic::exc}) {
    EXPECT_EQ(stat(Permutation::identity(5), s), 0U);
  }
}

TEST(Statistics, TableOnS3) {
  struct Row {
    const char* w;
    unsigned inv, maj, des, exc;
  };
  const Row table[] = {{"123", 0, 0, 0, 0}, {"132", 1, 2, 1, 1}, {"213", 1, 1, 1, 1},
                       {"231", 2, 2, 1, 2}, {"312", 2, 1, 1, 1}, {"321", 3, 3, 2, 1}};
  for (const auto& r : table) {
    const auto w = Permutation::from_string(r.w);
    EXPECT_EQ(stat(w, Statistic::inv), r.inv) << r.w;
    EXPECT_EQ(stat(w, Statistic::maj), r.maj) << r.w;
    EXPECT_EQ(stat(w, Statistic::des), r.des) << r.w;
    EXPECT_EQ(stat(w, Statistic::exc), r.exc) << r.w;
  }
}

TEST(Statistics, ParseNames) {
  EXPECT_EQ(parse_statistic("maj"), Statistic::maj);
  EXPECT_THROW(parse_statistic("foo"), PreconditionViolation);
}

TEST(StatGenfun, MahonianAndEulerian) {
  EXPECT_EQ(stat_genfun(all_permutations(3), Statistic::inv), IntPolynomial({1, 2, 2, 1}));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto sn = all_permutations(n);
    EXPECT_EQ(stat_genfun(sn, Statistic::inv), q_factorial(static_cast<unsigned>(n)));
    EXPECT_EQ(stat_genfun(sn, Statistic::maj), stat_genfun(sn, Statistic::inv));
    EXPECT_EQ(stat_genfun(sn, Statistic::des), stat_genfun(sn, Statistic::exc));
    EXPECT_EQ(stat_genfun(sn, Statistic::des), eulerian_poly(static_cast<unsigned>(n)));
  }
}

TEST(AllPermutations, CapAndOrder) {
  const auto s3 = all_permutations(3);
  ASSERT_EQ(s3.size(), 6U);
  EXPECT_EQ(s3.front().to_string(), "123");
  EXPECT_EQ(s3.back().to_string(), "321");
  EXPECT_THROW(all_permutations(9), CapExceeded);
}

TEST(ConjugacyClass, Examples) {
  auto labels = [](const std::vector<Permutation>& ws) {
    std::set<std::string> s;
    for (const auto& w : ws) s.insert(w.to_string());
    return s;
  };
  EXPECT_EQ(labels(conjugacy_class({3})), (std::set<std::string>{"231", "312"}));
  EXPECT_EQ(labels(conjugacy_class({1, 1, 1, 1})), (std::set<std::string>{"1234"}));
  EXPECT_EQ(labels(conjugacy_class({2, 1})), (std::set<std::string>{"213", "132", "321"}));
}

TEST(ConjugacyClass, PartitionSn) {
  const std::vector<std::vector<std::vector<int>>> by_n = {
      {{1}},
      {{2}, {1, 1}},
      {{3}, {2, 1}, {1, 1, 1}},
      {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}},
      {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}},
      {{6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 3}, {3, 2, 1}, {3, 1, 1, 1}, {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1},
       {1, 1, 1, 1, 1, 1}},
  };
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= by_n.size(); ++n) {
    fact *= n;
    std::size_t total = 0;
    for (const auto& lambda : by_n[n - 1]) total += conjugacy_class(lambda).size();
    EXPECT_EQ(total, fact);
  }
}

TEST(MajExc, Examples) {
  BivariatePolynomial three;
  three.add_term(2, 2, 1);
  three.add_term(1, 1, 1);
  EXPECT_EQ(maj_exc_genfun({3}), three);
  BivariatePolynomial one;
  one.add_term(0, 0, 1);
  EXPECT_EQ(maj_exc_genfun({1, 1, 1}), one);
  BivariatePolynomial transpositions;
  transpositions.add_term(1, 1, 1);
  transpositions.add_term(2, 1, 1);
  transpositions.add_term(3, 1, 1);
  EXPECT_EQ(maj_exc_genfun({2, 1}), transpositions);
}

TEST(NearlyFree, Classification) {
  EXPECT_EQ(nearly_free_kind(Permutation::from_cycles("(1,2)(3,4)(5,6)", 6), 6), ActionKind::free);
  EXPECT_EQ(nearly_free_kind(Permutation::from_cycles("(1,2)(3,4)(5,6)(7)", 7), 7), ActionKind::nearly_free);
  EXPECT_EQ(nearly_free_kind(Permutation::from_cycles("(1,2,4)(3,5)", 5), 5), ActionKind::neither);
  EXPECT_EQ(nearly_free_kind(Permutation::identity(1), 1), ActionKind::free);
  EXPECT_STREQ(to_string(ActionKind::nearly_free), "nearly_free");
}

TEST(NearlyFree, OrderDividesNOrNMinusOne) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : all_permutations(n)) {
      if (nearly_free_kind(g, n) == ActionKind::neither) continue;
      EXPECT_TRUE(n % g.order() == 0 || (n - 1) % g.order() == 0) << g.to_string();
    }
  }
}
