#include <gtest/gtest.h>

#include <set>

#include "csplab/catalan.hpp"
#include "csplab/errors.hpp"

using namespace csplab;

TEST(SetPartition, CanonicalForm) {
  const SetPartition p(3, {{3, 2}, {1}});
  EXPECT_EQ(p.to_string(), "1|23");
  EXPECT_THROW(SetPartition(3, {{1, 2}}), PreconditionViolation);
  EXPECT_THROW(SetPartition(3, {{1, 2}, {2, 3}}), PreconditionViolation);
  EXPECT_EQ(SetPartition(12, {{1, 12}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}).to_string(), "1.12|2.3.4.5.6.7.8.9.10.11");
}

TEST(Noncrossing, Partitions) {
  EXPECT_FALSE(is_noncrossing(SetPartition(4, {{1, 3}, {2, 4}})));
  EXPECT_TRUE(is_noncrossing(SetPartition(4, {{1, 4}, {2, 3}})));
  for (const auto& p : enumerate_set_partitions(3)) EXPECT_TRUE(is_noncrossing(p));
}

TEST(Noncrossing, Matchings) {
  EXPECT_FALSE(is_noncrossing(Matching(2, {{1, 3}, {2, 4}})));
  EXPECT_TRUE(is_noncrossing(Matching(2, {{1, 4}, {2, 3}})));
  EXPECT_TRUE(chords_cross({1, 3}, {4, 2}));
  EXPECT_FALSE(chords_cross({1, 2}, {3, 4}));
}

TEST(Enumerate, NoncrossingPartitions) {
  EXPECT_EQ(enumerate_nc_partitions(3).size(), 5U);
  EXPECT_EQ(enumerate_nc_partitions(1).size(), 1U);
  EXPECT_EQ(enumerate_set_partitions(4).size(), 15U);
  EXPECT_EQ(enumerate_nc_partitions(4).size(), 14U);
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_EQ(Integer(static_cast<unsigned long>(enumerate_nc_partitions(n).size())), catalan_number(n)) << n;
  }
}

TEST(Enumerate, NoncrossingMatchings) {
  std::set<std::string> three;
  for (const auto& m : enumerate_nc_matchings(3)) three.insert(m.to_string());
  EXPECT_EQ(three, (std::set<std::string>{"12,34,56", "12,36,45", "14,23,56", "16,23,45", "16,25,34"}));
  const auto one = enumerate_nc_matchings(1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].to_string(), "12");
  EXPECT_EQ(enumerate_nc_matchings(4).size(), 14U);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto all = enumerate_nc_matchings(n);
    EXPECT_EQ(Integer(static_cast<unsigned long>(all.size())), catalan_number(n));
    for (const auto& m : all) EXPECT_TRUE(is_noncrossing(m));
  }
}

TEST(Enumerate, Triangulations) {
  EXPECT_EQ(enumerate_triangulations(5).size(), 5U);
  const auto triangle = enumerate_triangulations(3);
  ASSERT_EQ(triangle.size(), 1U);
  EXPECT_TRUE(triangle[0].diagonals().empty());
  EXPECT_EQ(triangle[0].to_string(), "{}");
  EXPECT_EQ(enumerate_triangulations(6).size(), 14U);
  EXPECT_THROW(Triangulation(5, {{1, 3}, {2, 4}}), PreconditionViolation);
  EXPECT_THROW(Triangulation(5, {{1, 2}, {1, 3}}), PreconditionViolation);
}

TEST(Rotate, Examples) {
  EXPECT_EQ(rotate(SetPartition(3, {{1}, {2, 3}})).to_string(), "13|2");
  const Matching m(3, {{1, 6}, {2, 5}, {3, 4}});
  EXPECT_EQ(rotate(m, 0), m);
  EXPECT_EQ(rotate(m, 6), m);
  EXPECT_EQ(rotate(rotate(m, 2), -2), m);
  // One rotation step cycles the five triangulations of the pentagon.
  const Triangulation start(5, {{1, 3}, {1, 4}});
  std::set<std::string> seen;
  Triangulation t = start;
  for (int i = 0; i < 5; ++i) {
    seen.insert(t.to_string());
    t = rotate(t);
  }
  EXPECT_EQ(t, start);
  EXPECT_EQ(seen.size(), 5U);
}

TEST(Rotate, GroupActionAndNoncrossingInvariance) {
  for (unsigned n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_nc_partitions(n)) {
      EXPECT_EQ(rotate(rotate(p, 2), 3), rotate(p, 5));
      EXPECT_EQ(rotate(p, static_cast<long>(n)), p);
      EXPECT_TRUE(is_noncrossing(rotate(p)));
    }
  }
  for (const auto& p : enumerate_set_partitions(6)) EXPECT_EQ(is_noncrossing(rotate(p)), is_noncrossing(p));
}

TEST(ProperTriangulations, FigureExamples) {
  EXPECT_TRUE(is_proper_triangulation(Triangulation(5, {{1, 3}, {1, 4}})));
  EXPECT_FALSE(is_proper_triangulation(Triangulation(5, {{1, 3}, {3, 5}})));
  EXPECT_TRUE(is_proper_triangulation(Triangulation(4, {{1, 3}})));
  EXPECT_TRUE(is_proper_triangulation(Triangulation(4, {{2, 4}})));
  // The right-hand one is a rotation of the left-hand one: odd polygons
  // carry no rotation action on proper triangulations.
  EXPECT_EQ(rotate(Triangulation(5, {{1, 3}, {1, 4}}), 2), Triangulation(5, {{1, 3}, {3, 5}}));
}

TEST(Counts, CatalanAndFussCatalan) {
  EXPECT_EQ(catalan_number(0), 1);
  EXPECT_EQ(catalan_number(9), 4862);
  EXPECT_EQ(fuss_catalan(2, 2), 3);
  for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(fuss_catalan(n, 1), catalan_number(n));
  EXPECT_EQ(fuss_catalan(3, 2), 12);
}

TEST(Counts, ProperTriangulations) {
  EXPECT_EQ(proper_count(4), 12);
  EXPECT_EQ(proper_count(2), 2);
  EXPECT_EQ(proper_count(8), 880);
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(proper_count(2 * n), (Integer(1) << n) * fuss_catalan(n, 2));
}

TEST(Counts, ProperTriangulationsByEnumeration) {
  for (unsigned N = 1; N <= 10; ++N) {
    std::size_t proper = 0;
    for (const auto& t : enumerate_triangulations(N + 2)) proper += is_proper_triangulation(t) ? 1 : 0;
    EXPECT_EQ(Integer(static_cast<unsigned long>(proper)), proper_count(N)) << "N=" << N;
  }
}

TEST(ProperTriangulationPoly, ValueAtOne) {
  EXPECT_EQ(proper_triangulation_poly(1), IntPolynomial({1, 0, 1}));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(proper_triangulation_poly(n).at_one(), proper_count(2 * n));
}
