#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "csplab/catalan.hpp"
#include "csplab/registry.hpp"
#include "csplab/tableaux.hpp"

using namespace csplab;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(20240611U);
  return gen;
}

IntPolynomial random_poly(int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng()) + 1));
  for (auto& x : c) x = coef(rng());
  return IntPolynomial(std::move(c));
}

Permutation random_permutation(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i) + 1;
  std::shuffle(w.begin(), w.end(), rng());
  return Permutation(std::move(w));
}

SYTableau power(SYTableau t, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) t = promote(t);
  return t;
}

}  // namespace

TEST(Properties, RectanglePromotionOrder) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}}) {
    for (const auto& t : enumerate_syt(Partition::rectangle(m, n))) {
      EXPECT_EQ(power(t, static_cast<std::size_t>(m * n)), t) << t.to_string();
    }
  }
}

TEST(Properties, StaircasePromotionTransposes) {
  for (int n = 1; n <= 4; ++n) {
    const auto steps = static_cast<std::size_t>(n * (n + 1) / 2);
    for (const auto& t : enumerate_syt(Partition::staircase(n))) {
      EXPECT_EQ(static_cast<const Tableau&>(power(t, steps)), t.transpose()) << t.to_string();
    }
  }
}

TEST(Properties, PromotionInverse) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& t : enumerate_syt(lambda)) EXPECT_EQ(promote_inverse(promote(t)), t);
}

TEST(Properties, EvacuationIsInvolution) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& t : enumerate_syt(lambda)) EXPECT_EQ(evacuate(evacuate(t)), t) << t.to_string();
}

TEST(Properties, RskWordBijection) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::pair<std::string, std::string>> pairs;
    std::map<Partition, std::size_t> by_shape;
    std::size_t count = 0;
    for (const auto& w : all_permutations(n)) {
      const auto [p, q] = rsk_word(w);
      ASSERT_EQ(p.shape(), q.shape());
      if (n <= 6) EXPECT_EQ(rsk_word_inverse(p, q), w);
      pairs.emplace(p.to_string(), q.to_string());
      ++by_shape[p.shape()];
      ++count;
    }
    EXPECT_EQ(pairs.size(), count);
    Integer sum_sq = 0;
    for (const auto& lambda : partitions_of(static_cast<int>(n))) {
      const Integer f = count_syt(lambda);
      sum_sq += f * f;
      EXPECT_EQ(Integer(static_cast<unsigned long>(by_shape[lambda])), f * f);
    }
    EXPECT_EQ(sum_sq, Integer(static_cast<unsigned long>(count)));
  }
}

TEST(Properties, RskMatrixBijection) {
  for (auto [rows, cols] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 5}, {2, 3}, {3, 3}, {3, 2}}) {
    const std::size_t cells = rows * cols;
    std::vector<int> e(cells, 0);
    std::set<std::pair<std::string, std::string>> images;
    std::size_t count = 0;
    // Every matrix with entries summing to at most 6.
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
      if (i == cells) {
        NonnegMatrix m;
        m.entries.assign(rows, std::vector<int>(cols, 0));
        for (std::size_t c = 0; c < cells; ++c) m.entries[c / cols][c % cols] = e[c];
        const auto [p, q] = rsk_matrix(m);
        EXPECT_EQ(p.shape(), q.shape());
        EXPECT_EQ(rsk_matrix_inverse(p, q, rows, cols), m);
        images.emplace(p.to_string(), q.to_string());
        ++count;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[i] = v;
        go(i + 1, left - v);
      }
      e[i] = 0;
    };
    go(0, 6);
    EXPECT_EQ(images.size(), count);
  }
}

TEST(Properties, PromotionIsRotationOfMatchings) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_syt(Partition::rectangle(2, n))) {
      EXPECT_EQ(tableau_to_matching(promote(t)), rotate(tableau_to_matching(t), -1)) << t.to_string();
      EXPECT_EQ(matching_to_tableau(tableau_to_matching(t)), t);
    }
  }
}

TEST(Properties, StaircaseEmbeddingIntertwinesPromotion) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_syt(Partition::staircase(n))) {
      EXPECT_EQ(promote(pon_wang_iota(t)), pon_wang_iota(promote(t))) << t.to_string();
    }
  }
}

TEST(Properties, ExactDivisionRoundTrip) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(8, 9);
    auto g = random_poly(5, 9);
    if (g.is_zero()) continue;
    EXPECT_EQ(exact_divide(f * g, g), f);
    if (g.degree() > 0 && !f.is_zero()) {
      EXPECT_THROW(exact_divide(f * g + IntPolynomial({1}), g * IntPolynomial({0, 1})), InexactDivision);
    }
  }
}

TEST(Properties, FoldAgreesWithRootEvaluation) {
  for (int trial = 0; trial < 100; ++trial) {
    // Integer-valued at every root of unity: a combination of q-integers.
    std::uniform_int_distribution<unsigned> len(1, 12);
    std::uniform_int_distribution<long> c(-4, 4);
    IntPolynomial f;
    for (int t = 0; t < 3; ++t) f += q_int(len(rng())).substitute_power(len(rng())) * Integer(c(rng()));
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto a = fold_mod_qn(f, n);
      const IntPolynomial folded{std::vector<Integer>(a.begin(), a.end())};
      for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        EXPECT_EQ(reduce_mod_cyclotomic(folded, d).residue, reduce_mod_cyclotomic(f, d).residue);
      }
    }
  }
}

TEST(Properties, CyclotomicFactorization) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    IntPolynomial prod{1};
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    EXPECT_EQ(prod, IntPolynomial::monomial(1, n) - IntPolynomial({1}));
  }
}

TEST(Properties, PermutationAlgebra) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 9);
    const auto u = random_permutation(n);
    const auto v = random_permutation(n);
    EXPECT_EQ((u * v).inverse(), v.inverse() * u.inverse());
    EXPECT_EQ(u.pow(static_cast<long>(u.order())), Permutation::identity(n));
    EXPECT_EQ(cycle_type(u * v * u.inverse()), cycle_type(v));
    EXPECT_EQ(stat(u, Statistic::inv), stat(u.inverse(), Statistic::inv));
    EXPECT_LE(stat(u, Statistic::des), n - 1);
  }
}

TEST(Properties, RandomNearlyFreeGeneratorsSieve) {
  // Conjugates of a power of the long cycle act freely; adding a fixed
  // point keeps them nearly free.
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<unsigned> nd(2, 7);
    const unsigned n = nd(rng());
    const bool extra = trial % 2 == 1;
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    const unsigned step = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng())];
    std::vector<int> w(n + (extra ? 1 : 0));
    for (unsigned i = 0; i < n; ++i) w[i] = static_cast<int>((i + step) % n) + 1;
    if (extra) w[n] = static_cast<int>(n) + 1;
    const Permutation base(w);
    const auto c = random_permutation(w.size());
    const Permutation g = c * base * c.inverse();
    const auto N = static_cast<unsigned>(w.size());
    ASSERT_NE(nearly_free_kind(g, N), ActionKind::neither);
    const unsigned k = std::uniform_int_distribution<unsigned>(0, N)(rng());
    EXPECT_TRUE(run_checks(subset_instance(N, k, g)).verdict) << g.to_string() << " k=" << k;
    EXPECT_TRUE(run_checks(multiset_instance(N, k, g)).verdict) << g.to_string() << " k=" << k;
  }
}

TEST(Properties, NotNearlyFreeGeneratorsCanFail) {
  // (1,2,4)(3,5) is outside the theorem; it fails for 2-subsets of [5].
  const auto g = Permutation::from_cycles("(1,2,4)(3,5)", 5);
  EXPECT_FALSE(run_checks(subset_instance(5, 2, g)).verdict);
}

TEST(Properties, CheckerEquivalenceOnRegisteredInstances) {
  std::vector<CSPInstance> all;
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 0; k <= 4; ++k) {
      all.push_back(multiset_instance(n, k));
      all.push_back(subset_instance(n, k));
    }
  for (unsigned n = 1; n <= 5; ++n) {
    all.push_back(ncm_instance(n));
    all.push_back(ncp_instance(n));
    all.push_back(triangulation_instance(n));
    all.push_back(syt_rect_instance(2, n));
  }
  all.push_back(syt_rect_instance(3, 3));
  all.push_back(proper_triangulation_instance(1));
  all.push_back(proper_triangulation_instance(2));
  all.push_back(proper_triangulation_instance(3));
  all.push_back(conj_class_instance({2, 2}));
  all.push_back(conj_class_instance({3, 1, 1}));
  all.push_back(plethysm_instance(ncp_instance(3), 2, 'e'));
  for (const auto& inst : all) {
    const auto rep = run_checks(inst);
    EXPECT_EQ(rep.roots_pass, rep.orbits_pass) << inst.family;
    const auto bad = run_checks(corrupt_coefficient(inst, 1));
    EXPECT_FALSE(bad.roots_pass) << inst.family;
    EXPECT_FALSE(bad.orbits_pass) << inst.family;
  }
}

TEST(Properties, BurnsideRandomActions) {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
    const auto g = random_permutation(n);
    std::vector<std::string> labels;
    std::vector<Index> gen;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
      gen.push_back(static_cast<Index>(g(static_cast<int>(i) + 1) - 1));
    }
    const std::uint64_t order = g.order() * (1 + static_cast<std::uint64_t>(trial % 3));
    const CyclicAction a(labels, gen, order);
    std::size_t total = 0;
    for (std::uint64_t j = 0; j < order; ++j) total += fixed_count(a, j);
    EXPECT_EQ(total, order * orbit_decompose(a).size());
    for (const auto& o : orbit_decompose(a)) EXPECT_EQ(o.stabilizer_order * o.members.size(), order);
  }
}
