// Independent brute-force oracles for the closed forms.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "csplab/catalan.hpp"
#include "csplab/registry.hpp"
#include "csplab/tableaux.hpp"

using namespace csplab;

namespace {

std::complex<double> eval_complex(const IntPolynomial& f, std::complex<double> z) {
  std::complex<double> acc = 0;
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i].get_d();
  return acc;
}

// Facets of the cyclic polytope C(n, d): d-subsets S of [n] such that any
// two elements outside S have an even number of elements of S between them.
long gale_facets(int n, int d) {
  long count = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != d) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (mask & (1U << i)) continue;
      for (int j = i + 1; j < n && ok; ++j) {
        if (mask & (1U << j)) continue;
        int between = 0;
        for (int t = i + 1; t < j; ++t) between += (mask >> t) & 1U;
        ok = between % 2 == 0;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST(Oracle, GaussianBinomialCountsInversionsOfWords) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<Integer> c(static_cast<std::size_t>(k * (n - k) + 1));
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        int inv = 0;
        int ones = 0;
        for (int i = 0; i < n; ++i) {
          if (mask & (1U << i)) ++ones;
          else inv += ones;
        }
        c[static_cast<std::size_t>(inv)] += 1;
      }
      EXPECT_EQ(gaussian_binomial(n, k), IntPolynomial(c)) << n << " " << k;
    }
  }
}

TEST(Oracle, RootEvaluationMatchesFloatingPoint) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const auto f = gaussian_binomial(n, k);
      for (unsigned d = 1; d <= 12; ++d) {
        const auto z = std::polar(1.0, 2 * std::numbers::pi / d);
        const auto v = eval_complex(f, z);
        const auto residue = reduce_mod_cyclotomic(f, d);
        if (residue.is_integer()) {
          EXPECT_NEAR(v.real(), residue.integer_value().get_d(), 1e-6);
          EXPECT_NEAR(v.imag(), 0.0, 1e-6);
        } else {
          EXPECT_THROW(eval_at_root(f, d), NonIntegerEvaluation);
        }
      }
    }
  }
}

TEST(Oracle, FacePolynomialFacetsByGaleEvenness) {
  EXPECT_EQ(gale_facets(6, 4), 9);
  for (int d = 2; d <= 6; d += 2) {
    for (int n = d + 1; n <= 11; ++n) {
      EXPECT_EQ(face_poly(d - 1, n, d).at_one(), gale_facets(n, d)) << n << " " << d;
    }
  }
}

TEST(Oracle, FacePolynomialAtRootsIsIntegral) {
  for (int n = 5; n <= 10; ++n) {
    for (int k = 0; k < 4; ++k) {
      const auto f = face_poly(k, n, 4);
      EXPECT_TRUE(f.has_nonnegative_coefficients());
      EXPECT_NO_THROW(eval_at_root(f, static_cast<std::uint64_t>(n)));
    }
  }
}

TEST(Oracle, QHookFormulaIsMajorIndexOverSyt) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::vector<Integer> c;
      for (const auto& t : enumerate_syt(lambda)) {
        const auto b = ballot_sequence(t);
        unsigned maj = 0;
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
          if (b[i + 1] > b[i]) maj += static_cast<unsigned>(i + 1);
        if (maj >= c.size()) c.resize(maj + 1);
        c[maj] += 1;
      }
      std::size_t shift = 0;
      for (std::size_t i = 0; i < lambda.parts().size(); ++i) shift += i * static_cast<std::size_t>(lambda.parts()[i]);
      EXPECT_EQ(IntPolynomial(c), q_count_syt(lambda).shifted(shift)) << lambda.to_string();
    }
  }
}

TEST(Oracle, ProperTriangulationCountsByEnumeration) {
  const auto count = [](unsigned N) {
    std::size_t proper = 0;
    for (const auto& t : enumerate_triangulations(N + 2)) proper += is_proper_triangulation(t) ? 1 : 0;
    return proper;
  };
  EXPECT_EQ(count(1), 1U);
  EXPECT_EQ(count(2), 2U);
  EXPECT_EQ(count(3), 4U);
  EXPECT_EQ(count(4), 12U);
  EXPECT_EQ(count(8), 880U);
}

TEST(Oracle, HalfTurnFixesCentrallySymmetricHexagonTriangulations) {
  const auto inst = proper_triangulation_instance(2);
  EXPECT_EQ(inst.action.size(), 12U);
  // Every centrally symmetric triangulation of the hexagon uses a diameter.
  std::size_t symmetric = 0;
  for (const auto& t : enumerate_triangulations(6)) {
    if (rotate(t, 3) == t) {
      ++symmetric;
      EXPECT_TRUE(is_proper_triangulation(t)) << t.to_string();
    }
  }
  EXPECT_EQ(symmetric, 6U);
  EXPECT_EQ(fixed_count(inst.action, 3), 6U);
  // The half turn has order 2, where the closed form vanishes.
  EXPECT_EQ(eval_at_root(inst.polynomial, 2), 0);
  EXPECT_FALSE(run_checks(inst).verdict);
}

TEST(Oracle, SubsetPolynomialMatchesElementarySymmetricPlethysm) {
  // e_k[[n]_q] = q^{C(k,2)} [n choose k]_q; both sieve the same action.
  for (unsigned n : {3U, 5U, 7U}) {
    for (unsigned k = 0; k <= n; ++k) {
      const auto p = plethysm_instance(cycle_instance(n), k, 'e');
      const auto s = subset_instance(n, k);
      EXPECT_EQ(p.action.size(), s.action.size());
      EXPECT_TRUE(run_checks(p).verdict);
      EXPECT_EQ(fold_mod_qn(p.polynomial, n), fold_mod_qn(s.polynomial.shifted(k * (k - 1) / 2), n));
    }
  }
}
