#pragma once

// Permutations of [n] in one-line notation, their statistics and cycle
// structure.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csplab/qpoly.hpp"

namespace csplab {

/// A bijection of [n], stored 1-indexed in one-line form w_1 ... w_n.
/// Composition is right to left: (u * v)(i) = u(v(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionViolation unless the entries are exactly {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(std::size_t n);
  /// The long cycle (1, 2, ..., n).
  static Permutation long_cycle(std::size_t n);
  /// Parses cycle notation such as "(1,2,4)(3,5)" on [n]; fixed points may
  /// be omitted.
  static Permutation from_cycles(std::string_view cycles, std::size_t n);
  /// Parses one-line digits, e.g. "31524" (n <= 9).
  static Permutation from_string(std::string_view digits);

  std::size_t size() const { return w_.size(); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  Permutation pow(long e) const;
  std::vector<std::vector<int>> cycles() const;
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Digits when n <= 9, otherwise entries joined with '.'.
  std::string to_string() const;

 private:
  std::vector<int> w_;
};

enum class Statistic { inv, maj, des, exc };

Statistic parse_statistic(std::string_view name);
unsigned stat(const Permutation& w, Statistic which);

/// Every permutation of [n] in lexicographic order of one-line form.
std::vector<Permutation> all_permutations(std::size_t n, std::size_t cap = 8);

IntPolynomial stat_genfun(const std::vector<Permutation>& xs, Statistic which);

/// Cycle lengths in weakly decreasing order.
std::vector<int> cycle_type(const Permutation& w);

/// All w in S_n of the given cycle type, n = |lambda|. Filters S_n, so n is
/// bounded by `cap` (default 8).
std::vector<Permutation> conjugacy_class(const std::vector<int>& lambda, std::size_t cap = 8);

/// sum over the class of q^maj t^exc.
BivariatePolynomial maj_exc_genfun(const std::vector<int>& lambda, std::size_t cap = 8);

enum class ActionKind { free, nearly_free, neither };

const char* to_string(ActionKind kind);

/// Classifies g acting on [N] with n = o(g): free when every cycle has
/// length n, nearly free when all but one singleton do.
ActionKind nearly_free_kind(const Permutation& g, std::size_t N);

}  // namespace csplab
