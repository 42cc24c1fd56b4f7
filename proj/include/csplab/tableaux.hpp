#pragma once

// Young diagrams and tableaux in English notation: hooklengths, standard
// tableaux under promotion and evacuation, and the Robinson-Schensted(-Knuth)
// correspondences.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csplab/catalan.hpp"
#include "csplab/perms.hpp"
#include "csplab/qpoly.hpp"

namespace csplab {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// (n^m): m rows of length n.
  static Partition rectangle(int rows, int cols);
  /// (n, n-1, ..., 1)
  static Partition staircase(int n);
  /// "3,2,1" or "321".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool contains(int i, int j) const;  // 1-based cell
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Filling of a Young diagram by positive integers, addressed 1-based as
/// (row, column).
class Tableau {
 public:
  Tableau() = default;
  /// Throws ShapeViolation if row lengths increase or a row is empty.
  explicit Tableau(std::vector<std::vector<int>> rows);
  /// Slash-separated rows: "135/246/7" or dotted "1.3.10/2.4".
  static Tableau parse(std::string_view text);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  std::size_t cell_count() const;
  bool empty() const { return rows_.empty(); }
  int operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

  bool is_standard() const;
  bool is_semistandard() const;
  /// Entries by value: content()[k-1] = number of k's.
  std::vector<int> content() const;
  Tableau transpose() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

  std::string to_string() const;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Tableau whose entries are exactly [n], increasing along rows and columns.
class SYTableau : public Tableau {
 public:
  SYTableau() = default;
  explicit SYTableau(Tableau t);
  explicit SYTableau(std::vector<std::vector<int>> rows) : SYTableau(Tableau(std::move(rows))) {}
  static SYTableau parse(std::string_view text) { return SYTableau(Tableau::parse(text)); }
};

/// Rows weakly increase, columns strictly increase.
class SSYTableau : public Tableau {
 public:
  SSYTableau() = default;
  explicit SSYTableau(Tableau t);
  explicit SSYTableau(std::vector<std::vector<int>> rows) : SSYTableau(Tableau(std::move(rows))) {}
};

struct NonnegMatrix {
  std::vector<std::vector<int>> entries;

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  int total() const;
  friend bool operator==(const NonnegMatrix&, const NonnegMatrix&) = default;
};

std::vector<std::vector<int>> hooklengths(const Partition& shape);
Integer count_syt(const Partition& shape);
IntPolynomial q_count_syt(const Partition& shape);

/// Every SYT of the shape; refuses with CapExceeded when f^shape > max_count.
std::vector<SYTableau> enumerate_syt(const Partition& shape, std::size_t max_count = 200000);

SYTableau promote(const SYTableau& t);
SYTableau promote_inverse(const SYTableau& t);
SYTableau evacuate(const SYTableau& t);
/// Embedding SYT(sc_n) -> SYT(n^{n+1}); ShapeViolation otherwise.
SYTableau pon_wang_iota(const SYTableau& t);

std::pair<SYTableau, SYTableau> rsk_word(const Permutation& w);
Permutation rsk_word_inverse(const SYTableau& p, const SYTableau& q);

std::pair<SSYTableau, SSYTableau> rsk_matrix(const NonnegMatrix& m);
/// Rebuilds a rows x cols matrix; the tableau contents must fit.
NonnegMatrix rsk_matrix_inverse(const SSYTableau& p, const SSYTableau& q, std::size_t rows, std::size_t cols);

/// b_m = row containing m.
std::vector<int> ballot_sequence(const SYTableau& t);
bool is_ballot(const std::vector<int>& seq);
SYTableau from_ballot_sequence(const std::vector<int>& seq);

/// Parenthesis matching of the ballot word of a two-row rectangle.
Matching tableau_to_matching(const SYTableau& t);
SYTableau matching_to_tableau(const Matching& m);

}  // namespace csplab
