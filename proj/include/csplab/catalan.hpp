#pragma once

// Catalan families on points arranged around a circle: noncrossing set
// partitions, noncrossing perfect matchings and polygon triangulations,
// with their rotation actions.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "csplab/qpoly.hpp"

namespace csplab {

/// Partition of [n] into nonempty blocks. Canonical form: each block
/// sorted, blocks ordered by their minimum.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(std::size_t n, std::vector<std::vector<int>> blocks);

  std::size_t ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

  /// Blocks joined with '|', e.g. "1|23".
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Perfect matching of [2n]: n pairs (a, b), a < b, sorted by a.
class Matching {
 public:
  using Edge = std::pair<int, int>;

  Matching() = default;
  Matching(std::size_t n, std::vector<Edge> edges);

  /// Number of edges; the vertex set is [2n].
  std::size_t edge_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Matching&, const Matching&) = default;

  /// "18,23,47,56"; endpoints are '-'-separated once 2n > 9.
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Triangulation of a convex polygon with vertices 1..n labelled clockwise,
/// stored as its n - 3 diagonals (a < b), sorted.
class Triangulation {
 public:
  using Diagonal = std::pair<int, int>;

  Triangulation() = default;
  Triangulation(std::size_t n, std::vector<Diagonal> diagonals);

  std::size_t polygon_size() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  /// Triangles as increasing vertex triples, sorted.
  std::vector<std::array<int, 3>> triangles() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Diagonal> diagonals_;
};

/// True iff chords {a,b} and {c,d} of a circle cross.
bool chords_cross(std::pair<int, int> x, std::pair<int, int> y);

bool is_noncrossing(const SetPartition& pi);
bool is_noncrossing(const Matching& m);

/// All set partitions of [n] in restricted-growth order.
std::vector<SetPartition> enumerate_set_partitions(std::size_t n, std::size_t cap = 12);
std::vector<SetPartition> enumerate_nc_partitions(std::size_t n, std::size_t cap = 12);
std::vector<Matching> enumerate_nc_matchings(std::size_t n, std::size_t cap = 10);
/// Triangulations of the n-gon (n >= 3).
std::vector<Triangulation> enumerate_triangulations(std::size_t n, std::size_t cap = 14);

/// Relabel i -> i + steps (cyclically) and re-canonicalize. Negative steps
/// rotate the other way.
SetPartition rotate(const SetPartition& pi, long steps = 1);
Matching rotate(const Matching& m, long steps = 1);
Triangulation rotate(const Triangulation& t, long steps = 1);

/// No triangle has all three vertices of one colour, vertices coloured
/// 1,2,1,2,... clockwise from vertex 1.
bool is_proper_triangulation(const Triangulation& t);

Integer catalan_number(unsigned n);
Integer fuss_catalan(unsigned n, unsigned m);
/// Number of proper triangulations of the (N+2)-gon.
Integer proper_count(unsigned N);

/// The q-analogue for rotation of proper triangulations of the (2n+2)-gon.
IntPolynomial proper_triangulation_poly(unsigned n);

}  // namespace csplab
