#include "csplab/catalan.hpp"

#include <algorithm>
#include <functional>

#include "csplab/encoding.hpp"
#include "csplab/errors.hpp"

namespace csplab {

namespace {

int wrap(int v, long steps, std::size_t n) {
  auto m = static_cast<long>(n);
  long r = (static_cast<long>(v) - 1 + steps) % m;
  if (r < 0) r += m;
  return static_cast<int>(r) + 1;
}

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

std::string join_pairs(const std::vector<std::pair<int, int>>& ps, bool wide) {
  if (ps.empty()) return kEmptyLabel;
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) s += ',';
    s += join_entries({ps[i].first, ps[i].second}, wide, '-');
  }
  return s;
}

}  // namespace

SetPartition::SetPartition(std::size_t n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n + 1, false);
  std::size_t covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw PreconditionViolation("set partition has an empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)]) {
        throw PreconditionViolation("blocks are not a partition of [" + std::to_string(n) + "]");
      }
      seen[static_cast<std::size_t>(x)] = true;
      ++covered;
    }
  }
  if (covered != n) throw PreconditionViolation("blocks do not cover [" + std::to_string(n) + "]");
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string SetPartition::to_string() const {
  if (blocks_.empty()) return kEmptyLabel;
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) s += '|';
    s += join_entries(blocks_[i], n_ > 9);
  }
  return s;
}

Matching::Matching(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (edges_.size() != n) throw PreconditionViolation("a perfect matching of [2n] has n edges");
  std::vector<bool> seen(2 * n + 1, false);
  for (auto& e : edges_) {
    e = ordered(e.first, e.second);
    for (int v : {e.first, e.second}) {
      if (v < 1 || static_cast<std::size_t>(v) > 2 * n || seen[static_cast<std::size_t>(v)]) {
        throw PreconditionViolation("edges are not a perfect matching of [" + std::to_string(2 * n) + "]");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

std::string Matching::to_string() const { return join_pairs(edges_, 2 * n_ > 9); }

Triangulation::Triangulation(std::size_t n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
  if (n < 3) throw PreconditionViolation("a polygon needs at least 3 vertices");
  if (diagonals_.size() != n - 3) throw PreconditionViolation("a triangulation of an n-gon has n-3 diagonals");
  for (auto& d : diagonals_) {
    d = ordered(d.first, d.second);
    const bool in_range = d.first >= 1 && static_cast<std::size_t>(d.second) <= n;
    const bool is_side = d.second - d.first == 1 || (d.first == 1 && static_cast<std::size_t>(d.second) == n);
    if (!in_range || d.first == d.second || is_side) {
      throw PreconditionViolation("(" + std::to_string(d.first) + "," + std::to_string(d.second) +
                                  ") is not a diagonal of the " + std::to_string(n) + "-gon");
    }
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
    throw PreconditionViolation("repeated diagonal");
  }
  for (std::size_t i = 0; i < diagonals_.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
      if (chords_cross(diagonals_[i], diagonals_[j])) throw PreconditionViolation("diagonals cross");
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  const auto n = static_cast<int>(n_);
  std::vector<std::vector<bool>> edge(n_ + 1, std::vector<bool>(n_ + 1, false));
  auto link = [&](int a, int b) { edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = edge[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true; };
  for (int i = 1; i <= n; ++i) link(i, i % n + 1);
  for (const auto& d : diagonals_) link(d.first, d.second);
  auto has = [&](int a, int b) { return edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  // In a triangulated convex polygon every 3-cycle bounds a face.
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (has(a, b))
        for (int c = b + 1; c <= n; ++c)
          if (has(a, c) && has(b, c)) out.push_back({a, b, c});
  return out;
}

std::string Triangulation::to_string() const { return join_pairs(diagonals_, n_ > 9); }

bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = ordered(x.first, x.second);
  auto [c, d] = ordered(y.first, y.second);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool is_noncrossing(const SetPartition& pi) {
  const auto& bs = pi.blocks();
  for (std::size_t s = 0; s < bs.size(); ++s) {
    for (std::size_t t = 0; t < bs.size(); ++t) {
      if (s == t) continue;
      // a < c < b < d with a, b in one block and c, d in the other
      for (int a : bs[s])
        for (int b : bs[s])
          for (int c : bs[t])
            for (int d : bs[t])
              if (a < c && c < b && b < d) return false;
    }
  }
  return true;
}

bool is_noncrossing(const Matching& m) {
  const auto& es = m.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (chords_cross(es[i], es[j])) return false;
  return true;
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("set partitions of [" + std::to_string(n) + "] exceed the cap " + std::to_string(cap));
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<std::vector<int>>{});
    return out;
  }
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> place = [&](int x) {
    if (static_cast<std::size_t>(x) > n) {
      out.emplace_back(n, blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(x);
      place(x + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({x});
    place(x + 1);
    blocks.pop_back();
  };
  place(1);
  return out;
}

std::vector<SetPartition> enumerate_nc_partitions(std::size_t n, std::size_t cap) {
  std::vector<SetPartition> out;
  for (auto& p : enumerate_set_partitions(n, cap))
    if (is_noncrossing(p)) out.push_back(std::move(p));
  return out;
}

std::vector<Matching> enumerate_nc_matchings(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("noncrossing matchings on [" + std::to_string(2 * n) + "] exceed the cap");
  // Vertex lo pairs with some hi leaving an even, independently matched gap.
  std::function<std::vector<std::vector<Matching::Edge>>(int, int)> build = [&](int lo, int hi) {
    std::vector<std::vector<Matching::Edge>> res;
    if (lo > hi) {
      res.emplace_back();
      return res;
    }
    for (int mate = lo + 1; mate <= hi; mate += 2) {
      for (const auto& inner : build(lo + 1, mate - 1)) {
        for (const auto& outer : build(mate + 1, hi)) {
          std::vector<Matching::Edge> es{{lo, mate}};
          es.insert(es.end(), inner.begin(), inner.end());
          es.insert(es.end(), outer.begin(), outer.end());
          res.push_back(std::move(es));
        }
      }
    }
    return res;
  };
  std::vector<Matching> out;
  for (auto& es : build(1, static_cast<int>(2 * n))) out.emplace_back(n, std::move(es));
  return out;
}

std::vector<Triangulation> enumerate_triangulations(std::size_t n, std::size_t cap) {
  if (n < 3) throw PreconditionViolation("a polygon needs at least 3 vertices");
  if (n > cap) throw CapExceeded("triangulations of the " + std::to_string(n) + "-gon exceed the cap");
  // Triangulate the sub-polygon a, a+1, ..., b whose side (a, b) is already
  // present; the triangle on (a, b) has apex k.
  std::function<std::vector<std::vector<Triangulation::Diagonal>>(int, int)> build = [&](int a, int b) {
    std::vector<std::vector<Triangulation::Diagonal>> res;
    if (b - a < 2) {
      res.emplace_back();
      return res;
    }
    for (int k = a + 1; k < b; ++k) {
      auto left = build(a, k);
      auto right = build(k, b);
      for (const auto& l : left) {
        for (const auto& r : right) {
          std::vector<Triangulation::Diagonal> ds;
          if (k - a >= 2) ds.emplace_back(a, k);
          if (b - k >= 2) ds.emplace_back(k, b);
          ds.insert(ds.end(), l.begin(), l.end());
          ds.insert(ds.end(), r.begin(), r.end());
          res.push_back(std::move(ds));
        }
      }
    }
    return res;
  };
  std::vector<Triangulation> out;
  for (auto& ds : build(1, static_cast<int>(n))) out.emplace_back(n, std::move(ds));
  return out;
}

SetPartition rotate(const SetPartition& pi, long steps) {
  auto blocks = pi.blocks();
  for (auto& b : blocks)
    for (int& x : b) x = wrap(x, steps, pi.ground_size());
  return SetPartition(pi.ground_size(), std::move(blocks));
}

Matching rotate(const Matching& m, long steps) {
  auto edges = m.edges();
  for (auto& e : edges) e = {wrap(e.first, steps, 2 * m.edge_count()), wrap(e.second, steps, 2 * m.edge_count())};
  return Matching(m.edge_count(), std::move(edges));
}

Triangulation rotate(const Triangulation& t, long steps) {
  auto ds = t.diagonals();
  for (auto& d : ds) d = {wrap(d.first, steps, t.polygon_size()), wrap(d.second, steps, t.polygon_size())};
  return Triangulation(t.polygon_size(), std::move(ds));
}

bool is_proper_triangulation(const Triangulation& t) {
  auto colour = [](int v) { return v % 2; };
  for (const auto& tri : t.triangles()) {
    if (colour(tri[0]) == colour(tri[1]) && colour(tri[1]) == colour(tri[2])) return false;
  }
  return true;
}

Integer catalan_number(unsigned n) { return binomial(2L * n, n) / (n + 1); }

Integer fuss_catalan(unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw PreconditionViolation("fuss_catalan: n and m must be positive");
  Integer num = binomial(static_cast<long>((m + 1) * n), n);
  Integer den = static_cast<unsigned long>(m) * n + 1;
  if (num % den != 0) throw InternalError("Fuss-Catalan quotient is not an integer");
  return num / den;
}

Integer proper_count(unsigned N) {
  Integer num;
  Integer den;
  if (N % 2 == 0) {
    const unsigned n = N / 2;
    num = binomial(3L * n, n) << n;
    den = 2 * n + 1;
  } else {
    const unsigned n = (N - 1) / 2;
    num = binomial(3L * n + 1, n) << (n + 1);
    den = 2 * n + 2;
  }
  if (num % den != 0) throw InternalError("proper triangulation count is not an integer");
  return num / den;
}

IntPolynomial proper_triangulation_poly(unsigned n) {
  if (n == 0) throw PreconditionViolation("proper_triangulation_poly: n must be positive");
  const IntPolynomial two_q = q_int(2);
  auto power = [](const IntPolynomial& p, unsigned e) {
    IntPolynomial acc{1};
    for (unsigned i = 0; i < e; ++i) acc *= p;
    return acc;
  };
  const unsigned half_up = (n + 1) / 2;
  IntPolynomial middle = power(two_q, n - 1) - power(two_q, half_up - 1) +
                         IntPolynomial::constant(Integer(1) << (half_up - 1));
  IntPolynomial numerator = two_q.substitute_power(2) * middle * gaussian_binomial(3L * n, n);
  return exact_divide(numerator, q_int(2 * n + 1));
}

}  // namespace csplab
