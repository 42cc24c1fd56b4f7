#include "csplab/perms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "csplab/errors.hpp"

namespace csplab {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || static_cast<std::size_t>(x) > w_.size() || seen[static_cast<std::size_t>(x)]) {
      throw PreconditionViolation("not a permutation of [" + std::to_string(w_.size()) + "]");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::long_cycle(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>((i + 1) % n) + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<bool> used(n + 1, false);
  std::size_t pos = 0;
  auto fail = [&]() -> void {
    throw PreconditionViolation("bad cycle notation '" + std::string(text) + "' on [" + std::to_string(n) + "]");
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail();
    ++pos;
    std::vector<int> cyc;
    while (true) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail();
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || static_cast<std::size_t>(v) > n || used[static_cast<std::size_t>(v)]) fail();
      used[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size()) fail();
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail();
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      w[static_cast<std::size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::from_string(std::string_view digits) {
  std::vector<int> w;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw PreconditionViolation("bad one-line permutation '" + std::string(digits) + "'");
    }
    w.push_back(c - '0');
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  auto k = static_cast<unsigned long>(e < 0 ? -e : e);
  Permutation acc = identity(size());
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw PreconditionViolation("composing permutations of different sizes");
  std::vector<int> w(u.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = u.w_[static_cast<std::size_t>(v.w_[i] - 1)];
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(w_.size(), false);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<int>(j) + 1);
      j = static_cast<std::size_t>(w_[j] - 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (const auto& c : cycles()) l = std::lcm(l, static_cast<std::uint64_t>(c.size()));
  return l;
}

std::string Permutation::to_string() const {
  std::string s;
  bool wide = w_.size() > 9;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (wide && i > 0) s += '.';
    s += std::to_string(w_[i]);
  }
  return s;
}

Statistic parse_statistic(std::string_view name) {
  if (name == "inv") return Statistic::inv;
  if (name == "maj") return Statistic::maj;
  if (name == "des") return Statistic::des;
  if (name == "exc") return Statistic::exc;
  throw PreconditionViolation("unknown statistic '" + std::string(name) + "'");
}

unsigned stat(const Permutation& w, Statistic which) {
  const auto& v = w.one_line();
  const std::size_t n = v.size();
  unsigned s = 0;
  switch (which) {
    case Statistic::inv:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += v[i] > v[j] ? 1U : 0U;
      break;
    case Statistic::maj:
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (v[i] > v[i + 1]) s += static_cast<unsigned>(i + 1);
      break;
    case Statistic::des:
      for (std::size_t i = 0; i + 1 < n; ++i) s += v[i] > v[i + 1] ? 1U : 0U;
      break;
    case Statistic::exc:
      for (std::size_t i = 0; i < n; ++i) s += v[i] > static_cast<int>(i + 1) ? 1U : 0U;
      break;
  }
  return s;
}

std::vector<Permutation> all_permutations(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("S_" + std::to_string(n) + " exceeds the permutation cap " + std::to_string(cap));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

IntPolynomial stat_genfun(const std::vector<Permutation>& xs, Statistic which) {
  std::vector<Integer> c;
  for (const auto& w : xs) {
    unsigned s = stat(w, which);
    if (s >= c.size()) c.resize(s + 1);
    c[s] += 1;
  }
  return IntPolynomial(std::move(c));
}

std::vector<int> cycle_type(const Permutation& w) {
  std::vector<int> lens;
  for (const auto& c : w.cycles()) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

namespace {

std::size_t checked_partition_size(const std::vector<int>& lambda) {
  if (lambda.empty()) return 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0 || (i > 0 && lambda[i] > lambda[i - 1])) {
      throw PreconditionViolation("cycle type must be weakly decreasing positive integers");
    }
  }
  return static_cast<std::size_t>(std::accumulate(lambda.begin(), lambda.end(), 0));
}

}  // namespace

std::vector<Permutation> conjugacy_class(const std::vector<int>& lambda, std::size_t cap) {
  const std::size_t n = checked_partition_size(lambda);
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n, cap)) {
    if (cycle_type(w) == lambda) out.push_back(std::move(w));
  }
  return out;
}

BivariatePolynomial maj_exc_genfun(const std::vector<int>& lambda, std::size_t cap) {
  BivariatePolynomial f;
  for (const auto& w : conjugacy_class(lambda, cap)) f.add_term(stat(w, Statistic::maj), stat(w, Statistic::exc), 1);
  return f;
}

const char* to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::free:
      return "free";
    case ActionKind::nearly_free:
      return "nearly_free";
    case ActionKind::neither:
      return "neither";
  }
  return "neither";
}

ActionKind nearly_free_kind(const Permutation& g, std::size_t N) {
  if (g.size() != N) throw PreconditionViolation("generator does not act on [" + std::to_string(N) + "]");
  const std::uint64_t n = g.order();
  std::size_t singletons = 0;
  bool all_full = true;
  for (const auto& c : g.cycles()) {
    if (c.size() == n) continue;
    all_full = false;
    if (c.size() == 1) {
      ++singletons;
    } else {
      return ActionKind::neither;
    }
  }
  if (all_full) return ActionKind::free;
  return singletons == 1 ? ActionKind::nearly_free : ActionKind::neither;
}

IntPolynomial eulerian_poly(unsigned n) { return stat_genfun(all_permutations(n, 10), Statistic::des); }

}  // namespace csplab
