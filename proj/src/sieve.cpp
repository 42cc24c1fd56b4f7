#include "csplab/sieve.hpp"

#include <future>
#include <numeric>
#include <thread>

namespace csplab {

CyclicAction::CyclicAction(std::vector<std::string> labels, std::vector<Index> generator, std::uint64_t order)
    : labels_(std::move(labels)), gen_(std::move(generator)), order_(order) {
  if (order_ == 0) throw PreconditionViolation("group order must be positive");
  if (gen_.size() != labels_.size()) throw PreconditionViolation("generator and label list differ in size");
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (!(labels_[i - 1] < labels_[i])) throw PreconditionViolation("labels must be sorted and distinct");
  }
  std::vector<bool> hit(gen_.size(), false);
  for (Index x : gen_) {
    if (x >= gen_.size() || hit[x]) throw PreconditionViolation("generator is not a bijection");
    hit[x] = true;
  }
  if (order_ % permutation_order() != 0) {
    throw PreconditionViolation("generator order " + std::to_string(permutation_order()) +
                                " does not divide the group order " + std::to_string(order_));
  }
}

std::uint64_t CyclicAction::permutation_order() const {
  std::uint64_t l = 1;
  std::vector<bool> seen(gen_.size(), false);
  for (std::size_t i = 0; i < gen_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = i; !seen[x]; x = gen_[x]) {
      seen[x] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

std::vector<Index> CyclicAction::power(std::uint64_t j) const {
  j %= order_;
  std::vector<Index> acc(gen_.size());
  std::iota(acc.begin(), acc.end(), Index{0});
  std::vector<Index> base = gen_;
  std::vector<Index> tmp(gen_.size());
  while (j > 0) {
    if (j & 1U) {
      for (std::size_t i = 0; i < acc.size(); ++i) tmp[i] = base[acc[i]];
      acc.swap(tmp);
    }
    for (std::size_t i = 0; i < base.size(); ++i) tmp[i] = base[base[i]];
    base.swap(tmp);
    j >>= 1;
  }
  return acc;
}

std::uint64_t CyclicAction::element_order(std::uint64_t j) const { return order_ / std::gcd(order_, j % order_); }

std::optional<Index> CyclicAction::find(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

std::vector<Orbit> orbit_decompose(const CyclicAction& a) {
  std::vector<Orbit> out;
  std::vector<bool> seen(a.size(), false);
  for (Index i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    Orbit o;
    for (Index x = i; !seen[x]; x = a.generator()[x]) {
      seen[x] = true;
      o.members.push_back(x);
    }
    o.stabilizer_order = a.order() / o.members.size();
    out.push_back(std::move(o));
  }
  return out;
}

std::size_t fixed_count(const CyclicAction& a, std::uint64_t j) {
  const auto g = a.power(j);
  std::size_t c = 0;
  for (std::size_t i = 0; i < g.size(); ++i) c += g[i] == i ? 1 : 0;
  return c;
}

CSPInstance corrupt_coefficient(CSPInstance inst, std::size_t i) {
  inst.polynomial += IntPolynomial::monomial(1, i);
  return inst;
}

namespace {

ElementCheck check_element(const CSPInstance& inst, std::uint64_t j) {
  ElementCheck row;
  row.j = j;
  row.element_order = inst.action.element_order(j);
  row.fixed = fixed_count(inst.action, j);
  try {
    row.eval = eval_at_root(inst.polynomial, row.element_order);
  } catch (const NonIntegerEvaluation&) {
    row.eval.reset();
  }
  row.match = row.eval.has_value() && *row.eval == static_cast<unsigned long>(row.fixed);
  return row;
}

}  // namespace

std::vector<ElementCheck> verify_csp_roots(const CSPInstance& inst) {
  const std::uint64_t order = inst.action.order();
  std::vector<ElementCheck> rows(order);
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const bool parallel = hw > 1 && order > 1 && inst.action.size() * order > 200000;
  if (!parallel) {
    for (std::uint64_t j = 0; j < order; ++j) rows[j] = check_element(inst, j);
    return rows;
  }
  // Elements are independent; each worker fills its own stride of rows.
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(hw, order));
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::uint64_t j = w; j < order; j += workers) rows[j] = check_element(inst, j);
    }));
  }
  for (auto& t : tasks) t.get();
  return rows;
}

std::vector<ResidueCheck> verify_csp_orbits(const CSPInstance& inst) {
  const std::uint64_t order = inst.action.order();
  const auto a = fold_mod_qn(inst.polynomial, order);
  const auto orbits = orbit_decompose(inst.action);
  std::vector<ResidueCheck> out;
  for (std::uint64_t i = 0; i < order; ++i) {
    ResidueCheck r;
    r.i = i;
    r.folded = a[i];
    for (const auto& o : orbits) r.orbit_count += (i % o.stabilizer_order == 0) ? 1 : 0;
    r.match = r.folded == static_cast<unsigned long>(r.orbit_count);
    out.push_back(std::move(r));
  }
  return out;
}

Checker parse_checker(const std::string& s) {
  if (s == "roots") return Checker::roots;
  if (s == "orbits") return Checker::orbits;
  if (s == "both") return Checker::both;
  throw PreconditionViolation("unknown checker '" + s + "' (expected roots, orbits or both)");
}

const char* to_string(Checker c) {
  switch (c) {
    case Checker::roots:
      return "roots";
    case Checker::orbits:
      return "orbits";
    case Checker::both:
      return "both";
  }
  return "both";
}

CSPReport run_checks(const CSPInstance& inst, Checker which) {
  CSPReport r;
  r.family = inst.family;
  r.params = inst.params;
  r.size = inst.action.size();
  r.order = inst.action.order();
  r.checker = to_string(which);
  r.polynomial = inst.polynomial.to_string();
  r.a = fold_mod_qn(inst.polynomial, r.order);

  std::map<std::size_t, OrbitClass> hist;
  for (const auto& o : orbit_decompose(inst.action)) {
    auto& c = hist[o.members.size()];
    c.size = o.members.size();
    c.stabilizer = o.stabilizer_order;
    ++c.count;
  }
  for (const auto& [size, c] : hist) r.orbits.push_back(c);

  if (which != Checker::orbits) {
    r.rows = verify_csp_roots(inst);
    r.roots_pass = std::all_of(r.rows.begin(), r.rows.end(), [](const auto& x) { return x.match; });
  }
  if (which != Checker::roots) {
    r.residues = verify_csp_orbits(inst);
    r.orbits_pass = std::all_of(r.residues.begin(), r.residues.end(), [](const auto& x) { return x.match; });
  }
  r.verdict = r.roots_pass && r.orbits_pass;
  return r;
}

namespace {

std::uint64_t residue_step(long embedding, std::uint64_t j, std::uint64_t scale, std::uint64_t modulus) {
  auto m = static_cast<long long>(modulus);
  long long e = static_cast<long long>(embedding) % m;
  if (e < 0) e += m;
  return static_cast<std::uint64_t>(e) * (j % modulus) % modulus * scale % modulus;
}

}  // namespace

BiCSPReport verify_bicsp(const BicyclicInstance& inst) {
  const std::size_t n = inst.labels.size();
  if (inst.gen1.size() != n || inst.gen2.size() != n) throw PreconditionViolation("generators must act on the label set");
  CyclicAction first(inst.labels, inst.gen1, inst.order1);
  CyclicAction second(inst.labels, inst.gen2, inst.order2);
  for (std::size_t x = 0; x < n; ++x) {
    if (inst.gen1[inst.gen2[x]] != inst.gen2[inst.gen1[x]]) {
      throw NonCommutingActions("generators do not commute at '" + inst.labels[x] + "'");
    }
  }
  const std::uint64_t L = std::lcm(inst.order1, inst.order2);
  BiCSPReport rep;
  rep.verdict = true;
  for (std::uint64_t j = 0; j < inst.order1; ++j) {
    const auto p1 = first.power(j);
    for (std::uint64_t k = 0; k < inst.order2; ++k) {
      const auto p2 = second.power(k);
      BiCell cell;
      cell.j = j;
      cell.k = k;
      for (std::size_t x = 0; x < n; ++x) cell.fixed += p1[p2[x]] == x ? 1 : 0;
      // omega^{e1 j} = zeta^{e1 j L/o1} with zeta a primitive L-th root.
      const std::uint64_t qs = residue_step(inst.q_embedding, j, L / inst.order1, L);
      const std::uint64_t ts = residue_step(inst.t_embedding, k, L / inst.order2, L);
      const CyclotomicResidue value = eval_bivariate_at_root(inst.polynomial, L, qs, ts);
      if (value.is_integer()) cell.eval = value.integer_value();
      cell.match = cell.eval.has_value() && *cell.eval == static_cast<unsigned long>(cell.fixed);
      rep.verdict = rep.verdict && cell.match;
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

BicyclicInstance toy_bicyclic_instance(long t_embedding) {
  BicyclicInstance inst;
  // Index e stands for omega^e; multiplying by omega shifts e by one.
  inst.labels = {"1", "w", "w^2"};
  inst.gen1 = {1, 2, 0};
  inst.gen2 = {1, 2, 0};
  inst.order1 = 3;
  inst.order2 = 3;
  inst.q_embedding = 1;
  inst.t_embedding = t_embedding;
  inst.polynomial.add_term(0, 0, 1);
  inst.polynomial.add_term(1, 1, 1);
  inst.polynomial.add_term(2, 2, 1);
  return inst;
}

bool verify_block_partition(const CSPInstance& inst, const std::vector<unsigned>& stat,
                            const std::vector<std::vector<Index>>& blocks, std::uint64_t j) {
  const std::size_t n = inst.action.size();
  if (stat.size() != n) throw StatisticMismatch("statistic must assign a value to every element");
  std::vector<Integer> gf;
  for (unsigned s : stat) {
    if (s >= gf.size()) gf.resize(s + 1);
    gf[s] += 1;
  }
  if (IntPolynomial(std::move(gf)) != inst.polynomial) {
    throw StatisticMismatch("statistic generating function differs from the instance polynomial");
  }
  std::vector<bool> covered(n, false);
  for (const auto& b : blocks) {
    for (Index x : b) {
      if (x >= n || covered[x]) throw PreconditionViolation("blocks are not a partition of the index set");
      covered[x] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw PreconditionViolation("blocks do not cover the index set");
  }
  const std::uint64_t d = inst.action.element_order(j);
  const std::size_t fixed = fixed_count(inst.action, j);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Integer> w;
    for (Index x : blocks[b]) {
      if (stat[x] >= w.size()) w.resize(stat[x] + 1);
      w[stat[x]] += 1;
    }
    Integer value;
    try {
      value = eval_at_root(IntPolynomial(std::move(w)), d);
    } catch (const NonIntegerEvaluation&) {
      return false;
    }
    if (value != (b < fixed ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace csplab
