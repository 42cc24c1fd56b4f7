// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "csplab/catalan.hpp"
#include "csplab/cli.hpp"
#include "csplab/errors.hpp"
#include "csplab/perms.hpp"
#include "csplab/qpoly.hpp"
#include "csplab/registry.hpp"
#include "csplab/sieve.hpp"
#include "csplab/tableaux.hpp"

using namespace csplab;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note = what;
    pass = false;
  }
};

// Shared across criteria: every sieved instance feeds the equivalence,
// falsifiability and Burnside checks.
struct Ledger {
  std::size_t instances = 0;
  Outcome equivalence;
  Outcome burnside;
};

Ledger ledger;

std::string describe(const CSPInstance& inst) {
  std::string s = inst.family;
  for (const auto& [k, v] : inst.params) s += " " + k + "=" + v;
  return s;
}

bool sieve(const CSPInstance& inst) {
  ++ledger.instances;
  const auto roots = run_checks(inst, Checker::roots);
  const auto orbits = run_checks(inst, Checker::orbits);
  const auto name = describe(inst);
  ledger.equivalence.require(roots.roots_pass == orbits.orbits_pass, "checkers disagree on " + name);
  const auto bad = corrupt_coefficient(inst, 1);
  ledger.equivalence.require(!run_checks(bad, Checker::roots).verdict, "roots misses corruption on " + name);
  ledger.equivalence.require(!run_checks(bad, Checker::orbits).verdict, "orbits misses corruption on " + name);

  const auto& a = inst.action;
  std::size_t total = 0;
  for (std::uint64_t j = 0; j < a.order(); ++j) total += fixed_count(a, j);
  const auto orbit_list = orbit_decompose(a);
  ledger.burnside.require(total == a.order() * orbit_list.size(), "Burnside fails on " + name);
  return roots.verdict && orbits.verdict;
}

bool sieve_family(const std::string& family, const Params& params) {
  return sieve(registry_instantiate(family, params));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int c = run_cli(args, out, err);
  if (code != nullptr) *code = c;
  return out.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::vector<std::size_t> orbit_sizes(const CyclicAction& a) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbit_decompose(a)) sizes.push_back(o.members.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::size_t> fixed_row(const CyclicAction& a) {
  std::vector<std::size_t> row;
  for (std::uint64_t j = 0; j < a.order(); ++j) row.push_back(fixed_count(a, j));
  return row;
}

SYTableau promote_power(SYTableau t, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) t = promote(t);
  return t;
}

Outcome multisets() {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 0; k <= 8; ++k)
      r.require(sieve_family("multiset", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}),
                "multiset n=" + std::to_string(n) + " k=" + std::to_string(k));
  const double elapsed = seconds_since(start);
  r.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  const auto report = cli({"verify", "multiset", "--n", "3", "--k", "2"});
  r.require(contains(report, "f(q) = 1+q+2q^2+q^3+q^4"), "n=3 k=2 polynomial");
  r.require(contains(report, "evals = (6,0,0)"), "n=3 k=2 evaluations");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", elapsed);
  if (r.pass) r.note = buf;
  return r;
}

Outcome subsets() {
  Outcome r;
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned k = 0; k <= n; ++k)
      r.require(sieve_family("subset", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}),
                "subset n=" + std::to_string(n) + " k=" + std::to_string(k));
  const std::vector<std::pair<unsigned, std::string>> generators = {
      {6, "(1,2)(3,4)(5,6)"}, {7, "(1,2)(3,4)(5,6)"}, {6, "(1,2,3)(4,5,6)"},
      {9, "(1,4,7)(2,5,8)(3,6,9)"}, {9, "(1,2,3,4,5,6,7,8)"}};
  for (const auto& [n, g] : generators) {
    for (unsigned k = 0; k <= n; ++k) {
      const Params p{{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"gen", g}};
      r.require(sieve_family("subset", p), "subset " + g + " k=" + std::to_string(k));
    }
  }
  bool rejected = false;
  try {
    registry_instantiate("subset", {{"n", "5"}, {"k", "2"}, {"gen", "(1,2,4)(3,5)"}});
  } catch (const NotNearlyFree&) {
    rejected = true;
  }
  r.require(rejected, "(1,2,4)(3,5) on [5] accepted");
  bool also_rejected = false;
  try {
    registry_instantiate("subset", {{"n", "7"}, {"k", "2"}, {"gen", "(1,4,2,5)"}});
  } catch (const NotNearlyFree&) {
    also_rejected = true;
  }
  r.require(also_rejected, "(1,4,2,5) on [7] accepted");
  return r;
}

Outcome rectangles() {
  Outcome r;
  std::vector<std::pair<unsigned, unsigned>> shapes;
  for (unsigned k = 1; k <= 7; ++k) shapes.emplace_back(2, k);
  shapes.insert(shapes.end(), {{3, 3}, {3, 4}, {4, 4}});
  const auto start = std::chrono::steady_clock::now();
  for (auto [m, n] : shapes) {
    const auto inst = registry_instantiate("syt_rect", {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
    if (m == 4 && n == 4) {
      r.require(inst.action.size() == 24024, "|SYT(4^4)|");
      r.require(inst.action.order() == 16, "order of SYT(4^4)");
    }
    r.require(sieve(inst), "syt_rect " + std::to_string(m) + "x" + std::to_string(n));
  }
  const double elapsed = seconds_since(start);
  r.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  const auto three = syt_rect_instance(2, 3);
  r.require(three.polynomial == IntPolynomial({1, 0, 1, 1, 1, 0, 1}), "q_count_syt(3,3)");
  r.require(fixed_row(three.action) == std::vector<std::size_t>{5, 0, 2, 3, 2, 0}, "SYT(3,3) fixed counts");
  for (const auto& row : verify_csp_roots(three)) r.require(row.match, "SYT(3,3) evaluation");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", elapsed);
  if (r.pass) r.note = buf;
  return r;
}

Outcome matchings() {
  Outcome r;
  for (unsigned n = 1; n <= 7; ++n) r.require(sieve_family("ncm", {{"n", std::to_string(n)}}), "ncm n=" + std::to_string(n));
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_syt(Partition::rectangle(2, n)))
      r.require(tableau_to_matching(promote(t)) == rotate(tableau_to_matching(t), -1), "transport at " + t.to_string());
  return r;
}

Outcome partitions() {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  for (unsigned n = 1; n <= 9; ++n) r.require(sieve_family("ncp", {{"n", std::to_string(n)}}), "ncp n=" + std::to_string(n));
  const double elapsed = seconds_since(start);
  r.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  r.require(ncp_instance(9).action.size() == 4862, "|NC(9)|");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", elapsed);
  if (r.pass) r.note = buf;
  return r;
}

Outcome triangulations() {
  Outcome r;
  for (unsigned n = 1; n + 2 <= 12; ++n)
    r.require(sieve_family("triangulation", {{"n", std::to_string(n)}}), "polygon " + std::to_string(n + 2));
  const auto pentagon = triangulation_instance(3);
  r.require(orbit_sizes(pentagon.action) == std::vector<std::size_t>{5}, "pentagon orbit");
  return r;
}

Outcome conjugacy_classes() {
  Outcome r;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::string text;
      for (int p : lambda.parts()) text += (text.empty() ? "" : ",") + std::to_string(p);
      r.require(sieve_family("conj_class", {{"lambda", text}}), "conj_class " + text);
    }
  }
  const auto three = conj_class_instance({3});
  r.require(three.polynomial == IntPolynomial({2}), "(3) polynomial");
  r.require(fixed_row(three.action) == std::vector<std::size_t>{2, 2, 2}, "(3) fixed counts");
  return r;
}

Outcome proper_triangulations() {
  Outcome r;
  for (unsigned n = 1; n <= 5; ++n) {
    std::size_t proper = 0;
    for (const auto& t : enumerate_triangulations(2 * n + 2)) proper += is_proper_triangulation(t) ? 1 : 0;
    r.require(Integer(static_cast<unsigned long>(proper)) == proper_count(2 * n), "count N=" + std::to_string(2 * n));
    r.require(proper_count(2 * n) == (Integer(1) << n) * fuss_catalan(n, 2), "closed count N=" + std::to_string(2 * n));
  }
  r.require(proper_count(4) == 12, "#P_6");
  r.require(proper_count(8) == 880, "#P_10");
  for (unsigned n = 1; n <= 4; ++n) {
    const auto inst = proper_triangulation_instance(n);
    if (sieve(inst)) continue;
    std::string detail = "N=" + std::to_string(2 * n) + " fails at";
    for (const auto& row : verify_csp_roots(inst)) {
      if (row.match) continue;
      detail += " j=" + std::to_string(row.j) + " (fixed " + std::to_string(row.fixed) + ", f(w)=" +
                (row.eval ? row.eval->get_str() : std::string("non-integer")) + ")";
    }
    r.require(false, detail);
  }
  return r;
}

Outcome plethysms() {
  Outcome r;
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned k = 0; k <= 6; ++k) {
      const Params p{{"base", "cycle"}, {"b.n", std::to_string(n)}, {"k", std::to_string(k)}, {"kind", "h"}};
      const auto inst = registry_instantiate("plethysm", p);
      const auto multiset = multiset_instance(n, k);
      const auto tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
      r.require(sieve(inst), "h" + tag);
      r.require(inst.polynomial == multiset.polynomial, "h polynomial" + tag);
      r.require(inst.action.size() == multiset.action.size(), "h size" + tag);
      r.require(fixed_row(inst.action) == fixed_row(multiset.action), "h action" + tag);
    }
  }
  for (unsigned n : {3U, 5U, 7U}) {
    for (unsigned k = 0; k <= n; ++k) {
      const Params p{{"base", "cycle"}, {"b.n", std::to_string(n)}, {"k", std::to_string(k)}, {"kind", "e"}};
      r.require(sieve_family("plethysm", p), "e n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return r;
}

Outcome bicyclic() {
  Outcome r;
  const auto good = verify_bicsp(toy_bicyclic_instance(1));
  r.require(good.verdict, "identity embeddings");
  r.require(good.cells.size() == 9 && good.cells[4].eval && *good.cells[4].eval == 0, "f(w,w) = 0");
  const auto bad = verify_bicsp(toy_bicyclic_instance(-1));
  r.require(!bad.verdict, "inverted embedding passes");
  r.require(bad.cells.size() == 9 && bad.cells[4].eval && *bad.cells[4].eval == 3 && !bad.cells[4].match,
            "f(w,w^-1) = 3");
  return r;
}

Outcome equivalence() {
  Outcome r = ledger.equivalence;
  int code = 0;
  const auto report = cli({"verify", "multiset", "--n", "3", "--k", "2", "--corrupt-coeff", "2"}, &code);
  r.require(code == kMismatch && contains(report, "verdict: FAIL"), "--corrupt-coeff accepted");
  for (const char* checker : {"roots", "orbits"}) {
    cli({"verify", "ncp", "--n", "5", "--corrupt-coeff", "3", "--checker", checker}, &code);
    r.require(code == kMismatch, std::string("--corrupt-coeff with ") + checker);
  }
  if (r.pass) r.note = std::to_string(ledger.instances) + " instances";
  return r;
}

Outcome golden() {
  Outcome r;
  struct Row {
    const char* w;
    unsigned inv, maj, des, exc;
  };
  const Row table[] = {{"123", 0, 0, 0, 0}, {"132", 1, 2, 1, 1}, {"213", 1, 1, 1, 1},
                       {"231", 2, 2, 1, 2}, {"312", 2, 1, 1, 1}, {"321", 3, 3, 2, 1}};
  for (const auto& row : table) {
    const auto w = Permutation::from_string(row.w);
    r.require(stat(w, Statistic::inv) == row.inv && stat(w, Statistic::maj) == row.maj &&
                  stat(w, Statistic::des) == row.des && stat(w, Statistic::exc) == row.exc,
              std::string("statistics of ") + row.w);
  }
  const auto w = Permutation::from_string("31524");
  r.require(stat(w, Statistic::inv) == 4 && stat(w, Statistic::maj) == 4, "31524");
  r.require(q_int(3) == IntPolynomial({1, 1, 1}), "[3]_q");
  r.require(q_factorial(3) == IntPolynomial({1, 2, 2, 1}), "[3]_q!");
  r.require(gaussian_binomial(4, 2) == IntPolynomial({1, 1, 2, 1, 1}), "[4 choose 2]_q");
  r.require(eulerian_poly(3) == IntPolynomial({1, 4, 1}), "A_3");
  r.require(eulerian_poly(4) == IntPolynomial({1, 11, 11, 1}), "A_4");
  r.require(eulerian_poly(0) == IntPolynomial({1}), "A_0");
  r.require(eval_at_root(IntPolynomial({1, 1, 2, 1, 1}), 3) == 0, "f(w) = 0");
  r.require(root_of_unity_binomial(3, 2, 3) == 0, "[3 choose 2] at w_3");
  r.require(fold_mod_qn(IntPolynomial({1, 1, 2, 1, 1}), 3) == std::vector<Integer>{2, 2, 2}, "fold (2,2,2)");
  r.require(plethysm_h(2, IntPolynomial({1, 2})) == IntPolynomial({1, 2, 3}), "h_2[1+2q]");
  r.require(plethysm_h(2, q_int(3)) == gaussian_binomial(4, 2), "h_2[[3]_q]");
  r.require(q_fuss_catalan_A(2, 2) == IntPolynomial({1, 0, 1, 0, 1}), "Cat_{2,2}(q)");
  r.require(fuss_catalan(2, 2) == 3, "Cat_{2,2}");
  r.require(proper_count(4) == 12, "#P_6");
  r.require(cycle_type(Permutation::from_cycles("(1,5,2)(3,7)(4,8,9)(6)", 9)) == std::vector<int>{3, 3, 2, 1},
            "cycle type");
  r.require(nearly_free_kind(Permutation::from_cycles("(1,2)(3,4)(5,6)", 6), 6) == ActionKind::free, "free on [6]");
  r.require(nearly_free_kind(Permutation::from_cycles("(1,2)(3,4)(5,6)", 7), 7) == ActionKind::nearly_free,
            "nearly free on [7]");
  r.require(hooklengths(Partition::parse("5,4,4,2"))[1][1] == 5, "h_{2,2} of (5,4,4,2)");
  r.require(hooklengths(Partition::parse("3,2")) == std::vector<std::vector<int>>{{4, 3, 1}, {2, 1}}, "hooks of (3,2)");
  r.require(count_syt(Partition::parse("3,2")) == 5, "f^(3,2)");
  r.require(promote(SYTableau::parse("135/246/7")) == SYTableau::parse("124/357/6"), "promotion example");
  r.require(evacuate(SYTableau::parse("136/24/5")) == SYTableau::parse("125/36/4"), "evacuation example");
  r.require(pon_wang_iota(SYTableau::parse("136/24/5")) == SYTableau::parse("1.3.6/2.4.8/5.7.11/9.10.12"),
            "embedding example");
  const auto [p, q] = rsk_word(Permutation::from_string("31452"));
  r.require(p == SYTableau::parse("125/34") && q == SYTableau::parse("134/25"), "RSK of 31452");
  const auto [mp, mq] = rsk_matrix(NonnegMatrix{{{1, 2, 0}, {1, 0, 1}}});
  r.require(mp == SSYTableau(Tableau::parse("1123/2")) && mq == SSYTableau(Tableau::parse("1112/2")),
            "Knuth RSK");
  NonnegMatrix perm_matrix{std::vector<std::vector<int>>(5, std::vector<int>(5, 0))};
  const auto v = Permutation::from_string("31452");
  for (int i = 1; i <= 5; ++i) perm_matrix.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(v(i) - 1)] = 1;
  const auto [pp, pq] = rsk_matrix(perm_matrix);
  r.require(static_cast<const Tableau&>(pp) == p && static_cast<const Tableau&>(pq) == q, "matrix RSK of 31452");
  r.require(ballot_sequence(SYTableau::parse("135/246/7")) == std::vector<int>{1, 2, 1, 2, 1, 2, 3}, "ballot word");
  r.require(tableau_to_matching(SYTableau::parse("1245/3678")).to_string() == "18,23,47,56", "tableau to matching");
  const auto multiset = multiset_instance(3, 2);
  r.require(multiset.action.size() == 6 && multiset.polynomial == IntPolynomial({1, 1, 2, 1, 1}), "multiset(3,2)");
  r.require(orbit_sizes(multiset.action) == std::vector<std::size_t>{3, 3}, "multiset(3,2) orbits");
  r.require(fixed_count(multiset.action, 1) == 0, "multiset(3,2) fixed points");
  r.require(orbit_sizes(syt_rect_instance(2, 3).action) == std::vector<std::size_t>{2, 3}, "SYT(3,3) orbits");
  const auto ncp3 = ncp_instance(3);
  r.require(ncp3.action.size() == 5 && ncp3.polynomial == q_catalan(3), "ncp(3)");
  r.require(enumerate_set_partitions(3).size() == 5 && enumerate_nc_partitions(3).size() == 5, "NC(3)");
  r.require(enumerate_nc_matchings(3).size() == 5, "matchings of [6]");
  r.require(is_proper_triangulation(Triangulation(5, {{1, 3}, {1, 4}})), "proper pentagon triangulation");
  r.require(!is_proper_triangulation(Triangulation(5, {{1, 3}, {3, 5}})), "improper pentagon triangulation");
  const auto g = Permutation::from_cycles("(1,2,4)(3,5)", 5);
  std::size_t fixed_multisets = 0;
  for (unsigned k = 1; k <= 5; ++k) {
    const auto inst = multiset_instance(5, k, g);
    for (const auto& o : orbit_decompose(inst.action)) fixed_multisets += o.members.size() == 1 ? 1 : 0;
  }
  r.require(fixed_multisets == 4, "multisets fixed by (1,2,4)(3,5)");
  return r;
}

Outcome properties() {
  Outcome r;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}})
    for (const auto& t : enumerate_syt(Partition::rectangle(m, n)))
      r.require(promote_power(t, static_cast<std::size_t>(m * n)) == t, "rectangle order at " + t.to_string());
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_syt(Partition::staircase(n)))
      r.require(static_cast<const Tableau&>(promote_power(t, static_cast<std::size_t>(n * (n + 1) / 2))) ==
                    t.transpose(),
                "staircase transpose at " + t.to_string());
  for (int n = 1; n <= 7; ++n) {
    Integer squares = 0;
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& t : enumerate_syt(lambda)) r.require(evacuate(evacuate(t)) == t, "evacuation at " + t.to_string());
      squares += count_syt(lambda) * count_syt(lambda);
    }
    std::size_t images = 0;
    std::vector<std::string> seen;
    for (const auto& w : all_permutations(static_cast<std::size_t>(n))) {
      const auto [p, q] = rsk_word(w);
      r.require(rsk_word_inverse(p, q) == w, "RSK inverse at " + w.to_string());
      seen.push_back(p.to_string() + "|" + q.to_string());
      ++images;
    }
    std::sort(seen.begin(), seen.end());
    r.require(std::unique(seen.begin(), seen.end()) == seen.end(), "RSK injective for n=" + std::to_string(n));
    r.require(Integer(static_cast<unsigned long>(images)) == squares, "sum of squares for n=" + std::to_string(n));
  }
  r.require(ledger.burnside.pass, ledger.burnside.note);
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"multisets under cyclic rotation", multisets},
      {"subsets under nearly free generators", subsets},
      {"rectangular tableaux under promotion", rectangles},
      {"noncrossing matchings and transported promotion", matchings},
      {"noncrossing partitions under rotation", partitions},
      {"polygon triangulations under rotation", triangulations},
      {"conjugacy classes under conjugation by the long cycle", conjugacy_classes},
      {"proper triangulations of even polygons", proper_triangulations},
      {"plethystic substitution", plethysms},
      {"bicyclic toy example", bicyclic},
      {"checker equivalence and falsifiability", equivalence},
      {"golden values", golden},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.note = std::string("exception: ") + e.what();
    }
    failures += r.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << ": " << (r.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
