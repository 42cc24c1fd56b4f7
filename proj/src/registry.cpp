#include "csplab/registry.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <set>

#include "csplab/catalan.hpp"
#include "csplab/encoding.hpp"
#include "csplab/errors.hpp"
#include "csplab/tableaux.hpp"

namespace csplab {

Caps Caps::from_environment() {
  Caps caps;
  if (const char* env = std::getenv("CSP_LAB_CAP"); env != nullptr && *env != '\0') {
    std::size_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end || v == 0) {
      throw PreconditionViolation(std::string("CSP_LAB_CAP must be a positive integer, got '") + env + "'");
    }
    caps.max_size = v;
  }
  return caps;
}

const std::vector<FamilyInfo>& family_catalogue() {
  static const std::vector<FamilyInfo> families = {
      {"cycle", "n>=1", "[n] under i -> i+1, f = [n]_q"},
      {"multiset", "n>=1, k>=0, gen=CYCLES (optional, nearly free)", "k-multisets of [n], f = [n+k-1 choose k]_q"},
      {"subset", "n>=1, 0<=k, gen=CYCLES (optional, nearly free)", "k-subsets of [n], f = [n choose k]_q"},
      {"syt_rect", "m>=1, n>=1", "SYT of the m x n rectangle under promotion, f = q-hook formula"},
      {"ncm", "n>=1", "noncrossing perfect matchings of [2n] under rotation, f = f^{(n,n)}(q)"},
      {"ncp", "n>=1", "noncrossing partitions of [n] under rotation, f = Cat_n(q)"},
      {"triangulation", "n>=1", "triangulations of the (n+2)-gon under rotation, f = Cat_n(q)"},
      {"conj_class", "lambda=PARTS (|lambda| <= 8)", "conjugacy class under conjugation by (1,...,n), f = sum q^{maj-exc}"},
      {"proper_triangulation", "n>=1", "proper triangulations of the (2n+2)-gon under rotation"},
      {"plethysm", "base=FAMILY, k>=0, kind=h|e, b.KEY=VALUE", "k-multisets (h) or k-subsets (e) of a base instance"},
  };
  return families;
}

namespace {

class ParamReader {
 public:
  ParamReader(std::string family, const Params& params) : family_(std::move(family)), params_(params) {}

  unsigned uint(const std::string& key, std::optional<unsigned> fallback = std::nullopt) {
    used_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) {
      if (fallback) return *fallback;
      throw PreconditionViolation(family_ + ": missing parameter '" + key + "'");
    }
    const std::string& s = it->second;
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw PreconditionViolation(family_ + ": parameter '" + key + "' must be a nonnegative integer, got '" + s + "'");
    }
    return v;
  }

  std::optional<std::string> text(const std::string& key) {
    used_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    return it->second;
  }

  /// Parameters with the given prefix, prefix stripped.
  Params prefixed(const std::string& prefix) {
    Params out;
    for (const auto& [k, v] : params_) {
      if (k.rfind(prefix, 0) == 0) {
        used_.insert(k);
        out[k.substr(prefix.size())] = v;
      }
    }
    return out;
  }

  void finish() const {
    for (const auto& [k, v] : params_) {
      if (!used_.contains(k)) throw PreconditionViolation(family_ + ": unknown parameter '" + k + "'");
    }
  }

 private:
  std::string family_;
  const Params& params_;
  std::set<std::string> used_;
};

void require_positive(unsigned v, const std::string& what) {
  if (v == 0) throw PreconditionViolation(what + " must be positive");
}

void check_size(const Integer& expected, const Caps& caps, const std::string& what) {
  if (expected > static_cast<unsigned long>(caps.max_size)) {
    throw CapExceeded(what + " has " + expected.get_str() + " elements, above the cap " + std::to_string(caps.max_size));
  }
}

void check_order(std::uint64_t order, const Caps& caps, const std::string& what) {
  if (order > caps.max_order) {
    throw CapExceeded(what + " has group order " + std::to_string(order) + ", above the cap " +
                      std::to_string(caps.max_order));
  }
}

CSPInstance finish_instance(CyclicAction action, IntPolynomial f, std::string family, Params params) {
  if (f.at_one() != static_cast<unsigned long>(action.size())) {
    throw InternalError(family + ": f(1) = " + f.at_one().get_str() + " but #X = " + std::to_string(action.size()));
  }
  return CSPInstance{std::move(action), std::move(f), std::move(family), std::move(params)};
}

Permutation default_generator(unsigned N, const std::optional<Permutation>& g) {
  if (!g) return Permutation::long_cycle(N);
  if (g->size() != N) throw PreconditionViolation("generator must act on [" + std::to_string(N) + "]");
  return *g;
}

// Combinations of [N] of size k, with or without repetition, in
// lexicographic order.
std::vector<std::vector<int>> combinations(unsigned N, unsigned k, bool repeat) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int lo) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int x = lo; x <= static_cast<int>(N); ++x) {
      cur.push_back(x);
      go(repeat ? x : x + 1);
      cur.pop_back();
    }
  };
  go(1);
  return out;
}

CSPInstance combination_instance(unsigned N, unsigned k, const std::optional<Permutation>& gen, bool repeat,
                                  const std::string& family) {
  if (N == 0) throw PreconditionViolation(family + ": n must be positive");
  const Permutation g = default_generator(N, gen);
  const bool wide = N > 9;
  auto encode = [wide](const std::vector<int>& s) { return s.empty() ? std::string(kEmptyLabel) : join_entries(s, wide); };
  auto act = [&g](const std::vector<int>& s) {
    std::vector<int> t;
    t.reserve(s.size());
    for (int x : s) t.push_back(g(x));
    std::sort(t.begin(), t.end());
    return t;
  };
  auto action = build_action(combinations(N, k, repeat), encode, act, g.order());
  IntPolynomial f = repeat ? gaussian_binomial(static_cast<long>(N) + k - 1, k) : gaussian_binomial(N, k);
  Params params{{"n", std::to_string(N)}, {"k", std::to_string(k)}};
  if (gen) params["gen"] = gen->to_string();
  return finish_instance(std::move(action), std::move(f), family, std::move(params));
}

std::vector<int> parse_parts(const std::string& text) {
  return Partition::parse(text).parts();
}

Integer class_size(const std::vector<int>& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : lambda) ++mult[p];
  for (auto [part, m] : mult) {
    Integer mf;
    mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(m));
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= pw * mf;
  }
  return fact / z;
}

std::optional<Permutation> parse_generator(ParamReader& r, unsigned n) {
  auto text = r.text("gen");
  if (!text) return std::nullopt;
  Permutation g = Permutation::from_cycles(*text, n);
  if (nearly_free_kind(g, n) == ActionKind::neither) {
    throw NotNearlyFree("generator " + *text + " does not act nearly freely on [" + std::to_string(n) + "]");
  }
  return g;
}

}  // namespace

CSPInstance cycle_instance(unsigned n) {
  if (n == 0) throw PreconditionViolation("cycle: n must be positive");
  std::vector<int> pts(n);
  for (unsigned i = 0; i < n; ++i) pts[i] = static_cast<int>(i) + 1;
  auto action = build_action(
      pts, [](int x) { return std::to_string(x); }, [n](int x) { return x % static_cast<int>(n) + 1; }, n);
  return finish_instance(std::move(action), q_int(n), "cycle", {{"n", std::to_string(n)}});
}

CSPInstance multiset_instance(unsigned N, unsigned k, const std::optional<Permutation>& g) {
  return combination_instance(N, k, g, true, "multiset");
}

CSPInstance subset_instance(unsigned N, unsigned k, const std::optional<Permutation>& g) {
  return combination_instance(N, k, g, false, "subset");
}

CSPInstance syt_rect_instance(unsigned m, unsigned n) {
  require_positive(m, "syt_rect: m");
  require_positive(n, "syt_rect: n");
  const Partition shape = Partition::rectangle(static_cast<int>(m), static_cast<int>(n));
  auto action = build_action(
      enumerate_syt(shape), [](const SYTableau& t) { return t.to_string(); }, [](const SYTableau& t) { return promote(t); },
      static_cast<std::uint64_t>(m) * n);
  return finish_instance(std::move(action), q_count_syt(shape), "syt_rect",
                         {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
}

CSPInstance ncm_instance(unsigned n) {
  require_positive(n, "ncm: n");
  auto action = build_action(
      enumerate_nc_matchings(n), [](const Matching& x) { return x.to_string(); },
      [](const Matching& x) { return rotate(x); }, 2ULL * n);
  return finish_instance(std::move(action), q_count_syt(Partition::rectangle(2, static_cast<int>(n))), "ncm",
                         {{"n", std::to_string(n)}});
}

CSPInstance ncp_instance(unsigned n) {
  require_positive(n, "ncp: n");
  auto action = build_action(
      enumerate_nc_partitions(n), [](const SetPartition& x) { return x.to_string(); },
      [](const SetPartition& x) { return rotate(x); }, n);
  return finish_instance(std::move(action), q_catalan(n), "ncp", {{"n", std::to_string(n)}});
}

CSPInstance triangulation_instance(unsigned n) {
  require_positive(n, "triangulation: n");
  auto action = build_action(
      enumerate_triangulations(n + 2), [](const Triangulation& x) { return x.to_string(); },
      [](const Triangulation& x) { return rotate(x); }, n + 2ULL);
  return finish_instance(std::move(action), q_catalan(n), "triangulation", {{"n", std::to_string(n)}});
}

CSPInstance conj_class_instance(const std::vector<int>& lambda) {
  const Partition shape(lambda);
  const auto n = static_cast<std::size_t>(shape.size());
  if (n == 0) throw PreconditionViolation("conj_class: lambda must be nonempty");
  const Permutation c = Permutation::long_cycle(n);
  const Permutation c_inv = c.inverse();
  auto action = build_action(
      conjugacy_class(shape.parts()), [](const Permutation& w) { return w.to_string(); },
      [&](const Permutation& w) { return c * w * c_inv; }, n);
  IntPolynomial f = subst_t_q_inverse(maj_exc_genfun(shape.parts())).to_polynomial();
  std::string text;
  for (std::size_t i = 0; i < shape.parts().size(); ++i) text += (i ? "," : "") + std::to_string(shape.parts()[i]);
  return finish_instance(std::move(action), std::move(f), "conj_class", {{"lambda", text}});
}

CSPInstance proper_triangulation_instance(unsigned n) {
  require_positive(n, "proper_triangulation: n");
  std::vector<Triangulation> proper;
  for (auto& t : enumerate_triangulations(2 * n + 2))
    if (is_proper_triangulation(t)) proper.push_back(std::move(t));
  auto action = build_action(
      proper, [](const Triangulation& x) { return x.to_string(); }, [](const Triangulation& x) { return rotate(x); },
      2ULL * n + 2);
  return finish_instance(std::move(action), proper_triangulation_poly(n), "proper_triangulation",
                         {{"n", std::to_string(n)}});
}

CSPInstance plethysm_instance(const CSPInstance& base, unsigned k, char kind, std::size_t max_size) {
  if (kind != 'h' && kind != 'e') throw PreconditionViolation("plethysm: kind must be h or e");
  const bool repeat = kind == 'h';
  const std::uint64_t order = base.action.order();
  if (!repeat && order % 2 == 0) {
    throw PreconditionViolation("plethysm: e_k needs a group of odd order, base has order " + std::to_string(order));
  }
  const auto m = static_cast<long>(base.action.size());
  const Integer expected = repeat ? binomial(m + k - 1, k) : binomial(m, k);
  if (expected > static_cast<unsigned long>(max_size)) {
    throw CapExceeded("plethysm has " + expected.get_str() + " elements, above the cap " + std::to_string(max_size));
  }
  std::vector<std::vector<Index>> objects;
  std::vector<Index> cur;
  std::function<void(Index)> go = [&](Index lo) {
    if (cur.size() == k) {
      objects.push_back(cur);
      return;
    }
    for (Index x = lo; x < base.action.size(); ++x) {
      cur.push_back(x);
      go(repeat ? x : x + 1);
      cur.pop_back();
    }
  };
  go(0);
  const auto& labels = base.action.labels();
  const auto& gen = base.action.generator();
  auto encode = [&labels](const std::vector<Index>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + labels[s[i]];
    return out + "}";
  };
  auto act = [&gen](const std::vector<Index>& s) {
    std::vector<Index> t;
    t.reserve(s.size());
    for (Index x : s) t.push_back(gen[x]);
    std::sort(t.begin(), t.end());
    return t;
  };
  auto action = build_action(objects, encode, act, order);
  IntPolynomial f = repeat ? plethysm_h(k, base.polynomial) : plethysm_e(k, base.polynomial);
  Params params{{"base", base.family}, {"k", std::to_string(k)}, {"kind", std::string(1, kind)}};
  for (const auto& [key, v] : base.params) params["b." + key] = v;
  return finish_instance(std::move(action), std::move(f), "plethysm", std::move(params));
}

CSPInstance registry_instantiate(const std::string& family, const Params& params, const Caps& caps) {
  ParamReader r(family, params);
  CSPInstance inst;
  if (family == "cycle") {
    const unsigned n = r.uint("n");
    r.finish();
    check_size(n, caps, "cycle");
    check_order(n, caps, "cycle");
    inst = cycle_instance(n);
  } else if (family == "multiset" || family == "subset") {
    const unsigned n = r.uint("n");
    const unsigned k = r.uint("k");
    require_positive(n, family + ": n");
    auto g = parse_generator(r, n);
    r.finish();
    const bool repeat = family == "multiset";
    check_size(repeat ? binomial(static_cast<long>(n) + k - 1, k) : binomial(n, k), caps, family);
    check_order(g ? g->order() : n, caps, family);
    inst = repeat ? multiset_instance(n, k, g) : subset_instance(n, k, g);
  } else if (family == "syt_rect") {
    const unsigned m = r.uint("m");
    const unsigned n = r.uint("n");
    r.finish();
    require_positive(m, "syt_rect: m");
    require_positive(n, "syt_rect: n");
    check_order(static_cast<std::uint64_t>(m) * n, caps, "syt_rect");
    check_size(count_syt(Partition::rectangle(static_cast<int>(m), static_cast<int>(n))), caps, "syt_rect");
    inst = syt_rect_instance(m, n);
  } else if (family == "ncm" || family == "ncp" || family == "triangulation") {
    const unsigned n = r.uint("n");
    r.finish();
    require_positive(n, family + ": n");
    check_size(catalan_number(n), caps, family);
    if (family == "ncm") {
      check_order(2ULL * n, caps, family);
      inst = ncm_instance(n);
    } else if (family == "ncp") {
      check_order(n, caps, family);
      inst = ncp_instance(n);
    } else {
      check_order(n + 2ULL, caps, family);
      inst = triangulation_instance(n);
    }
  } else if (family == "conj_class") {
    auto text = r.text("lambda");
    r.finish();
    if (!text) throw PreconditionViolation("conj_class: missing parameter 'lambda'");
    const auto lambda = parse_parts(*text);
    check_size(class_size(lambda), caps, "conj_class");
    inst = conj_class_instance(lambda);
  } else if (family == "proper_triangulation") {
    const unsigned n = r.uint("n");
    r.finish();
    require_positive(n, "proper_triangulation: n");
    check_order(2ULL * n + 2, caps, family);
    check_size(proper_count(2 * n), caps, family);
    // The enumeration visits every triangulation before filtering.
    check_size(catalan_number(2 * n), Caps{caps.max_size * 4, caps.max_order}, family + " (unfiltered)");
    inst = proper_triangulation_instance(n);
  } else if (family == "plethysm") {
    auto base_id = r.text("base");
    const unsigned k = r.uint("k");
    auto kind = r.text("kind").value_or("h");
    Params base_params = r.prefixed("b.");
    r.finish();
    if (!base_id) throw PreconditionViolation("plethysm: missing parameter 'base'");
    if (kind != "h" && kind != "e") throw PreconditionViolation("plethysm: kind must be h or e, got '" + kind + "'");
    const CSPInstance base = registry_instantiate(*base_id, base_params, caps);
    inst = plethysm_instance(base, k, kind[0], caps.max_size);
  } else {
    throw UnknownFamily("unknown family '" + family + "' (see `csp-lab list`)");
  }
  return inst;
}

}  // namespace csplab
