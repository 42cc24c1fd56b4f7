#pragma once

// Cyclic actions materialized as permutations of an indexed label list,
// and the two cyclic sieving checkers that run against them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "csplab/errors.hpp"
#include "csplab/qpoly.hpp"

namespace csplab {

using Index = std::uint32_t;

/// A finite set X (as sorted canonical labels) with a generator of a cyclic
/// group C acting on it. `order` is #C; the generator's own permutation
/// order always divides it.
class CyclicAction {
 public:
  CyclicAction() = default;
  /// Validates: labels sorted and distinct, generator a bijection of the
  /// indices, permutation order divides `order`.
  CyclicAction(std::vector<std::string> labels, std::vector<Index> generator, std::uint64_t order);

  std::size_t size() const { return labels_.size(); }
  std::uint64_t order() const { return order_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Index>& generator() const { return gen_; }

  /// lcm of the generator's cycle lengths.
  std::uint64_t permutation_order() const;
  /// generator^j as an index map (j reduced mod order).
  std::vector<Index> power(std::uint64_t j) const;
  /// Order of generator^j as a group element: order / gcd(order, j).
  std::uint64_t element_order(std::uint64_t j) const;

  std::optional<Index> find(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Index> gen_;
  std::uint64_t order_ = 1;
};

/// Materializes an action: encodes every object, sorts by label, and
/// tabulates the image of each object under `act` as an index.
template <typename T, typename Encode, typename Act>
CyclicAction build_action(const std::vector<T>& objects, Encode encode, Act act, std::uint64_t order) {
  std::vector<std::string> raw;
  raw.reserve(objects.size());
  for (const auto& o : objects) raw.push_back(encode(o));
  std::vector<std::size_t> perm(objects.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
  std::vector<std::string> labels;
  labels.reserve(raw.size());
  std::unordered_map<std::string, Index> where;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    labels.push_back(raw[perm[k]]);
    if (!where.emplace(labels.back(), static_cast<Index>(k)).second) {
      throw InternalError("duplicate label '" + labels.back() + "'");
    }
  }
  std::vector<Index> gen(objects.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const std::string image = encode(act(objects[perm[k]]));
    auto it = where.find(image);
    if (it == where.end()) throw InternalError("action leaves the set: '" + image + "'");
    gen[k] = it->second;
  }
  return CyclicAction(std::move(labels), std::move(gen), order);
}

struct Orbit {
  std::vector<Index> members;  // in generator order, starting at the least index
  std::uint64_t stabilizer_order = 1;
};

std::vector<Orbit> orbit_decompose(const CyclicAction& a);

/// Number of points fixed by generator^j.
std::size_t fixed_count(const CyclicAction& a, std::uint64_t j);

using Params = std::map<std::string, std::string>;

struct CSPInstance {
  CyclicAction action;
  IntPolynomial polynomial;
  std::string family;
  Params params;
};

/// Adds 1 to the coefficient of q^i (test hook for falsifiability).
CSPInstance corrupt_coefficient(CSPInstance inst, std::size_t i);

struct ElementCheck {
  std::uint64_t j = 0;
  std::uint64_t element_order = 1;
  std::size_t fixed = 0;
  std::optional<Integer> eval;  // empty when f(omega) is not an integer
  bool match = false;
  friend bool operator==(const ElementCheck&, const ElementCheck&) = default;
};

struct ResidueCheck {
  std::uint64_t i = 0;
  Integer folded;              // a_i
  std::size_t orbit_count = 0;  // #{orbits : s(O) | i}
  bool match = false;
  friend bool operator==(const ResidueCheck&, const ResidueCheck&) = default;
};

/// #X^{g^j} against f(omega_{o(g^j)}) for j = 0 .. order-1.
std::vector<ElementCheck> verify_csp_roots(const CSPInstance& inst);
/// Folded coefficients of f mod 1 - q^order against the stabilizer census.
std::vector<ResidueCheck> verify_csp_orbits(const CSPInstance& inst);

enum class Checker { roots, orbits, both };

Checker parse_checker(const std::string& s);
const char* to_string(Checker c);

struct OrbitClass {
  std::size_t size = 0;
  std::uint64_t stabilizer = 0;
  std::size_t count = 0;
  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

struct CSPReport {
  std::string family;
  Params params;
  std::size_t size = 0;
  std::uint64_t order = 1;
  std::string checker = "both";
  std::string polynomial;
  std::vector<ElementCheck> rows;
  std::vector<ResidueCheck> residues;
  std::vector<Integer> a;
  std::vector<OrbitClass> orbits;  // histogram by orbit size
  bool roots_pass = true;
  bool orbits_pass = true;
  bool verdict = false;
  friend bool operator==(const CSPReport&, const CSPReport&) = default;
};

CSPReport run_checks(const CSPInstance& inst, Checker which = Checker::both);

/// Two commuting generators of C x C' on the same index set. The
/// embeddings send the generators to omega^{q_embedding} and
/// omega'^{t_embedding} for fixed primitive roots omega, omega'.
struct BicyclicInstance {
  std::vector<std::string> labels;
  std::vector<Index> gen1;
  std::vector<Index> gen2;
  std::uint64_t order1 = 1;
  std::uint64_t order2 = 1;
  long q_embedding = 1;
  long t_embedding = 1;
  BivariatePolynomial polynomial;
};

struct BiCell {
  std::uint64_t j = 0;
  std::uint64_t k = 0;
  std::size_t fixed = 0;
  std::optional<Integer> eval;
  bool match = false;
};

struct BiCSPReport {
  std::vector<BiCell> cells;
  bool verdict = false;
};

/// Throws NonCommutingActions when gen1 and gen2 do not commute.
BiCSPReport verify_bicsp(const BicyclicInstance& inst);

/// Toy example on the cube roots of unity: X = {1, w, w^2}, (a, b) x = abx, with
/// f = 1 + qt + q^2t^2, under embeddings (1, t_embedding).
BicyclicInstance toy_bicyclic_instance(long t_embedding = 1);

/// Combinatorial proof check for generator^j: `stat` must have generating
/// function equal to the instance polynomial (else StatisticMismatch);
/// returns true iff the first #X^{g^j} blocks evaluate to 1 at
/// omega_{o(g^j)} and the remaining blocks to 0.
bool verify_block_partition(const CSPInstance& inst, const std::vector<unsigned>& stat,
                            const std::vector<std::vector<Index>>& blocks, std::uint64_t j);

}  // namespace csplab
