#pragma once

// Named families of (X, C, f) triples, materialized on demand.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csplab/perms.hpp"
#include "csplab/sieve.hpp"

namespace csplab {

struct Caps {
  std::size_t max_size = 200000;
  std::uint64_t max_order = 10000;

  /// Defaults, with max_size taken from CSP_LAB_CAP when it is set.
  static Caps from_environment();
};

struct FamilyInfo {
  std::string id;
  std::string parameters;
  std::string description;
};

const std::vector<FamilyInfo>& family_catalogue();

/// Builds the instance for `family` from string parameters. Throws
/// UnknownFamily, CapExceeded, NotNearlyFree or PreconditionViolation.
CSPInstance registry_instantiate(const std::string& family, const Params& params, const Caps& caps = {});

// Direct builders. These skip the nearly-free check so tests can exercise
// the checkers on actions the theorems do not cover.

/// [n] under i -> i+1 with f = [n]_q.
CSPInstance cycle_instance(unsigned n);
/// k-multisets of [N] under g (default (1,...,N)); f = [N+k-1 choose k]_q.
CSPInstance multiset_instance(unsigned N, unsigned k, const std::optional<Permutation>& g = std::nullopt);
/// k-subsets of [N] under g (default (1,...,N)); f = [N choose k]_q.
CSPInstance subset_instance(unsigned N, unsigned k, const std::optional<Permutation>& g = std::nullopt);
/// SYT of the m x n rectangle (m rows) under promotion.
CSPInstance syt_rect_instance(unsigned m, unsigned n);
CSPInstance ncm_instance(unsigned n);
CSPInstance ncp_instance(unsigned n);
/// Triangulations of the (n+2)-gon under rotation.
CSPInstance triangulation_instance(unsigned n);
CSPInstance conj_class_instance(const std::vector<int>& lambda);
/// Proper triangulations of the (2n+2)-gon under rotation.
CSPInstance proper_triangulation_instance(unsigned n);
/// k-multisets (kind 'h') or k-subsets (kind 'e') of the base set, with
/// f = h_k[f_base] or e_k[f_base].
CSPInstance plethysm_instance(const CSPInstance& base, unsigned k, char kind, std::size_t max_size = 200000);

}  // namespace csplab
