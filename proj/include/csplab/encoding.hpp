#pragma once

#include <string>
#include <vector>

namespace csplab {

/// Compact label for a sequence of small positive integers: bare digits
/// ("125") when `wide` is false, otherwise joined by `sep` ("1.12.5").
/// Callers pick `wide` per family so labels stay unambiguous.
inline std::string join_entries(const std::vector<int>& xs, bool wide, char sep = '.') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (wide && i > 0) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

/// Label used for an empty object (empty multiset, triangle's triangulation).
inline constexpr const char* kEmptyLabel = "{}";

}  // namespace csplab
