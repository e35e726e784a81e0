#pragma once

#include <vector>

#include "paw/ordinal.hpp"

namespace paw::testsupport {

// All notations of structural depth <= max_depth whose coefficients (the
// multiplier count+1 of each power) stay <= max_coeff; nf_only filters to
// normal forms.
inline std::vector<Ordinal> enumerate_notations(int max_depth, int max_coeff, bool nf_only) {
  std::vector<std::vector<Ordinal>> by_depth;
  by_depth.push_back({Ordinal::zero()});
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Ordinal> level = by_depth.back();
    const std::vector<Ordinal>& prev = by_depth.back();
    for (const Ordinal& e : prev) {
      for (int k = 1; k <= max_coeff; ++k) {
        for (const Ordinal& r : prev) {
          level.push_back(Ordinal::cons(e, k - 1, r));
        }
      }
    }
    // Dedupe: lower levels are re-generated.
    std::vector<Ordinal> unique;
    for (const Ordinal& o : level) {
      bool seen = false;
      for (const Ordinal& u : unique) {
        if (u == o) {
          seen = true;
          break;
        }
      }
      if (!seen) unique.push_back(o);
    }
    by_depth.push_back(std::move(unique));
  }
  std::vector<Ordinal> out;
  for (const Ordinal& o : by_depth.back()) {
    if (!nf_only || is_nf(o)) out.push_back(o);
  }
  return out;
}

}  // namespace paw::testsupport
