#pragma once

// One inequality of the strengthened covering family over (S1, S2, I):
//
//   C(S1) + Σ_{s∈S2} min{C_s, d(I) − C(S1)} y_s + Σ_{i∈I} d_i x_{[T]∖(S1∪S2), i}  >=  d(I)
//
// valid for every integral schedule whenever S1 ∩ S2 = ∅ and C(S1) < d(I).

#include <set>
#include <string>

#include "lotforge/instance.hpp"
#include "lotforge/interval.hpp"

namespace lotforge {

struct CoveringCut {
  PeriodSet S1;
  PeriodSet S2;
  std::set<int> items;  // 0-based item indices

  /// Canonical encoding used for duplicate detection.
  std::string key() const;

  bool operator==(const CoveringCut&) const = default;
};

/// d(I)
Rational cut_demand(const CoveringCut& cut, const CmilsInstance& inst);

/// Throws std::invalid_argument unless S1 ∩ S2 = ∅, C(S1) < d(I) and every
/// index is in range.
void check_cut(const CoveringCut& cut, const CmilsInstance& inst);

/// Left side of the inequality at (x, y). The cut is violated iff the value
/// is strictly below cut_demand().
Rational cut_lhs(const CoveringCut& cut, const FractionalSolution& sol, const CmilsInstance& inst);

std::string to_string(const CoveringCut& cut);

}  // namespace lotforge
