#pragma once

// Sums shared by the knapsack-covering conditions used across the rounding stages.

#include <vector>

#include "lotforge/interval.hpp"
#include "lotforge/rational.hpp"

namespace lotforge {

/// Σ_{s ∈ (a,b] \ excluded} min{C_s, cap} · y_s
Rational effective_cover(const Interval& iv, const std::vector<Rational>& y,
                         const PeriodSet& excluded, const std::vector<Rational>& C,
                         const Rational& cap);

/// Σ_{s ∈ (a,b] \ excluded : C_s >= threshold} y_s
Rational large_knapsack_mass(const Interval& iv, const std::vector<Rational>& y,
                             const PeriodSet& excluded, const std::vector<Rational>& C,
                             const Rational& threshold);

/// Either effective_cover(residual) >= cover_factor · residual, or
/// large_knapsack_mass(residual) >= mass_floor.
/// (2, 1) is the laminar hypothesis; (10, 6) the interval one.
bool covering_disjunction(const Interval& iv, const std::vector<Rational>& y,
                          const PeriodSet& excluded, const std::vector<Rational>& C,
                          const Rational& residual, const Rational& cover_factor,
                          const Rational& mass_floor);

}  // namespace lotforge
