#pragma once

// Interval knapsack covering by reduction to a laminar family.

#include <array>
#include <ostream>
#include <vector>

#include "lotforge/interval.hpp"
#include "lotforge/laminar_kc.hpp"
#include "lotforge/rational.hpp"

namespace lotforge {

struct IntervalKcInstance {
  int T = 0;
  std::vector<Rational> C;
  std::vector<Rational> K;
  IntervalTable<Rational> R;
};

/// Full binary laminar tree over [T], stored in preorder (root (0,T] first).
struct LaminarFamily {
  std::vector<Interval> members;
  std::vector<int> parent;                  // -1 for the root
  std::vector<std::array<int, 2>> children;  // {-1, -1} for leaves
  std::vector<Rational> rprime;             // R̃′ per member

  int find(const Interval& iv) const;  // -1 when absent
  int size() const { return static_cast<int>(members.size()); }
};

/// R̃′_{a,b} = sup{W >= 0 : Σ_{(a,b]∖S⁺} min{C_s, W} y_s >= 2W  or  Σ_{(a,b]∖S⁺, C_s >= W} y_s >= 1}.
/// The supremum is attained; returned exactly.
Rational compute_rprime(const Interval& iv, const std::vector<Rational>& y, const PeriodSet& Splus,
                        const std::vector<Rational>& C);

/// Recursive split from (0, T]: each non-unit (a, b] splits at the c ∈ (a, b)
/// maximizing min{R̃′_{a,c}, R̃′_{c,b}}, smallest c on ties.
LaminarFamily construct_laminar_family(const std::vector<Rational>& y, const PeriodSet& Splus,
                                       const std::vector<Rational>& C, int T);

/// Laminar, rooted at (0, T], unit leaves, two children per inner node, 2T − 1 members.
bool has_full_binary_shape(const LaminarFamily& family, int T);

/// Every interval with R̃ > 0 contains a member whose R̃′ is at least R̃.
bool check_family_bounds(const LaminarFamily& family, const IntervalTable<Rational>& Rtilde);

/// C(S ∩ (a, b]) >= R_{a,b} for all intervals.
bool covers_all(const IntervalKcInstance& inst, const PeriodSet& S);

struct IntervalKcSolution {
  PeriodSet selected;
  LaminarFamily family;
  LaminarKcInstance laminar;
  LaminarKcResult rounding;
};

/// Asserts the ×10 / ≥6 hypothesis on every interval with R̃ > 0, builds the
/// laminar instance with R′ = R̃′ + C((a,b] ∩ S⁺), rounds it, then checks every
/// interval requirement and K(S*) <= Σ ŷ_s K_s.
IntervalKcSolution solve_interval_kc(const IntervalKcInstance& inst, const std::vector<Rational>& yhat,
                                     const PeriodSet& Splus, const IntervalTable<Rational>& Rtilde,
                                     const LaminarKcOptions& options = {});

/// Indented tree, one member per line with its R̃′.
void write_laminar_tree(std::ostream& out, const LaminarFamily& family);

}  // namespace lotforge
