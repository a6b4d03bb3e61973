#pragma once

// Iterative rounding for laminar knapsack covering.
//
// Given y ∈ [0,1]^T whose residual requirements satisfy, for each member with
// R̃ > 0, either Σ_{(a,b]∖S⁺} min{C_s, R̃} y_s >= 2R̃ or Σ_{(a,b]∖S⁺, C_s>=R̃} y_s >= 1,
// produces S* ⊇ S⁺ covering every member with K(S*) <= Σ y_s K_s.

#include <map>
#include <ostream>
#include <set>
#include <vector>

#include "lotforge/interval.hpp"
#include "lotforge/lp.hpp"
#include "lotforge/rational.hpp"

namespace lotforge {

struct LaminarKcInstance {
  int T = 0;
  std::vector<Rational> C;
  std::vector<Rational> K;
  std::vector<Interval> members;      // laminar, contains (0, T]
  std::vector<Rational> requirement;  // parallel to members
};

bool is_laminar(const std::vector<Interval>& members);

/// Throws std::invalid_argument on shape errors (non-laminar, (0,T] missing,
/// size mismatches, non-positive capacities).
void check_instance(const LaminarKcInstance& inst);

PeriodSet ones_of(const std::vector<Rational>& y);

/// max{R − C((a,b] ∩ S⁺), 0} per member.
std::vector<Rational> member_residuals(const LaminarKcInstance& inst, const PeriodSet& Splus);

/// The entry hypothesis for every member with positive residual.
bool laminar_hypothesis_holds(const LaminarKcInstance& inst, const std::vector<Rational>& y);

struct RoundingState {
  PeriodSet discarded;  // S°
  PeriodSet selected;   // S*
  std::map<Interval, Rational> residual;  // R̂ per member
  std::set<Interval> fam1;  // rows of the 2R̂ covering type
  std::set<Interval> fam2;  // rows of the large-knapsack type
  std::vector<Rational> y;

  bool active(const Interval& iv) const { return fam1.count(iv) || fam2.count(iv); }
};

/// S° = ∅, S* = S⁺, R̂ = R̃; members with R̂ > 0 split by whether the
/// large-knapsack row already holds. Throws InvariantError if y violates the
/// entry hypothesis.
RoundingState init_state(const LaminarKcInstance& inst, const std::vector<Rational>& y);

/// Drops members implied by another active member with the same free support
/// and at least as large a residual. Equal residuals: the lexicographically
/// larger interval goes. Returns the removed members in removal order.
std::vector<Interval> dedup(RoundingState& state);

/// The per-iteration LP over y ∈ [0,1]^T with S° fixed at 0 and S* at 1.
LinearProgram build_iter_lp(const RoundingState& state, const LaminarKcInstance& inst);

struct LaminarKcOptions {
  std::ostream* trace = nullptr;
  SimplexOptions simplex;
};

struct LaminarKcResult {
  PeriodSet selected;
  int outer_iterations = 0;
  std::vector<Rational> objective_history;  // Σ y_s K_s: input, then after each LP
};

LaminarKcResult solve_laminar_kc(const LaminarKcInstance& inst, const std::vector<Rational>& y,
                                 const LaminarKcOptions& options = {});

}  // namespace lotforge
