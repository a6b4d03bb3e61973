#pragma once

// Rounding-or-separation for a master LP point: interval requirements from x,
// ×10 scaling of y, and one designated covering check per interval.

#include <optional>
#include <ostream>
#include <vector>

#include "lotforge/covering_cut.hpp"
#include "lotforge/instance.hpp"
#include "lotforge/interval.hpp"

namespace lotforge {

/// R_{a,b} = Σ_{i : r_i ∈ (a,b]} max{1 − (5/2)·x_{[a],i}, 0} · d_i for every interval.
IntervalTable<Rational> compute_requirements(const FractionTable& x, const CmilsInstance& inst);

struct ScaledY {
  std::vector<Rational> yhat;  // min{10 y_s, 1}
  PeriodSet Splus;             // {s : y_s >= 1/10}
};

ScaledY scale_y(const std::vector<Rational>& y);

/// R̃_{a,b} = max{R_{a,b} − C((a,b] ∩ S⁺), 0}
IntervalTable<Rational> residual_requirements(const IntervalTable<Rational>& R,
                                              const std::vector<Rational>& C,
                                              const PeriodSet& Splus);

/// Input handed to the interval covering stage when no cut is found.
struct RoundingPayload {
  std::vector<Rational> yhat;
  PeriodSet Splus;
  IntervalTable<Rational> R;
  IntervalTable<Rational> Rtilde;
};

/// The checked inequality for (a, b]: S1 = (a,b] ∩ S⁺, S2 = (a,b] \ S⁺,
/// I = {i : r_i ∈ (a,b], x_{[a],i} < 2/5}.
CoveringCut designated_cut(const Interval& iv, const FractionalSolution& sol,
                           const CmilsInstance& inst, const PeriodSet& Splus);

struct SeparationOptions {
  bool all_violated = false;  // collect every violated designated cut
};

struct SeparationResult {
  std::vector<CoveringCut> cuts;          // non-empty iff a violation was found
  std::optional<RoundingPayload> ready;   // set iff cuts is empty
  int checks = 0;                         // covering inequalities evaluated
};

/// Scans intervals with R̃ > 0 in (a, b) order. Returns the first violated
/// designated cut, or, if none, a payload satisfying the interval-stage
/// hypothesis (asserted, together with the ×1 transfer bound per interval).
SeparationResult try_round(const FractionalSolution& sol, const CmilsInstance& inst,
                           const SeparationOptions& options = {});

/// CSV with header a,b,R,Rtilde; rationals as p/q.
void write_requirements_csv(std::ostream& out, const IntervalTable<Rational>& R,
                            const IntervalTable<Rational>& Rtilde);

}  // namespace lotforge
