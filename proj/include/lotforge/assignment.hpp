#pragma once

// Item-to-order assignment for a chosen order set: tail-truncated fractions x′
// and a fractional b-matching solved as a max flow.

#include <optional>

#include "lotforge/instance.hpp"
#include "lotforge/interval.hpp"

namespace lotforge {

/// x′_{s,i} = min{(5/2)·x_{s,i}, 1 − x′_{[s−1],i}}, so x′_{[t],i} = min{(5/2)·x_{[t],i}, 1}.
FractionTable build_xprime(const FractionTable& x, const CmilsInstance& inst);

/// Supply x′_{s,i}·d_i at each (s, i) may be served only by orders
/// s′ ∈ S* ∩ [s, r_i] within capacity. Returns x*_{s′,i} = flow / d_i, or
/// nullopt when supplies cannot all be routed.
std::optional<FractionTable> solve_assignment(const CmilsInstance& inst, const PeriodSet& Sstar,
                                              const FractionTable& xprime);

/// hcost(x*) <= (5/2)·hcost(x), exact.
bool hcost_bound_check(const CmilsInstance& inst, const FractionTable& x, const FractionTable& xstar);

/// x*_{[t],i} <= x′_{[t],i} for every (t, i).
bool prefix_dominated(const CmilsInstance& inst, const FractionTable& xstar, const FractionTable& xprime);

/// C(S* ∩ (a, b]) >= Σ_{i : r_i ∈ (a,b]} (1 − x′_{[a],i})·d_i for every interval.
bool interval_requirements_met(const CmilsInstance& inst, const PeriodSet& Sstar,
                               const FractionTable& xprime);

}  // namespace lotforge
