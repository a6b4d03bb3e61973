#pragma once

// Exhaustive reference solvers for desk-scale verification.

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "lotforge/instance.hpp"
#include "lotforge/interval_kc.hpp"
#include "lotforge/laminar_kc.hpp"
#include "lotforge/lp.hpp"

namespace lotforge {

inline constexpr int kCmilsOracleMaxT = 14;
inline constexpr int kKcOracleMaxT = 16;

struct OracleResult {
  std::optional<Rational> optimum_cost;  // nullopt when nothing is feasible
  PeriodSet orders;
  std::optional<OrderSchedule> schedule;  // lot-sizing oracle only
  std::uint64_t explored = 0;
};

/// Cheapest holding cost for a fixed order set, or nullopt when the set
/// cannot carry every demand by its deadline.
std::optional<Rational> min_holding_cost(const CmilsInstance& inst, const PeriodSet& orders,
                                         FractionTable* assignment = nullptr);

/// Minimum over all order sets; ties keep the later set in subset order.
/// Throws SizeLimitError past kCmilsOracleMaxT.
OracleResult brute_force_cmils(const CmilsInstance& inst);

/// Throw SizeLimitError past kKcOracleMaxT. Ties keep the earlier set.
OracleResult brute_force_laminar_kc(const LaminarKcInstance& inst);
OracleResult brute_force_interval_kc(const IntervalKcInstance& inst);

struct WrapperOptions {
  int max_rounds = 200;
  std::ostream* trace = nullptr;
  SimplexOptions simplex;
};

struct WrapperResult {
  PeriodSet selected;
  Rational cost;
  Rational lp_value;  // final LP value with all cuts
  int rounds = 0;
  int num_cuts = 0;
  std::vector<Rational> yhat;
  PeriodSet Splus;
  IntervalTable<Rational> Rtilde;
  LaminarFamily family;
};

/// Cutting planes over min Σ K_s y_s s.t. Σ_{(a,b]} C_s y_s >= R_{a,b}, with the
/// knapsack-cover row for S = S⁺ ∩ (a,b] checked per interval, then the
/// interval covering reduction on ŷ. Throws std::invalid_argument when some
/// interval cannot be covered at all and RoundLimitError past max_rounds.
WrapperResult solve_interval_kc_standalone(const IntervalKcInstance& inst, const WrapperOptions& options = {});

}  // namespace lotforge
