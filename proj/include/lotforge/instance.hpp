#pragma once

// Capacitated multi-item lot-sizing instances, schedules, costs and JSON I/O.
//
// Periods are 1-based (s ∈ [1, T]); items are 0-based in memory and 1-based in
// files. Per-item tables such as holding costs and fractional assignments are
// indexed [item][s - 1].

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "lotforge/interval.hpp"
#include "lotforge/rational.hpp"

namespace lotforge {

struct Item {
  Rational demand;               // d_i > 0
  int deadline = 0;              // r_i ∈ [1, T]
  std::vector<Rational> holding;  // holding[s-1] = h_i(s) for s ∈ [1, r_i]

  const Rational& h(int s) const { return holding.at(s - 1); }

  bool operator==(const Item&) const = default;
};

struct CmilsInstance {
  int T = 0;
  std::vector<Rational> K;  // ordering cost per period
  std::vector<Rational> C;  // capacity per period
  std::vector<Item> items;

  int N() const { return static_cast<int>(items.size()); }
  const Rational& order_cost(int s) const { return K.at(s - 1); }
  const Rational& capacity(int s) const { return C.at(s - 1); }
  Rational total_demand() const;

  bool operator==(const CmilsInstance&) const = default;
};

/// Per-item fractions over periods: table[i][s-1], s ∈ [1, r_i].
using FractionTable = std::vector<std::vector<Rational>>;

/// An (x, y) point of the master relaxation.
struct FractionalSolution {
  FractionTable x;
  std::vector<Rational> y;

  /// x_{s,i}, zero for s > r_i.
  Rational x_at(int i, int s) const;
  /// x_{[t],i} = Σ_{s ≤ t} x_{s,i}.
  Rational prefix(int i, int t) const;
};

struct CostBreakdown {
  Rational ordering;
  Rational holding;
  Rational total;
};

/// Integral order set plus fractional-unit assignment. quantity[i][s-1] is the
/// number of units of item i ordered at period s, for s ∈ [1, T].
struct OrderSchedule {
  PeriodSet orders;
  std::vector<std::vector<Rational>> quantity;
  CostBreakdown costs;
};

struct Violation {
  std::string rule;
  std::string where;
};

std::vector<Violation> validate(const CmilsInstance& inst);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
};

FeasibilityReport check_feasible(const CmilsInstance& inst, const OrderSchedule& sched);

/// Throws std::invalid_argument when the schedule is infeasible.
CostBreakdown cost(const CmilsInstance& inst, const OrderSchedule& sched);

/// Σ_i d_i Σ_{s ≤ r_i} x_{s,i} h_i(s)
Rational hcost(const CmilsInstance& inst, const FractionTable& x);

/// Builds a schedule from an order set and per-item fractions x*[i][s-1].
OrderSchedule make_schedule(const CmilsInstance& inst, const PeriodSet& orders,
                            const FractionTable& xstar);

/// Inverse of make_schedule: quantities divided by demand, truncated at r_i.
FractionTable fractions_of(const CmilsInstance& inst, const OrderSchedule& sched);

struct GeneratorParams {
  int T = 6;
  int N = 4;
  int capacity_lo = 4, capacity_hi = 30;
  int order_cost_lo = 5, order_cost_hi = 60;
  int demand_lo = 1, demand_hi = 20;
  int holding_rate_lo = 0, holding_rate_hi = 6;
  Rational slack_factor = 1;
};

/// Deterministic per seed. Holding tables are suffix sums of non-negative
/// per-period rates, and prefix capacities are topped up so that
/// C([1, t]) >= slack · Σ_{r_i <= t} d_i for every deadline t.
CmilsInstance gen_random(std::uint64_t seed, const GeneratorParams& params);

/// Two periods, one item: C = (R-1, R), K = (0, 1), d = R, r = 2, h ≡ 0.
CmilsInstance gen_kc_gap(const Rational& R);

nlohmann::json to_json(const CmilsInstance& inst);
CmilsInstance instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OrderSchedule& sched);
OrderSchedule schedule_from_json(const nlohmann::json& j, const CmilsInstance& inst);

CmilsInstance load_instance(const std::filesystem::path& path);
void save_instance(const CmilsInstance& inst, const std::filesystem::path& path);
OrderSchedule load_schedule(const std::filesystem::path& path, const CmilsInstance& inst);
void save_schedule(const OrderSchedule& sched, const std::filesystem::path& path);

}  // namespace lotforge
