#include "lotforge/oracles.hpp"

#include <stdexcept>
#include <string>

#include "lotforge/errors.hpp"
#include "lotforge/flow.hpp"
#include "lotforge/separation.hpp"

namespace lotforge {

namespace {

PeriodSet subset_of(std::uint64_t mask, int T) {
  PeriodSet out;
  for (int s = 1; s <= T; ++s) {
    if (mask >> (s - 1) & 1) out.insert(s);
  }
  return out;
}

void require_horizon(int T, int cap) {
  if (T > cap) {
    throw SizeLimitError("exhaustive search refused: T=" + std::to_string(T) + " exceeds " +
                         std::to_string(cap));
  }
}

template <typename Covers>
OracleResult enumerate_cover(int T, const std::vector<Rational>& K, Covers covers) {
  OracleResult out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T); ++mask) {
    ++out.explored;
    const PeriodSet S = subset_of(mask, T);
    Rational c = cost_of(K, S);
    if (out.optimum_cost && c >= *out.optimum_cost) continue;
    if (!covers(S)) continue;
    out.optimum_cost = std::move(c);
    out.orders = S;
  }
  return out;
}

}  // namespace

std::optional<Rational> min_holding_cost(const CmilsInstance& inst, const PeriodSet& orders,
                                         FractionTable* assignment) {
  FlowGraph g(2);
  const int source = 0, sink = 1;
  std::vector<int> item_node(inst.N());
  std::vector<int> period_node(inst.T + 1, -1);
  for (int s : orders) {
    period_node[s] = g.add_node();
    g.add_edge(period_node[s], sink, inst.capacity(s));
  }
  std::vector<std::vector<int>> edge(inst.N());
  for (int i = 0; i < inst.N(); ++i) {
    const Item& item = inst.items[i];
    item_node[i] = g.add_node();
    g.add_edge(source, item_node[i], item.demand);
    edge[i].assign(item.deadline, -1);
    for (int s = 1; s <= item.deadline; ++s) {
      if (period_node[s] < 0) continue;
      edge[i][s - 1] = g.add_edge(item_node[i], period_node[s], item.demand, item.h(s));
    }
  }
  auto best = g.min_cost_flow(source, sink, inst.total_demand());
  if (best && assignment) {
    assignment->assign(inst.N(), {});
    for (int i = 0; i < inst.N(); ++i) {
      (*assignment)[i].assign(inst.items[i].deadline, Rational(0));
      for (int s = 1; s <= inst.items[i].deadline; ++s) {
        if (edge[i][s - 1] >= 0) (*assignment)[i][s - 1] = g.flow(edge[i][s - 1]) / inst.items[i].demand;
      }
    }
  }
  return best;
}

OracleResult brute_force_cmils(const CmilsInstance& inst) {
  require_horizon(inst.T, kCmilsOracleMaxT);
  // Deadline prefix demand: the orders in [1, t] must cover every item due by t.
  std::vector<Rational> due(inst.T + 1, Rational(0));
  for (const Item& item : inst.items) due[item.deadline] += item.demand;
  for (int t = 1; t <= inst.T; ++t) due[t] += due[t - 1];

  OracleResult out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.T); ++mask) {
    ++out.explored;
    const PeriodSet S = subset_of(mask, inst.T);
    const Rational ordering = cost_of(inst.K, S);
    if (out.optimum_cost && ordering > *out.optimum_cost) continue;
    bool enough = true;
    Rational cap = 0;
    for (int t = 1; t <= inst.T && enough; ++t) {
      if (S.count(t)) cap += inst.capacity(t);
      enough = cap >= due[t];
    }
    if (!enough) continue;
    FractionTable x;
    auto holding = min_holding_cost(inst, S, &x);
    if (!holding) continue;
    Rational total = ordering + *holding;
    if (out.optimum_cost && total > *out.optimum_cost) continue;
    out.optimum_cost = std::move(total);
    out.orders = S;
    out.schedule = make_schedule(inst, S, x);
  }
  return out;
}

OracleResult brute_force_laminar_kc(const LaminarKcInstance& inst) {
  require_horizon(inst.T, kKcOracleMaxT);
  return enumerate_cover(inst.T, inst.K, [&](const PeriodSet& S) {
    for (std::size_t m = 0; m < inst.members.size(); ++m) {
      if (capacity_in(inst.C, S, inst.members[m]) < inst.requirement[m]) return false;
    }
    return true;
  });
}

OracleResult brute_force_interval_kc(const IntervalKcInstance& inst) {
  require_horizon(inst.T, kKcOracleMaxT);
  return enumerate_cover(inst.T, inst.K, [&](const PeriodSet& S) { return covers_all(inst, S); });
}

WrapperResult solve_interval_kc_standalone(const IntervalKcInstance& inst, const WrapperOptions& options) {
  const std::vector<Interval> intervals = all_intervals(inst.T);
  LinearProgram lp;
  for (int s = 1; s <= inst.T; ++s) lp.add_var(inst.K[s - 1], 0, Rational(1), "y" + std::to_string(s));
  for (const Interval& iv : intervals) {
    if (inst.R[iv] == 0) continue;
    Rational room = 0;
    for (int s = iv.a + 1; s <= iv.b; ++s) room += inst.C[s - 1];
    if (room < inst.R[iv]) {
      throw std::invalid_argument("requirement of " + to_string(iv) + " exceeds its capacity");
    }
    LpRow row{{}, Relation::GreaterEq, inst.R[iv], "req" + to_string(iv)};
    for (int s = iv.a + 1; s <= iv.b; ++s) row.coeffs.emplace_back(s - 1, inst.C[s - 1]);
    lp.add_row(std::move(row));
  }

  WrapperResult out;
  for (;;) {
    const LpSolution sol = solve_to_vertex(lp, options.simplex);
    LOTFORGE_ENSURE(sol.status == LpStatus::Optimal, "covering LP not optimal");
    ++out.rounds;
    out.lp_value = sol.objective_value;
    if (options.trace) *options.trace << "round " << out.rounds << " lp_value " << to_string(sol.objective_value) << "\n";

    ScaledY scaled = scale_y(sol.values);
    IntervalTable<Rational> Rtilde = residual_requirements(inst.R, inst.C, scaled.Splus);
    std::optional<LpRow> cut;
    for (const Interval& iv : intervals) {
      const Rational& residual = Rtilde[iv];
      if (residual == 0) continue;
      Rational lhs = 0;
      LpRow row{{}, Relation::GreaterEq, residual, "kc" + to_string(iv)};
      for (int s = iv.a + 1; s <= iv.b; ++s) {
        if (scaled.Splus.count(s)) continue;
        Rational coeff = rmin(inst.C[s - 1], residual);
        lhs += coeff * sol.values[s - 1];
        row.coeffs.emplace_back(s - 1, std::move(coeff));
      }
      if (lhs < residual) {
        cut = std::move(row);
        break;
      }
    }
    if (!cut) {
      out.yhat = std::move(scaled.yhat);
      out.Splus = std::move(scaled.Splus);
      out.Rtilde = std::move(Rtilde);
      break;
    }
    if (out.rounds >= options.max_rounds) throw RoundLimitError(out.rounds);
    if (options.trace) *options.trace << "round " << out.rounds << " cut " << cut->name << "\n";
    lp.add_row(std::move(*cut));
    ++out.num_cuts;
  }

  IntervalKcSolution solved =
      solve_interval_kc(inst, out.yhat, out.Splus, out.Rtilde, LaminarKcOptions{options.trace, options.simplex});
  out.selected = solved.selected;
  out.cost = cost_of(inst.K, out.selected);
  out.family = std::move(solved.family);
  return out;
}

}  // namespace lotforge
