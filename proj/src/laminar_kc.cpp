#include "lotforge/laminar_kc.hpp"

#include <stdexcept>

#include "lotforge/covering.hpp"
#include "lotforge/errors.hpp"

namespace lotforge {

bool is_laminar(const std::vector<Interval>& members) {
  for (std::size_t p = 0; p < members.size(); ++p) {
    for (std::size_t q = p + 1; q < members.size(); ++q) {
      const Interval& u = members[p];
      const Interval& v = members[q];
      if (!(u.disjoint(v) || u.contains(v) || v.contains(u))) return false;
    }
  }
  return true;
}

void check_instance(const LaminarKcInstance& inst) {
  const auto T = static_cast<std::size_t>(inst.T);
  if (inst.T < 1) throw std::invalid_argument("T must be positive");
  if (inst.C.size() != T || inst.K.size() != T) throw std::invalid_argument("C and K need T entries");
  if (inst.requirement.size() != inst.members.size()) {
    throw std::invalid_argument("one requirement per member expected");
  }
  for (std::size_t s = 0; s < T; ++s) {
    if (inst.C[s] <= 0) throw std::invalid_argument("capacities must be positive");
    if (inst.K[s] < 0) throw std::invalid_argument("costs must be non-negative");
  }
  std::set<Interval> seen;
  for (std::size_t m = 0; m < inst.members.size(); ++m) {
    const Interval& iv = inst.members[m];
    if (iv.a < 0 || iv.a >= iv.b || iv.b > inst.T) {
      throw std::invalid_argument("member " + to_string(iv) + " outside horizon");
    }
    if (!seen.insert(iv).second) throw std::invalid_argument("member " + to_string(iv) + " repeated");
    if (inst.requirement[m] < 0) throw std::invalid_argument("requirements must be non-negative");
  }
  if (!seen.count(Interval{0, inst.T})) throw std::invalid_argument("family must contain (0,T]");
  if (!is_laminar(inst.members)) throw std::invalid_argument("family is not laminar");
}

PeriodSet ones_of(const std::vector<Rational>& y) {
  PeriodSet out;
  for (std::size_t s = 0; s < y.size(); ++s) {
    if (y[s] == 1) out.insert(static_cast<int>(s) + 1);
  }
  return out;
}

std::vector<Rational> member_residuals(const LaminarKcInstance& inst, const PeriodSet& Splus) {
  std::vector<Rational> out;
  out.reserve(inst.members.size());
  for (std::size_t m = 0; m < inst.members.size(); ++m) {
    out.push_back(rmax(inst.requirement[m] - capacity_in(inst.C, Splus, inst.members[m]), Rational(0)));
  }
  return out;
}

bool laminar_hypothesis_holds(const LaminarKcInstance& inst, const std::vector<Rational>& y) {
  const PeriodSet Splus = ones_of(y);
  const std::vector<Rational> residual = member_residuals(inst, Splus);
  for (std::size_t m = 0; m < inst.members.size(); ++m) {
    if (residual[m] == 0) continue;
    if (!covering_disjunction(inst.members[m], y, Splus, inst.C, residual[m], 2, 1)) return false;
  }
  return true;
}

RoundingState init_state(const LaminarKcInstance& inst, const std::vector<Rational>& y) {
  check_instance(inst);
  if (y.size() != static_cast<std::size_t>(inst.T)) throw std::invalid_argument("y needs T entries");
  for (const auto& v : y) {
    if (v < 0 || v > 1) throw std::invalid_argument("y must lie in [0,1]");
  }
  LOTFORGE_ENSURE(laminar_hypothesis_holds(inst, y), "laminar covering hypothesis fails for the input y");

  RoundingState state;
  state.y = y;
  state.selected = ones_of(y);
  const std::vector<Rational> residual = member_residuals(inst, state.selected);
  for (std::size_t m = 0; m < inst.members.size(); ++m) {
    const Interval& iv = inst.members[m];
    state.residual[iv] = residual[m];
    if (residual[m] == 0) continue;
    if (large_knapsack_mass(iv, y, state.selected, inst.C, residual[m]) >= 1) {
      state.fam2.insert(iv);
    } else {
      state.fam1.insert(iv);
    }
  }
  return state;
}

namespace {

PeriodSet free_support(const Interval& iv, const RoundingState& state) {
  PeriodSet out;
  for (int s = iv.a + 1; s <= iv.b; ++s) {
    if (!state.discarded.count(s) && !state.selected.count(s)) out.insert(s);
  }
  return out;
}

std::vector<Interval> active_members(const RoundingState& state) {
  std::set<Interval> all(state.fam1);
  all.insert(state.fam2.begin(), state.fam2.end());
  return {all.begin(), all.end()};
}

void deactivate(RoundingState& state, const Interval& iv) {
  state.fam1.erase(iv);
  state.fam2.erase(iv);
}

}  // namespace

std::vector<Interval> dedup(RoundingState& state) {
  std::vector<Interval> removed;
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Interval> active = active_members(state);
    for (std::size_t p = 0; p < active.size() && !changed; ++p) {
      const PeriodSet support = free_support(active[p], state);
      for (std::size_t q = 0; q < active.size(); ++q) {
        if (p == q) continue;
        const Rational& rp = state.residual.at(active[p]);
        const Rational& rq = state.residual.at(active[q]);
        if (rq < rp || free_support(active[q], state) != support) continue;
        // active[q] dominates active[p]; on a tie only the larger key goes.
        if (rq == rp && active[p] < active[q]) continue;
        deactivate(state, active[p]);
        removed.push_back(active[p]);
        changed = true;
        break;
      }
    }
  }
  return removed;
}

LinearProgram build_iter_lp(const RoundingState& state, const LaminarKcInstance& inst) {
  LinearProgram lp;
  for (int s = 1; s <= inst.T; ++s) {
    Rational lo = 0;
    Rational hi = 1;
    if (state.discarded.count(s)) hi = 0;
    if (state.selected.count(s)) lo = 1;
    lp.add_var(inst.K[s - 1], lo, hi, "y" + std::to_string(s));
  }
  auto free_in = [&](const Interval& iv) {
    std::vector<int> out;
    for (int s = iv.a + 1; s <= iv.b; ++s) {
      if (!state.selected.count(s) && !state.discarded.count(s)) out.push_back(s);
    }
    return out;
  };
  for (const Interval& iv : state.fam1) {
    const Rational& R = state.residual.at(iv);
    LpRow row{{}, Relation::GreaterEq, 2 * R, "cover" + to_string(iv)};
    for (int s : free_in(iv)) row.coeffs.emplace_back(s - 1, rmin(inst.C[s - 1], R));
    lp.add_row(std::move(row));
  }
  for (const Interval& iv : state.fam2) {
    const Rational& R = state.residual.at(iv);
    LpRow row{{}, Relation::GreaterEq, 1, "large" + to_string(iv)};
    for (int s : free_in(iv)) {
      if (inst.C[s - 1] >= R) row.coeffs.emplace_back(s - 1, 1);
    }
    lp.add_row(std::move(row));
  }
  return lp;
}

LaminarKcResult solve_laminar_kc(const LaminarKcInstance& inst, const std::vector<Rational>& y,
                                 const LaminarKcOptions& options) {
  auto trace = [&](int iter, int stmt, const std::string& what) {
    if (options.trace) *options.trace << "iter " << iter << " stmt " << stmt << " " << what << "\n";
  };
  auto weighted = [&](const std::vector<Rational>& v) {
    Rational total = 0;
    for (int s = 0; s < inst.T; ++s) total += v[s] * inst.K[s];
    return total;
  };

  RoundingState state = init_state(inst, y);
  const PeriodSet Splus = state.selected;
  LaminarKcResult result;
  result.objective_history.push_back(weighted(y));
  trace(0, 3, "S*=" + to_string(state.selected) + " |S1|=" + std::to_string(state.fam1.size()) +
                  " |S2|=" + std::to_string(state.fam2.size()));

  while (!state.fam1.empty() || !state.fam2.empty()) {
    ++result.outer_iterations;
    const int iter = result.outer_iterations;
    LOTFORGE_ENSURE(iter <= inst.T, "iterative rounding exceeded T outer iterations");
    {
      LinearProgram head = build_iter_lp(state, inst);
      std::string why;
      LOTFORGE_ENSURE(is_feasible(head, state.y, &why), "current y infeasible at iteration head: " + why);
    }

    for (const Interval& iv : dedup(state)) trace(iter, 6, "drop " + to_string(iv));

    const LinearProgram lp = build_iter_lp(state, inst);
    const LpSolution sol = solve_to_vertex(lp, options.simplex);
    LOTFORGE_ENSURE(sol.status == LpStatus::Optimal, "rounding LP not optimal");
    LOTFORGE_ENSURE(verify_vertex(lp, sol), "rounding LP returned a non-vertex");
    LOTFORGE_ENSURE(sol.objective_value <= result.objective_history.back(), "rounding objective increased");
    state.y = sol.values;
    result.objective_history.push_back(sol.objective_value);
    trace(iter, 7, "objective " + to_string(sol.objective_value));

    const std::size_t fixed_before = state.discarded.size() + state.selected.size();
    for (int s = 1; s <= inst.T; ++s) {
      if (state.y[s - 1] == 0 && !state.discarded.count(s) && !state.selected.count(s)) {
        state.discarded.insert(s);
        trace(iter, 8, "discard " + std::to_string(s));
      }
    }

    for (;;) {
      int pick = 0;
      for (int s = 1; s <= inst.T && pick == 0; ++s) {
        if (state.y[s - 1] == 1 && !state.selected.count(s)) pick = s;
      }
      if (pick == 0) break;
      state.selected.insert(pick);
      trace(iter, 10, "select " + std::to_string(pick));

      for (const Interval& iv : active_members(state)) {
        if (!iv.contains(pick)) continue;
        Rational& R = state.residual.at(iv);
        R -= inst.C[pick - 1];
        if (R <= 0) {
          deactivate(state, iv);
          trace(iter, 13, "satisfied " + to_string(iv));
        } else if (state.fam1.count(iv) &&
                   large_knapsack_mass(iv, state.y, state.selected, inst.C, R) >= 1) {
          state.fam1.erase(iv);
          state.fam2.insert(iv);
          trace(iter, 14, "migrate " + to_string(iv));
        }
      }
      for (const Interval& iv : state.fam1) {
        const Rational& R = state.residual.at(iv);
        LOTFORGE_ENSURE(effective_cover(iv, state.y, state.selected, inst.C, R) >= 2 * R,
                        "covering row of " + to_string(iv) + " broken by a selection");
      }
    }
    LOTFORGE_ENSURE(state.discarded.size() + state.selected.size() > fixed_before,
                    "vertex fixed no new coordinate");
  }

  for (int s : Splus) LOTFORGE_ENSURE(state.selected.count(s), "selection dropped a period of S+");
  for (std::size_t m = 0; m < inst.members.size(); ++m) {
    LOTFORGE_ENSURE(capacity_in(inst.C, state.selected, inst.members[m]) >= inst.requirement[m],
                    "member " + to_string(inst.members[m]) + " left uncovered");
  }
  LOTFORGE_ENSURE(cost_of(inst.K, state.selected) <= result.objective_history.front(),
                  "selection costs more than the input y");
  result.selected = state.selected;
  return result;
}

}  // namespace lotforge
