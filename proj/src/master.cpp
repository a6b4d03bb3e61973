#include "lotforge/master.hpp"

#include <algorithm>
#include <stdexcept>

#include "lotforge/assignment.hpp"

namespace lotforge {

MasterLp build_base_lp(const CmilsInstance& inst) {
  MasterLp out;
  LinearProgram& lp = out.lp;
  MasterLayout& layout = out.layout;
  const int N = inst.N();

  layout.x_var.resize(N);
  for (int i = 0; i < N; ++i) {
    const Item& item = inst.items[i];
    for (int s = 1; s <= item.deadline; ++s) {
      layout.x_var[i].push_back(lp.add_var(item.demand * item.h(s), 0, Rational(1),
                                           "x" + std::to_string(s) + "_" + std::to_string(i + 1)));
    }
  }
  for (int s = 1; s <= inst.T; ++s) {
    layout.y_var.push_back(lp.add_var(inst.order_cost(s), 0, Rational(1), "y" + std::to_string(s)));
  }

  for (int i = 0; i < N; ++i) {
    LpRow row{{}, Relation::Equal, 1, "cover_" + std::to_string(i + 1)};
    for (int v : layout.x_var[i]) row.coeffs.emplace_back(v, 1);
    lp.add_row(std::move(row));
  }
  for (int i = 0; i < N; ++i) {
    const Item& item = inst.items[i];
    for (int s = 1; s <= item.deadline; ++s) {
      LpRow row{{}, Relation::GreaterEq, 0, "cap_" + std::to_string(s) + "_" + std::to_string(i + 1)};
      row.coeffs.emplace_back(layout.y_var[s - 1], rmin(inst.capacity(s), item.demand));
      row.coeffs.emplace_back(layout.x_var[i][s - 1], -item.demand);
      lp.add_row(std::move(row));
    }
  }
  const Rational total = inst.total_demand();
  for (int s = 1; s <= inst.T; ++s) {
    LpRow row{{}, Relation::GreaterEq, 0, "cap_" + std::to_string(s)};
    row.coeffs.emplace_back(layout.y_var[s - 1], rmin(inst.capacity(s), total));
    for (int i = 0; i < N; ++i) {
      if (s <= inst.items[i].deadline) row.coeffs.emplace_back(layout.x_var[i][s - 1], -inst.items[i].demand);
    }
    if (row.coeffs.size() > 1) lp.add_row(std::move(row));
  }
  return out;
}

LpRow cut_row(const CoveringCut& cut, const CmilsInstance& inst, const MasterLayout& layout) {
  check_cut(cut, inst);
  const Rational residual = cut_demand(cut, inst) - capacity_of(inst.C, cut.S1);
  LpRow row{{}, Relation::GreaterEq, residual, "kc" + cut.key()};
  for (int s : cut.S2) row.coeffs.emplace_back(layout.y_var[s - 1], rmin(inst.capacity(s), residual));
  for (int i : cut.items) {
    const Item& item = inst.items[i];
    for (int s = 1; s <= item.deadline; ++s) {
      if (cut.S1.count(s) || cut.S2.count(s)) continue;
      row.coeffs.emplace_back(layout.x_var[i][s - 1], item.demand);
    }
  }
  return row;
}

FractionalSolution extract_solution(const LpSolution& sol, const MasterLayout& layout) {
  FractionalSolution out;
  out.x.resize(layout.x_var.size());
  for (std::size_t i = 0; i < layout.x_var.size(); ++i) {
    for (int v : layout.x_var[i]) out.x[i].push_back(sol.values.at(v));
  }
  for (int v : layout.y_var) out.y.push_back(sol.values.at(v));
  return out;
}

MasterState::MasterState(const CmilsInstance& inst, SimplexOptions simplex)
    : inst_(inst), simplex_(simplex), master_(build_base_lp(inst)) {}

const FractionalSolution& MasterState::solve_master() {
  LpSolution sol = solve_to_vertex(master_.lp, simplex_);
  if (sol.status != LpStatus::Optimal) {
    throw std::invalid_argument(std::string("master relaxation is ") + to_string(sol.status));
  }
  current_ = extract_solution(sol, master_.layout);
  last_ = std::move(sol);
  ++round_;
  return current_;
}

void MasterState::add_cut(const CoveringCut& cut) {
  check_cut(cut, inst_);
  const std::string key = cut.key();
  if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) {
    throw std::invalid_argument("duplicate cut " + to_string(cut));
  }
  if (round_ == 0 || cut_lhs(cut, current_, inst_) >= cut_demand(cut, inst_)) {
    throw std::invalid_argument("cut " + to_string(cut) + " is not violated by the current solution");
  }
  master_.lp.add_row(cut_row(cut, inst_, master_.layout));
  pool_.push_back(cut);
  keys_.push_back(key);
}

nlohmann::json to_json(const Certificate& cert) {
  return {{"lp_value", to_string(cert.lp_value)},
          {"rounds", cert.rounds},
          {"num_cuts", cert.num_cuts},
          {"ordering_bound_ok", cert.ordering_bound_ok},
          {"holding_bound_ok", cert.holding_bound_ok}};
}

PipelineResult run_pipeline(const CmilsInstance& inst, const PipelineConfig& config) {
  if (auto bad = validate(inst); !bad.empty()) {
    throw std::invalid_argument("invalid instance: " + bad.front().rule + " at " + bad.front().where);
  }
  auto trace = [&](const std::string& line) {
    if (config.trace) *config.trace << line << "\n";
  };

  MasterState state(inst, config.simplex);
  PipelineResult result;
  SeparationOptions sep_options{config.add_all_violated};

  for (;;) {
    state.solve_master();
    if (!result.lp_values.empty()) {
      LOTFORGE_ENSURE(state.lp_value() >= result.lp_values.back(), "master LP value decreased");
    }
    result.lp_values.push_back(state.lp_value());
    trace("round " + std::to_string(state.round()) + " lp_value " + to_string(state.lp_value()));

    SeparationResult sep = try_round(state.current(), inst, sep_options);
    if (sep.ready) {
      result.payload = std::move(*sep.ready);
      break;
    }
    if (state.round() >= config.max_rounds) {
      throw PipelineRoundLimit(state.round(), state.current(), state.cut_pool(), state.lp_value());
    }
    for (const CoveringCut& cut : sep.cuts) {
      trace("round " + std::to_string(state.round()) + " cut " + to_string(cut));
      state.add_cut(cut);
    }
  }

  const FractionalSolution& sol = state.current();
  result.lp_solution = sol;
  result.cuts = state.cut_pool();
  result.final_lp = state.lp();

  IntervalKcInstance ikc{inst.T, inst.C, inst.K, result.payload.R};
  LaminarKcOptions kc_options{config.trace, config.simplex};
  result.interval = solve_interval_kc(ikc, result.payload.yhat, result.payload.Splus,
                                      result.payload.Rtilde, kc_options);
  const PeriodSet& orders = result.interval.selected;
  trace("orders " + to_string(orders));

  result.xprime = build_xprime(sol.x, inst);
  auto xstar = solve_assignment(inst, orders, result.xprime);
  LOTFORGE_ENSURE(xstar.has_value(), "assignment infeasible although every interval requirement is met");
  result.xstar = std::move(*xstar);
  result.schedule = make_schedule(inst, orders, result.xstar);

  Certificate& cert = result.certificate;
  cert.lp_value = state.lp_value();
  cert.lp_ordering = 0;
  for (int s = 1; s <= inst.T; ++s) cert.lp_ordering += sol.y[s - 1] * inst.order_cost(s);
  cert.lp_holding = hcost(inst, sol.x);
  cert.rounds = state.round();
  cert.num_cuts = static_cast<int>(result.cuts.size());
  cert.ordering_bound_ok = result.schedule.costs.ordering <= 10 * cert.lp_ordering;
  cert.holding_bound_ok = result.schedule.costs.holding <= Rational(5, 2) * cert.lp_holding;
  return result;
}

}  // namespace lotforge
