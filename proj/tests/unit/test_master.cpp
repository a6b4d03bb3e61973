#include "doctest.h"
#include "lotforge/master.hpp"
#include "lotforge/oracles.hpp"

using namespace lotforge;

TEST_CASE("gap instance: base value, cut, final cost") {
  const CmilsInstance gap = gen_kc_gap(1000);
  MasterState state(gap);
  const FractionalSolution& sol = state.solve_master();
  CHECK(state.lp_value() == Rational(1, 1000));
  CHECK(sol.y == std::vector<Rational>{1, Rational(1, 1000)});

  const CoveringCut cut{{1}, {2}, {0}};
  CHECK(cut_lhs(cut, sol, gap) < cut_demand(cut, gap));
  state.add_cut(cut);
  CHECK_THROWS_AS(state.add_cut(cut), std::invalid_argument);
  const FractionalSolution& after = state.solve_master();
  CHECK(after.y[1] == 1);
  CHECK(cut_lhs(cut, after, gap) >= cut_demand(cut, gap));

  const PipelineResult result = run_pipeline(gap);
  CHECK(result.schedule.costs.total == 1);
  CHECK(result.certificate.num_cuts == 1);
  CHECK(result.certificate.ordering_bound_ok);
  CHECK(result.certificate.holding_bound_ok);
}

TEST_CASE("one period forces y = 1") {
  CmilsInstance inst;
  inst.T = 1;
  inst.K = {9};
  inst.C = {5};
  inst.items = {Item{4, 1, {0}}};
  MasterState state(inst);
  CHECK(state.solve_master().y[0] == 1);
  CHECK(state.lp_value() == 9);
  const PipelineResult result = run_pipeline(inst);
  CHECK(result.schedule.orders == PeriodSet{1});
  CHECK(result.schedule.costs.total == 9);
}

TEST_CASE("single-knapsack cut reduces to the per-(s,i) form") {
  const CmilsInstance inst = gen_random(5, GeneratorParams{});
  MasterState state(inst);
  const FractionalSolution& sol = state.solve_master();
  for (int i = 0; i < inst.N(); ++i) {
    for (int s = 1; s <= inst.T; ++s) {
      if (inst.C[s - 1] >= inst.items[i].demand) continue;
      const CoveringCut cut{{}, {s}, {i}};
      Rational rest = 0;
      for (int t = 1; t <= inst.items[i].deadline; ++t) {
        if (t != s) rest += sol.x_at(i, t);
      }
      const Rational expect = rmin(inst.C[s - 1], inst.items[i].demand) * sol.y[s - 1] + rest * inst.items[i].demand;
      CHECK(cut_lhs(cut, sol, inst) == expect);
    }
  }
}

TEST_CASE("cut_lhs matches a naive evaluation and rejects bad cuts") {
  const CmilsInstance inst = gen_random(5, GeneratorParams{});
  MasterState state(inst);
  const FractionalSolution& sol = state.solve_master();
  const CoveringCut cut{{}, {2, 3}, {0, 2}};
  const Rational dI = inst.items[0].demand + inst.items[2].demand;
  Rational naive = 0;
  for (int s : {2, 3}) naive += rmin(inst.C[s - 1], dI) * sol.y[s - 1];
  for (int i : {0, 2}) {
    naive += inst.items[i].demand * sol.x[i][0];
    for (int s = 4; s <= inst.items[i].deadline; ++s) naive += inst.items[i].demand * sol.x[i][s - 1];
  }
  CHECK(cut_lhs(cut, sol, inst) == naive);

  CHECK_THROWS_AS(cut_lhs(CoveringCut{{1}, {1}, {0}}, sol, inst), std::invalid_argument);
  CmilsInstance big = inst;
  big.C[0] = 1000;
  CHECK_THROWS_AS(cut_lhs(CoveringCut{{1}, {}, {0}}, sol, big), std::invalid_argument);
}

TEST_CASE("non-violated cuts are refused") {
  const CmilsInstance gap = gen_kc_gap(1000);
  MasterState state(gap);
  state.solve_master();
  state.add_cut(CoveringCut{{1}, {2}, {0}});
  state.solve_master();
  CHECK_THROWS_AS(state.add_cut(CoveringCut{{}, {2}, {0}}), std::invalid_argument);
}

TEST_CASE("base LP value is a lower bound on the optimum") {
  for (std::uint64_t seed : {5u, 11u, 23u}) {
    const CmilsInstance inst = gen_random(seed, GeneratorParams{});
    MasterState state(inst);
    state.solve_master();
    CHECK(state.lp_value() <= *brute_force_cmils(inst).optimum_cost);
  }
}

TEST_CASE("pipeline invariants on small seeds") {
  GeneratorParams p;
  p.T = 6;
  p.N = 4;
  p.capacity_lo = 3;
  p.capacity_hi = 15;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CAPTURE(seed);
    const CmilsInstance inst = gen_random(seed, p);
    const PipelineResult r = run_pipeline(inst);
    CHECK(check_feasible(inst, r.schedule).feasible);
    for (std::size_t k = 1; k < r.lp_values.size(); ++k) CHECK(r.lp_values[k - 1] <= r.lp_values[k]);
    CHECK(r.certificate.ordering_bound_ok);
    CHECK(r.certificate.holding_bound_ok);

    const OracleResult best = brute_force_cmils(inst);
    REQUIRE(best.schedule);
    CHECK(r.certificate.lp_value <= *best.optimum_cost);
    CHECK(r.schedule.costs.total <= 10 * *best.optimum_cost);

    // Every pooled cut holds at the integral optimum.
    FractionalSolution integral;
    integral.x = fractions_of(inst, *best.schedule);
    integral.y.assign(inst.T, 0);
    for (int s : best.orders) integral.y[s - 1] = 1;
    for (const CoveringCut& cut : r.cuts) CHECK(cut_lhs(cut, integral, inst) >= cut_demand(cut, inst));
  }
}

TEST_CASE("round cap is reported with the last state") {
  const CmilsInstance gap = gen_kc_gap(1000);
  PipelineConfig config;
  config.max_rounds = 1;
  try {
    run_pipeline(gap, config);
    FAIL("expected the round cap to trigger");
  } catch (const PipelineRoundLimit& e) {
    CHECK(e.rounds == 1);
    CHECK(e.lp_value == Rational(1, 1000));
    CHECK(e.last.y[1] == Rational(1, 1000));
  }
}

TEST_CASE("certificate JSON fields") {
  const PipelineResult r = run_pipeline(gen_kc_gap(10));
  const nlohmann::json j = to_json(r.certificate);
  for (const char* key : {"lp_value", "rounds", "num_cuts", "ordering_bound_ok", "holding_bound_ok"}) {
    CHECK(j.contains(key));
  }
}
