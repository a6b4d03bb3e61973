#include "doctest.h"
#include "lotforge/errors.hpp"
#include "lotforge/lp.hpp"
#include "lotforge/oracles.hpp"
#include "oracles_test.hpp"

using namespace lotforge;

TEST_CASE("lot-sizing oracle on the gap instance and one period") {
  const OracleResult gap = brute_force_cmils(gen_kc_gap(1000));
  CHECK(gap.optimum_cost == Rational(1));
  CHECK(gap.orders == PeriodSet{1, 2});
  CHECK(gap.explored == 4);

  CmilsInstance one;
  one.T = 1;
  one.K = {6};
  one.C = {3};
  one.items = {Item{2, 1, {0}}};
  CHECK(brute_force_cmils(one).optimum_cost == Rational(6));
}

TEST_CASE("oracle witnesses are feasible at the stated cost") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CmilsInstance inst = gen_random(seed, GeneratorParams{});
    const OracleResult r = brute_force_cmils(inst);
    REQUIRE(r.schedule);
    CHECK(check_feasible(inst, *r.schedule).feasible);
    CHECK(cost(inst, *r.schedule).total == *r.optimum_cost);
  }
}

TEST_CASE("min holding flow equals the transportation LP") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    GeneratorParams p;
    p.T = 4;
    p.N = 3;
    const CmilsInstance inst = gen_random(seed, p);
    const PeriodSet all{1, 2, 3, 4};
    LinearProgram lp;
    std::vector<std::vector<int>> var(inst.N());
    for (int i = 0; i < inst.N(); ++i) {
      for (int s = 1; s <= inst.items[i].deadline; ++s) var[i].push_back(lp.add_var(inst.items[i].h(s), 0, std::nullopt));
      LpRow row{{}, Relation::Equal, inst.items[i].demand, ""};
      for (int v : var[i]) row.coeffs.emplace_back(v, 1);
      lp.add_row(row);
    }
    for (int s = 1; s <= inst.T; ++s) {
      LpRow row{{}, Relation::LessEq, inst.C[s - 1], ""};
      for (int i = 0; i < inst.N(); ++i) {
        if (s <= inst.items[i].deadline) row.coeffs.emplace_back(var[i][s - 1], 1);
      }
      lp.add_row(row);
    }
    const LpSolution sol = solve_to_vertex(lp);
    const auto flow = min_holding_cost(inst, all);
    REQUIRE(sol.status == LpStatus::Optimal);
    REQUIRE(flow);
    CHECK(*flow == sol.objective_value);
  }
}

TEST_CASE("knapsack oracles") {
  LaminarKcInstance single{3, {2, 5, 5}, {1, 1, 1}, {{0, 3}}, {5}};
  const OracleResult a = brute_force_laminar_kc(single);
  CHECK(a.optimum_cost == Rational(1));
  CHECK(capacity_of(single.C, a.orders) >= 5);

  LaminarKcInstance none{3, {2, 5, 5}, {1, 1, 1}, {{0, 3}}, {0}};
  CHECK(brute_force_laminar_kc(none).orders.empty());
  CHECK(brute_force_laminar_kc(none).optimum_cost == Rational(0));

  IntervalKcInstance zero{2, {1, 1}, {3, 3}, IntervalTable<Rational>(2, Rational(0))};
  CHECK(brute_force_interval_kc(zero).optimum_cost == Rational(0));
  IntervalKcInstance gap{2, {999, 1000}, {0, 1}, IntervalTable<Rational>(2, Rational(0))};
  gap.R[{0, 2}] = 1000;
  CHECK(brute_force_interval_kc(gap).optimum_cost == Rational(1));
}

TEST_CASE("size caps refuse") {
  GeneratorParams p;
  p.T = 15;
  p.N = 1;
  CHECK_THROWS_AS(brute_force_cmils(gen_random(1, p)), SizeLimitError);
  IntervalKcInstance big{17, std::vector<Rational>(17, 1), std::vector<Rational>(17, 1),
                         IntervalTable<Rational>(17, Rational(0))};
  CHECK_THROWS_AS(brute_force_interval_kc(big), SizeLimitError);
}

TEST_CASE("interval wrapper: gap, empty, and random ratio") {
  IntervalKcInstance gap{2, {999, 1000}, {0, 1}, IntervalTable<Rational>(2, Rational(0))};
  gap.R[{0, 2}] = 1000;
  const WrapperResult g = solve_interval_kc_standalone(gap);
  CHECK(g.cost == 1);
  CHECK(g.selected.count(2));
  CHECK(g.num_cuts >= 1);

  IntervalKcInstance zero{3, {1, 1, 1}, {3, 3, 3}, IntervalTable<Rational>(3, Rational(0))};
  CHECK(solve_interval_kc_standalone(zero).selected.empty());

  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const IntervalKcInstance inst = testsupport::random_interval_kc(seed, 8);
    const WrapperResult w = solve_interval_kc_standalone(inst);
    const OracleResult best = brute_force_interval_kc(inst);
    CHECK(w.cost <= 10 * *best.optimum_cost);
    CHECK(w.cost <= 10 * w.lp_value);
    CHECK(w.lp_value <= *best.optimum_cost);
  }
}
