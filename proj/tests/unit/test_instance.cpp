#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "lotforge/errors.hpp"
#include "lotforge/instance.hpp"
#include "lotforge/oracles.hpp"
#include "oracles_test.hpp"

using namespace lotforge;

namespace {

CmilsInstance one_period(Rational K, Rational C, Rational d) {
  CmilsInstance inst;
  inst.T = 1;
  inst.K = {K};
  inst.C = {C};
  inst.items = {Item{d, 1, {0}}};
  return inst;
}

OrderSchedule full_at(const CmilsInstance& inst, int s, int item = 0) {
  OrderSchedule sched;
  sched.orders = {s};
  sched.quantity.assign(inst.N(), std::vector<Rational>(inst.T, 0));
  sched.quantity[item][s - 1] = inst.items[item].demand;
  return sched;
}

}  // namespace

TEST_CASE("rationals parse exactly and render as p/q") {
  CHECK(parse_rational("7/3") == Rational(7, 3));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
}

TEST_CASE("validate reports each broken invariant") {
  CHECK(validate(gen_kc_gap(1000)).empty());

  CmilsInstance rising;
  rising.T = 3;
  rising.K = {1, 1, 1};
  rising.C = {9, 9, 9};
  rising.items = {Item{2, 3, {0, 1, 0}}};
  auto bad = validate(rising);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].rule == "h non-increasing");

  CmilsInstance inst = gen_kc_gap(10);
  inst.items[0].holding = {5, 3};
  bad = validate(inst);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].rule == "h_i(r_i)=0");
}

TEST_CASE("check_feasible on one-period schedules") {
  const CmilsInstance fits = one_period(7, 5, 5);
  CHECK(check_feasible(fits, full_at(fits, 1)).feasible);

  const CmilsInstance tight = one_period(7, 4, 5);
  const auto report = check_feasible(tight, full_at(tight, 1));
  CHECK_FALSE(report.feasible);
  bool capacity = false;
  for (const auto& v : report.violations) capacity |= v.rule == "capacity";
  CHECK(capacity);

  CmilsInstance late;
  late.T = 2;
  late.K = {1, 1};
  late.C = {10, 10};
  late.items = {Item{3, 1, {0}}};
  OrderSchedule sched = full_at(late, 2);
  const auto rep = check_feasible(late, sched);
  CHECK_FALSE(rep.feasible);
  bool deadline = false;
  for (const auto& v : rep.violations) deadline |= v.rule == "deadline";
  CHECK(deadline);
}

TEST_CASE("cost splits ordering and holding") {
  const CmilsInstance inst = one_period(7, 5, 3);
  const CostBreakdown c = cost(inst, full_at(inst, 1));
  CHECK(c.ordering == 7);
  CHECK(c.holding == 0);
  CHECK(c.total == 7);

  const CmilsInstance gap = gen_kc_gap(1000);
  OrderSchedule both;
  both.orders = {1, 2};
  both.quantity = {{999, 1}};
  CHECK(cost(gap, both).ordering == 1);

  CHECK_THROWS_AS(cost(one_period(7, 2, 3), full_at(one_period(7, 2, 3), 1)), std::invalid_argument);
}

TEST_CASE("cost of an oracle schedule matches a second summation") {
  const CmilsInstance inst = gen_random(42, GeneratorParams{});
  const OracleResult best = brute_force_cmils(inst);
  REQUIRE(best.schedule);
  const OrderSchedule& sched = *best.schedule;
  Rational ordering = 0, holding = 0;
  for (int s : sched.orders) ordering += inst.K[s - 1];
  for (int i = 0; i < inst.N(); ++i) {
    for (int s = 1; s <= inst.items[i].deadline; ++s) holding += sched.quantity[i][s - 1] * inst.items[i].holding[s - 1];
  }
  const CostBreakdown c = cost(inst, sched);
  CHECK(c.ordering == ordering);
  CHECK(c.holding == holding);
  CHECK(c.total == ordering + holding);
}

TEST_CASE("hcost") {
  CmilsInstance inst;
  inst.T = 2;
  inst.K = {1, 1};
  inst.C = {5, 5};
  inst.items = {Item{2, 2, {3, 0}}};
  CHECK(hcost(inst, {{Rational(1, 2), Rational(1, 2)}}) == 3);
  CHECK(hcost(inst, {{0, 1}}) == 0);

  const CmilsInstance seven = gen_random(7, GeneratorParams{});
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const FractionTable x = testsupport::random_x(rng, seven);
    CHECK(hcost(seven, x) == testsupport::naive_hcost(seven, x));
  }
}

TEST_CASE("gen_random is valid, deterministic and feasible") {
  GeneratorParams p;
  p.slack_factor = 2;
  const CmilsInstance a = gen_random(1, p);
  CHECK(validate(a).empty());
  CHECK(a == gen_random(1, p));
  CHECK_FALSE(a == gen_random(2, p));

  GeneratorParams q;
  q.T = 8;
  q.N = 6;
  const CmilsInstance b = gen_random(3, q);
  CHECK(brute_force_cmils(b).optimum_cost.has_value());

  GeneratorParams empty;
  empty.demand_lo = 5;
  empty.demand_hi = 4;
  CHECK_THROWS_AS(gen_random(1, empty), std::invalid_argument);
}

TEST_CASE("gap instance shape and optimum") {
  const CmilsInstance gap = gen_kc_gap(1000);
  CHECK(gap.T == 2);
  CHECK(gap.C == std::vector<Rational>{999, 1000});
  CHECK(gap.K == std::vector<Rational>{0, 1});
  CHECK(brute_force_cmils(gap).optimum_cost == Rational(1));

  // All four order sets by hand for R = 2.
  const CmilsInstance small = gen_kc_gap(2);
  std::optional<Rational> best;
  for (PeriodSet S : {PeriodSet{}, PeriodSet{1}, PeriodSet{2}, PeriodSet{1, 2}}) {
    if (capacity_of(small.C, S) < 2) continue;
    const Rational c = cost_of(small.K, S);
    if (!best || c < *best) best = c;
  }
  CHECK(best == Rational(1));
  CHECK(brute_force_cmils(small).optimum_cost == best);
}

TEST_CASE("instance files round-trip and report missing fields") {
  const auto dir = std::filesystem::temp_directory_path() / "lotforge_unit";
  std::filesystem::create_directories(dir);
  GeneratorParams p;
  p.slack_factor = 2;
  const CmilsInstance inst = gen_random(1, p);
  save_instance(inst, dir / "seed1.json");
  CHECK(load_instance(dir / "seed1.json") == inst);

  nlohmann::json j = to_json(inst);
  j.erase("C");
  try {
    instance_from_json(j);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("\"C\"") != std::string::npos);
  }

  j = to_json(inst);
  j["K"][0] = "7/3";
  CHECK(instance_from_json(j).K[0] == Rational(7, 3));
}
