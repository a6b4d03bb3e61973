#pragma once

// The strengthened master relaxation, its cut pool, and the cutting-plane
// driver that ends in an integral schedule.

#include <optional>
#include <ostream>
#include <vector>

#include "lotforge/covering_cut.hpp"
#include "lotforge/errors.hpp"
#include "lotforge/instance.hpp"
#include "lotforge/interval_kc.hpp"
#include "lotforge/lp.hpp"
#include "lotforge/separation.hpp"

namespace lotforge {

struct MasterLayout {
  std::vector<std::vector<int>> x_var;  // [i][s-1], s ∈ [1, r_i]
  std::vector<int> y_var;               // [s-1]
};

struct MasterLp {
  LinearProgram lp;
  MasterLayout layout;
};

/// Coverage equalities, the per-(s, i) rows min{C_s, d_i}·y_s >= d_i·x_{s,i},
/// the per-s rows min{C_s, d([N])}·y_s >= Σ_i d_i·x_{s,i}, boxes [0, 1], and
/// the lot-sizing objective Σ K_s y_s + Σ_i d_i Σ_s h_i(s) x_{s,i}.
MasterLp build_base_lp(const CmilsInstance& inst);

/// The covering row in LP form:
/// Σ_{S2} min{C_s, d(I) − C(S1)} y_s + Σ_{i∈I} Σ_{s∉S1∪S2} d_i x_{s,i} >= d(I) − C(S1).
LpRow cut_row(const CoveringCut& cut, const CmilsInstance& inst, const MasterLayout& layout);

FractionalSolution extract_solution(const LpSolution& sol, const MasterLayout& layout);

class MasterState {
 public:
  explicit MasterState(const CmilsInstance& inst, SimplexOptions simplex = {});

  /// Re-solves from scratch. Throws std::invalid_argument if the relaxation is
  /// infeasible, which only happens for infeasible instances.
  const FractionalSolution& solve_master();

  /// Appends a cut strictly violated by current(). Throws std::invalid_argument
  /// on duplicates, non-violated cuts, or malformed cuts.
  void add_cut(const CoveringCut& cut);

  const CmilsInstance& instance() const { return inst_; }
  const std::vector<CoveringCut>& cut_pool() const { return pool_; }
  const FractionalSolution& current() const { return current_; }
  const LpSolution& last_solution() const { return last_; }
  const LinearProgram& lp() const { return master_.lp; }
  int round() const { return round_; }  // number of master solves so far
  const Rational& lp_value() const { return last_.objective_value; }

 private:
  CmilsInstance inst_;
  SimplexOptions simplex_;
  MasterLp master_;
  std::vector<CoveringCut> pool_;
  std::vector<std::string> keys_;
  FractionalSolution current_;
  LpSolution last_;
  int round_ = 0;
};

struct PipelineConfig {
  int max_rounds = 200;
  bool add_all_violated = false;
  std::ostream* trace = nullptr;
  SimplexOptions simplex;
};

struct Certificate {
  Rational lp_value;
  Rational lp_ordering;  // Σ y_s K_s
  Rational lp_holding;   // hcost(x)
  int rounds = 0;
  int num_cuts = 0;
  bool ordering_bound_ok = false;  // K(S*) <= 10·Σ y_s K_s
  bool holding_bound_ok = false;   // hcost(x*) <= (5/2)·hcost(x)
};

nlohmann::json to_json(const Certificate& cert);

struct PipelineResult {
  OrderSchedule schedule;
  Certificate certificate;
  FractionalSolution lp_solution;
  RoundingPayload payload;
  IntervalKcSolution interval;
  FractionTable xprime;
  FractionTable xstar;
  std::vector<CoveringCut> cuts;
  std::vector<Rational> lp_values;  // after each master solve
  LinearProgram final_lp;
};

class PipelineRoundLimit : public RoundLimitError {
 public:
  PipelineRoundLimit(int rounds, FractionalSolution last, std::vector<CoveringCut> cuts, Rational lp_value)
      : RoundLimitError(rounds), last(std::move(last)), cuts(std::move(cuts)), lp_value(std::move(lp_value)) {}

  FractionalSolution last;
  std::vector<CoveringCut> cuts;
  Rational lp_value;
};

/// Solve, separate, cut, repeat; then interval covering, assignment, schedule.
/// Throws std::invalid_argument on invalid or infeasible instances and
/// PipelineRoundLimit when more than max_rounds master solves would be needed.
PipelineResult run_pipeline(const CmilsInstance& inst, const PipelineConfig& config = {});

}  // namespace lotforge
