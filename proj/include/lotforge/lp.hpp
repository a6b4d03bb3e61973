#pragma once

// Exact-rational linear programming that always returns a vertex.
//
// The solver is a two-phase, bounded-variable primal simplex on a dense
// tableau. Every comparison is exact, so "y_s = 1" downstream is a fact, not
// a tolerance judgment.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lotforge/rational.hpp"

namespace lotforge {

enum class Relation { GreaterEq, LessEq, Equal };

struct LpRow {
  std::vector<std::pair<int, Rational>> coeffs;  // sparse var -> coefficient
  Relation rel = Relation::GreaterEq;
  Rational rhs;
  std::string name;
};

struct VarBounds {
  Rational lo = 0;
  std::optional<Rational> hi;  // nullopt = +infinity
};

/// Minimize objective · x subject to rows and per-variable bounds. Lower
/// bounds are always finite.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
  std::vector<VarBounds> bounds;
  std::vector<std::string> var_names;

  int add_var(Rational cost, Rational lo, std::optional<Rational> hi, std::string name = {});
  int add_row(LpRow row);

  /// Row activity Σ a_j x_j.
  Rational activity(int row, const std::vector<Rational>& x) const;
};

/// Throws std::invalid_argument when a row references an unknown variable,
/// the objective has the wrong length, or some lo > hi.
void check_well_formed(const LinearProgram& lp);

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> values;
  Rational objective_value;
  std::vector<int> tight_rows;  // rows holding with equality
  std::vector<int> at_bound;    // variables sitting at lo or hi
  int pivots = 0;
};

enum class PivotRule {
  Bland,  // least index, always
  /// Steepest reduced cost; drops to least index for the remainder of any run
  /// of degenerate pivots longer than `degenerate_limit`.
  DantzigBlandFallback,
};

struct SimplexOptions {
  PivotRule rule = PivotRule::DantzigBlandFallback;
  int degenerate_limit = 8;
};

LpSolution solve_to_vertex(const LinearProgram& lp, const SimplexOptions& options = {});

/// Every row and bound holds exactly at x.
bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x,
                 std::string* why = nullptr);

/// Rank of the system of constraints (rows and bounds) tight at x.
int tight_rank(const LinearProgram& lp, const std::vector<Rational>& x);

/// Feasible and the tight system has full rank num_vars.
bool verify_vertex(const LinearProgram& lp, const LpSolution& sol);

/// Rank of a dense rational matrix (Gaussian elimination, exact).
int matrix_rank(std::vector<std::vector<Rational>> m);

/// Plain-text inequality dump for debugging.
void write_lp(std::ostream& out, const LinearProgram& lp);

}  // namespace lotforge
