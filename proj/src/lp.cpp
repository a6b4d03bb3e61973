#include "lotforge/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace lotforge {

int LinearProgram::add_var(Rational cost, Rational lo, std::optional<Rational> hi, std::string name) {
  objective.push_back(std::move(cost));
  bounds.push_back({std::move(lo), std::move(hi)});
  var_names.push_back(name.empty() ? "v" + std::to_string(num_vars) : std::move(name));
  return num_vars++;
}

int LinearProgram::add_row(LpRow row) {
  rows.push_back(std::move(row));
  return static_cast<int>(rows.size()) - 1;
}

Rational LinearProgram::activity(int row, const std::vector<Rational>& x) const {
  Rational total = 0;
  for (const auto& [j, a] : rows.at(row).coeffs) total += a * x[j];
  return total;
}

void check_well_formed(const LinearProgram& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars ||
      static_cast<int>(lp.bounds.size()) != lp.num_vars) {
    throw std::invalid_argument("objective/bounds length differs from num_vars");
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.bounds[j].hi && *lp.bounds[j].hi < lp.bounds[j].lo) {
      throw std::invalid_argument("variable " + std::to_string(j) + " has lo > hi");
    }
  }
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    for (const auto& [j, a] : lp.rows[r].coeffs) {
      if (j < 0 || j >= lp.num_vars) {
        throw std::invalid_argument("row " + std::to_string(r) + " references variable " +
                                    std::to_string(j));
      }
    }
  }
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Standard form: structural columns z_j = x_j - lo_j in [0, u_j], then one
// slack per inequality row, then artificials. Rows are sign-normalized so the
// initial basis (slack or artificial per row) sits at rhs >= 0.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& opt) : lp_(lp), opt_(opt) {
    n_ = lp.num_vars;
    m_ = static_cast<int>(lp.rows.size());

    std::vector<std::vector<Rational>> dense(m_, std::vector<Rational>(n_, 0));
    std::vector<Rational> rhs(m_);
    std::vector<int> slack_sign(m_, 0);
    for (int r = 0; r < m_; ++r) {
      const LpRow& row = lp.rows[r];
      rhs[r] = row.rhs;
      for (const auto& [j, a] : row.coeffs) dense[r][j] += a;
      for (int j = 0; j < n_; ++j) {
        if (dense[r][j] != 0) rhs[r] -= dense[r][j] * lp.bounds[j].lo;
      }
      if (row.rel == Relation::LessEq) slack_sign[r] = 1;
      if (row.rel == Relation::GreaterEq) slack_sign[r] = -1;
      if (rhs[r] < 0) {
        for (auto& a : dense[r]) a = -a;
        rhs[r] = -rhs[r];
        slack_sign[r] = -slack_sign[r];
      }
    }

    int slacks = 0, artificials = 0;
    for (int r = 0; r < m_; ++r) {
      if (slack_sign[r] != 0) ++slacks;
      if (slack_sign[r] != 1) ++artificials;
    }
    first_slack_ = n_;
    first_art_ = n_ + slacks;
    cols_ = first_art_ + artificials;
    active_cols_ = cols_;

    ub_.resize(cols_);
    for (int j = 0; j < n_; ++j) {
      if (lp.bounds[j].hi) ub_[j] = *lp.bounds[j].hi - lp.bounds[j].lo;
    }
    tab_.assign(static_cast<std::size_t>(m_) * cols_, Rational(0));
    basis_.assign(m_, -1);
    beta_ = rhs;
    is_basic_.assign(cols_, false);
    at_upper_.assign(cols_, false);

    int next_slack = first_slack_, next_art = first_art_;
    for (int r = 0; r < m_; ++r) {
      for (int j = 0; j < n_; ++j) at(r, j) = dense[r][j];
      if (slack_sign[r] != 0) {
        at(r, next_slack) = slack_sign[r];
        if (slack_sign[r] == 1) basis_[r] = next_slack;
        ++next_slack;
      }
      if (slack_sign[r] != 1) {
        at(r, next_art) = 1;
        basis_[r] = next_art++;
      }
      is_basic_[basis_[r]] = true;
    }
  }

  LpSolution run() {
    LpSolution sol;
    if (first_art_ < cols_) {
      std::vector<Rational> phase1(cols_, 0);
      for (int j = first_art_; j < cols_; ++j) phase1[j] = 1;
      set_costs(phase1);
      iterate(/*allow_artificial=*/true);
      Rational infeas = 0;
      for (int r = 0; r < m_; ++r) {
        if (is_artificial(basis_[r])) infeas += beta_[r];
      }
      if (infeas > 0) {
        sol.status = LpStatus::Infeasible;
        sol.pivots = pivots_;
        return sol;
      }
      drive_out_artificials();
      active_cols_ = first_art_;
    }
    std::vector<Rational> phase2(cols_, 0);
    for (int j = 0; j < n_; ++j) phase2[j] = lp_.objective[j];
    set_costs(phase2);
    if (!iterate(/*allow_artificial=*/false)) {
      sol.status = LpStatus::Unbounded;
      sol.pivots = pivots_;
      return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.pivots = pivots_;
    sol.values.assign(n_, 0);
    for (int j = 0; j < n_; ++j) {
      if (!is_basic_[j] && at_upper_[j]) sol.values[j] = *ub_[j];
    }
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) sol.values[basis_[r]] = beta_[r];
    }
    sol.objective_value = 0;
    for (int j = 0; j < n_; ++j) {
      sol.values[j] += lp_.bounds[j].lo;
      sol.objective_value += lp_.objective[j] * sol.values[j];
    }
    return sol;
  }

 private:
  Rational& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * cols_ + c]; }
  bool is_artificial(int c) const { return c >= first_art_; }
  bool is_fixed(int c) const { return ub_[c] && *ub_[c] == 0; }

  void set_costs(const std::vector<Rational>& c) {
    cost_ = c;
    reduced_ = c;
    for (int r = 0; r < m_; ++r) {
      const Rational& cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (int k = 0; k < active_cols_; ++k) {
        const Rational& a = at(r, k);
        if (a != 0) reduced_[k] -= cb * a;
      }
    }
  }

  bool eligible(int j, bool allow_artificial) const {
    if (is_basic_[j] || is_fixed(j)) return false;
    if (!allow_artificial && is_artificial(j)) return false;
    const int sign = sgn(reduced_[j]);
    return at_upper_[j] ? sign > 0 : sign < 0;
  }

  int choose_entering(bool allow_artificial) const {
    const int limit = allow_artificial ? cols_ : active_cols_;
    const bool bland = opt_.rule == PivotRule::Bland || degenerate_streak_ > opt_.degenerate_limit;
    int best = -1;
    Rational best_mag;
    for (int j = 0; j < limit; ++j) {
      if (!eligible(j, allow_artificial)) continue;
      if (bland) return j;
      Rational mag = abs(reduced_[j]);
      if (best < 0 || mag > best_mag) {
        best = j;
        best_mag = std::move(mag);
      }
    }
    return best;
  }

  // Returns false on unboundedness.
  bool iterate(bool allow_artificial) {
    degenerate_streak_ = 0;
    for (;;) {
      const int j = choose_entering(allow_artificial);
      if (j < 0) return true;
      const int dir = at_upper_[j] ? -1 : 1;

      // Ratio test; ties go to the least variable index (the bound flip of
      // the entering column counts as index j).
      bool have = false;
      Rational best_t;
      int best_row = -1;
      int best_idx = 0;
      bool leave_upper = false;
      if (ub_[j]) {
        have = true;
        best_t = *ub_[j];
        best_idx = j;
      }
      for (int r = 0; r < m_; ++r) {
        const Rational& a = at(r, j);
        if (a == 0) continue;
        const int da = dir * sgn(a);
        Rational t;
        bool to_upper = false;
        if (da > 0) {
          t = beta_[r] / abs(a);
        } else {
          const auto& u = ub_[basis_[r]];
          if (!u) continue;
          t = (*u - beta_[r]) / abs(a);
          to_upper = true;
        }
        if (!have || t < best_t || (t == best_t && basis_[r] < best_idx)) {
          have = true;
          best_t = std::move(t);
          best_row = r;
          best_idx = basis_[r];
          leave_upper = to_upper;
        }
      }
      if (!have) return false;

      degenerate_streak_ = best_t == 0 ? degenerate_streak_ + 1 : 0;
      ++pivots_;

      if (best_t != 0) {
        Rational step = dir * best_t;
        for (int r = 0; r < m_; ++r) {
          const Rational& a = at(r, j);
          if (a != 0) beta_[r] -= step * a;
        }
      }
      if (best_row < 0) {
        at_upper_[j] = !at_upper_[j];
        continue;
      }

      Rational entering_value = at_upper_[j] ? *ub_[j] : Rational(0);
      entering_value += dir * best_t;
      const int leaving = basis_[best_row];
      is_basic_[leaving] = false;
      at_upper_[leaving] = leave_upper;
      basis_[best_row] = j;
      is_basic_[j] = true;
      at_upper_[j] = false;
      beta_[best_row] = std::move(entering_value);
      pivot(best_row, j);
    }
  }

  void pivot(int pr, int pc) {
    const Rational piv = at(pr, pc);
    std::vector<int> nz;
    for (int k = 0; k < active_cols_; ++k) {
      Rational& a = at(pr, k);
      if (a == 0) continue;
      a /= piv;
      nz.push_back(k);
    }
    Rational f;
    for (int r = 0; r < m_; ++r) {
      if (r == pr) continue;
      f = at(r, pc);
      if (f == 0) continue;
      for (int k : nz) at(r, k) -= f * at(pr, k);
    }
    f = reduced_[pc];
    if (f != 0) {
      for (int k : nz) reduced_[k] -= f * at(pr, k);
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      for (int k = 0; k < first_art_; ++k) {
        if (is_basic_[k] || at(r, k) == 0) continue;
        Rational value = at_upper_[k] ? *ub_[k] : Rational(0);
        is_basic_[basis_[r]] = false;
        basis_[r] = k;
        is_basic_[k] = true;
        at_upper_[k] = false;
        beta_[r] = std::move(value);
        pivot(r, k);
        ++pivots_;
        break;
      }
      // A row with no non-artificial entry is redundant; its artificial stays
      // basic at zero and no later pivot can touch it.
    }
  }

  const LinearProgram& lp_;
  SimplexOptions opt_;
  int n_ = 0, m_ = 0, cols_ = 0, active_cols_ = 0;
  int first_slack_ = 0, first_art_ = 0;
  std::vector<std::optional<Rational>> ub_;
  std::vector<Rational> tab_;
  std::vector<int> basis_;
  std::vector<Rational> beta_;
  std::vector<bool> is_basic_, at_upper_;
  std::vector<Rational> cost_, reduced_;
  int pivots_ = 0;
  int degenerate_streak_ = 0;
};

bool row_holds(const LpRow& row, const Rational& act) {
  switch (row.rel) {
    case Relation::GreaterEq: return act >= row.rhs;
    case Relation::LessEq: return act <= row.rhs;
    case Relation::Equal: return act == row.rhs;
  }
  return false;
}

}  // namespace

LpSolution solve_to_vertex(const LinearProgram& lp, const SimplexOptions& options) {
  check_well_formed(lp);
  LpSolution sol = Tableau(lp, options).run();
  if (sol.status != LpStatus::Optimal) return sol;
  for (int r = 0; r < static_cast<int>(lp.rows.size()); ++r) {
    if (lp.activity(r, sol.values) == lp.rows[r].rhs) sol.tight_rows.push_back(r);
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& b = lp.bounds[j];
    if (sol.values[j] == b.lo || (b.hi && sol.values[j] == *b.hi)) sol.at_bound.push_back(j);
  }
  return sol;
}

bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (static_cast<int>(x.size()) != lp.num_vars) return fail("dimension mismatch");
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& b = lp.bounds[j];
    if (x[j] < b.lo || (b.hi && x[j] > *b.hi)) {
      return fail("bound of " + lp.var_names[j] + " violated");
    }
  }
  for (int r = 0; r < static_cast<int>(lp.rows.size()); ++r) {
    if (!row_holds(lp.rows[r], lp.activity(r, x))) {
      return fail("row " + std::to_string(r) + " (" + lp.rows[r].name + ") violated");
    }
  }
  return true;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

int tight_rank(const LinearProgram& lp, const std::vector<Rational>& x) {
  std::vector<std::vector<Rational>> system;
  for (int r = 0; r < static_cast<int>(lp.rows.size()); ++r) {
    if (lp.activity(r, x) != lp.rows[r].rhs) continue;
    std::vector<Rational> row(lp.num_vars, 0);
    for (const auto& [j, a] : lp.rows[r].coeffs) row[j] += a;
    system.push_back(std::move(row));
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& b = lp.bounds[j];
    if (x[j] == b.lo || (b.hi && x[j] == *b.hi)) {
      std::vector<Rational> row(lp.num_vars, 0);
      row[j] = 1;
      system.push_back(std::move(row));
    }
  }
  return matrix_rank(std::move(system));
}

bool verify_vertex(const LinearProgram& lp, const LpSolution& sol) {
  if (sol.status != LpStatus::Optimal) return false;
  if (!is_feasible(lp, sol.values)) return false;
  return tight_rank(lp, sol.values) == lp.num_vars;
}

void write_lp(std::ostream& out, const LinearProgram& lp) {
  auto term = [&](const Rational& a, int j) {
    out << (a < 0 ? " - " : " + ") << to_string(Rational(abs(a))) << " " << lp.var_names[j];
  };
  out << "minimize";
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.objective[j] != 0) term(lp.objective[j], j);
  }
  out << "\nsubject to\n";
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    const LpRow& row = lp.rows[r];
    out << "  " << (row.name.empty() ? "r" + std::to_string(r) : row.name) << ":";
    for (const auto& [j, a] : row.coeffs) term(a, j);
    out << (row.rel == Relation::GreaterEq ? " >= " : row.rel == Relation::LessEq ? " <= " : " = ")
        << to_string(row.rhs) << "\n";
  }
  out << "bounds\n";
  for (int j = 0; j < lp.num_vars; ++j) {
    out << "  " << to_string(lp.bounds[j].lo) << " <= " << lp.var_names[j];
    if (lp.bounds[j].hi) out << " <= " << to_string(*lp.bounds[j].hi);
    out << "\n";
  }
}

}  // namespace lotforge
