#include "oracles_test.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lotforge/covering.hpp"

namespace testsupport {

using namespace lotforge;

namespace {

// Solves A z = b by Gauss–Jordan; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const int n = static_cast<int>(A.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rational f = A[r][c] / A[c][c];
      for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  for (int c = 0; c < n; ++c) b[c] /= A[c][c];
  return b;
}

void choose(int m, int k, int start, std::vector<int>& cur, const std::function<void()>& visit) {
  if (static_cast<int>(cur.size()) == k) {
    visit();
    return;
  }
  for (int r = start; r < m; ++r) {
    cur.push_back(r);
    choose(m, k, r + 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

EnumeratedOptimum enumerate_vertices(const LinearProgram& lp) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());
  std::vector<std::vector<Rational>> dense(m, std::vector<Rational>(n, 0));
  for (int r = 0; r < m; ++r) {
    for (const auto& [j, a] : lp.rows[r].coeffs) dense[r][j] += a;
  }
  EnumeratedOptimum best;
  std::vector<int> status(n, 0);  // 0 lo, 1 hi, 2 free
  for (;;) {
    std::vector<int> free;
    std::vector<Rational> x(n);
    for (int j = 0; j < n; ++j) {
      if (status[j] == 2) free.push_back(j);
      else x[j] = status[j] == 0 ? lp.bounds[j].lo : *lp.bounds[j].hi;
    }
    const int k = static_cast<int>(free.size());
    if (k <= m) {
      std::vector<int> rows;
      choose(m, k, 0, rows, [&] {
        ++best.systems;
        std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k));
        std::vector<Rational> b(k);
        for (int p = 0; p < k; ++p) {
          b[p] = lp.rows[rows[p]].rhs;
          for (int j = 0; j < n; ++j) {
            if (status[j] != 2) b[p] -= dense[rows[p]][j] * x[j];
          }
          for (int q = 0; q < k; ++q) A[p][q] = dense[rows[p]][free[q]];
        }
        auto z = solve_square(A, b);
        if (!z) return;
        std::vector<Rational> point = x;
        for (int q = 0; q < k; ++q) point[free[q]] = (*z)[q];
        if (!is_feasible(lp, point)) return;
        Rational value = 0;
        for (int j = 0; j < n; ++j) value += lp.objective[j] * point[j];
        if (!best.feasible || value < best.value) {
          best.feasible = true;
          best.value = value;
        }
      });
    }
    int j = 0;
    while (j < n && status[j] == 2) status[j++] = 0;
    if (j == n) break;
    ++status[j];
  }
  return best;
}

LinearProgram random_lp(std::mt19937_64& rng, int max_vars, int max_rows) {
  LinearProgram lp;
  const int n = 1 + static_cast<int>(rng() % max_vars);
  const int m = static_cast<int>(rng() % (max_rows + 1));
  for (int j = 0; j < n; ++j) {
    const long lo = static_cast<long>(rng() % 3) - 1;
    lp.add_var(static_cast<long>(rng() % 11) - 5, lo, Rational(lo + 1 + static_cast<long>(rng() % 3)));
  }
  for (int r = 0; r < m; ++r) {
    LpRow row;
    for (int j = 0; j < n; ++j) {
      const long a = static_cast<long>(rng() % 7) - 3;
      if (a != 0) row.coeffs.emplace_back(j, a);
    }
    row.rel = static_cast<Relation>(rng() % 3);
    row.rhs = ratio(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2));
    lp.add_row(std::move(row));
  }
  return lp;
}

bool rprime_condition(const Interval& iv, const std::vector<Rational>& y, const PeriodSet& Splus,
                      const std::vector<Rational>& C, const Rational& W) {
  Rational cover = 0, mass = 0;
  for (int s = iv.a + 1; s <= iv.b; ++s) {
    if (Splus.count(s)) continue;
    cover += (C[s - 1] < W ? C[s - 1] : W) * y[s - 1];
    if (C[s - 1] >= W) mass += y[s - 1];
  }
  return cover >= 2 * W || mass >= 1;
}

Rational grid_scan_rprime(const Interval& iv, const std::vector<Rational>& y, const PeriodSet& Splus,
                          const std::vector<Rational>& C) {
  std::set<Rational> points{Rational(0)};
  for (int s = iv.a + 1; s <= iv.b; ++s) {
    if (!Splus.count(s)) points.insert(C[s - 1]);
  }
  auto f = [&](const Rational& W) {
    Rational total = -2 * W;
    for (int s = iv.a + 1; s <= iv.b; ++s) {
      if (!Splus.count(s)) total += (C[s - 1] < W ? C[s - 1] : W) * y[s - 1];
    }
    return total;
  };
  std::vector<Rational> grid(points.begin(), points.end());
  std::set<Rational> candidates(points);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const Rational& lo = grid[k];
    const Rational& hi = grid[k + 1];
    candidates.insert((lo + hi) / 2);
    Rational flo = f(lo), fhi = f(hi);
    if (flo >= 0 && fhi < 0) candidates.insert(lo + flo / (flo - fhi) * (hi - lo));
  }
  // Past the last capacity f falls with slope −2.
  Rational tail = grid.back() + f(grid.back()) / 2;
  if (tail >= grid.back()) candidates.insert(tail);

  Rational best = 0;
  for (const Rational& W : candidates) {
    if (W > best && rprime_condition(iv, y, Splus, C, W)) best = W;
  }
  return best;
}

bool hall_feasible(const CmilsInstance& inst, const PeriodSet& Sstar, const FractionTable& xprime) {
  const std::vector<int> orders(Sstar.begin(), Sstar.end());
  const int k = static_cast<int>(orders.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    PeriodSet U;
    for (int p = 0; p < k; ++p) {
      if (mask >> p & 1) U.insert(orders[p]);
    }
    Rational trapped = 0;
    for (int i = 0; i < inst.N(); ++i) {
      const Item& item = inst.items[i];
      for (int s = 1; s <= item.deadline; ++s) {
        if (xprime[i][s - 1] == 0) continue;
        bool inside = true;
        for (int t : Sstar) {
          if (t >= s && t <= item.deadline && !U.count(t)) inside = false;
        }
        if (inside) trapped += xprime[i][s - 1] * item.demand;
      }
    }
    if (trapped > capacity_of(inst.C, U)) return false;
  }
  return true;
}

Rational random_fraction(std::mt19937_64& rng, int max_den) {
  const int kind = static_cast<int>(rng() % 4);
  if (kind == 0) return 0;
  if (kind == 1) return 1;
  const int den = 1 + static_cast<int>(rng() % max_den);
  return ratio(static_cast<long>(rng() % (den + 1)), den);
}

Rational random_weight(std::mt19937_64& rng) {
  const int roll = static_cast<int>(rng() % 10);
  if (roll == 0) return 0;
  if (roll == 1) return 1;
  const long den = 2 + static_cast<long>(rng() % 5);
  return ratio(1 + static_cast<long>(rng() % (den - 1)), den);
}

FractionTable random_x(std::mt19937_64& rng, const CmilsInstance& inst) {
  FractionTable x(inst.N());
  for (int i = 0; i < inst.N(); ++i) {
    const int r = inst.items[i].deadline;
    std::vector<Rational> w(r);
    Rational total = 0;
    for (auto& v : w) {
      v = static_cast<long>(rng() % 4);
      total += v;
    }
    if (total == 0) {
      w[r - 1] = 1;
      total = 1;
    }
    for (auto& v : w) v /= total;
    x[i] = w;
  }
  return x;
}

SyntheticLaminar synthetic_laminar(std::uint64_t seed, int max_T) {
  std::mt19937_64 rng(seed);
  SyntheticLaminar out;
  auto& inst = out.inst;
  inst.T = 2 + static_cast<int>(rng() % (max_T - 1));
  for (int s = 0; s < inst.T; ++s) {
    inst.C.push_back(1 + static_cast<long>(rng() % 12));
    inst.K.push_back(static_cast<long>(rng() % 20));
    out.y.push_back(random_weight(rng));
  }
  // Random binary splits, each interval kept with probability 3/4.
  std::vector<Interval> stack{{0, inst.T}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.a == 0 && iv.b == inst.T) inst.members.push_back(iv);
    else if (rng() % 4 != 0) inst.members.push_back(iv);
    if (iv.length() == 1) continue;
    const int c = iv.a + 1 + static_cast<int>(rng() % (iv.length() - 1));
    stack.push_back({iv.a, c});
    stack.push_back({c, iv.b});
  }
  PeriodSet ones;
  for (int s = 1; s <= inst.T; ++s) {
    if (out.y[s - 1] == 1) ones.insert(s);
  }
  for (const Interval& iv : inst.members) {
    const Rational sup = grid_scan_rprime(iv, out.y, ones, inst.C);
    const int pick = static_cast<int>(rng() % 6);
    Rational residual = pick == 0 ? Rational(0) : pick <= 3 ? sup : sup * ratio(static_cast<long>(1 + rng() % 4), 5);
    inst.requirement.push_back(residual + capacity_in(inst.C, ones, iv));
  }
  return out;
}

IntervalKcInstance random_interval_kc(std::uint64_t seed, int max_T) {
  std::mt19937_64 rng(seed);
  IntervalKcInstance inst;
  inst.T = 2 + static_cast<int>(rng() % (max_T - 1));
  for (int s = 0; s < inst.T; ++s) {
    inst.C.push_back(1 + static_cast<long>(rng() % 15));
    inst.K.push_back(1 + static_cast<long>(rng() % 30));
  }
  inst.R = IntervalTable<Rational>(inst.T, Rational(0));
  for (const Interval& iv : all_intervals(inst.T)) {
    if (rng() % 3 != 0) continue;
    Rational room = 0;
    for (int s = iv.a + 1; s <= iv.b; ++s) room += inst.C[s - 1];
    inst.R[iv] = room * ratio(static_cast<long>(rng() % 9), 8);
  }
  return inst;
}

Rational naive_hcost(const CmilsInstance& inst, const FractionTable& x) {
  Rational total = 0;
  for (int s = 1; s <= inst.T; ++s) {
    for (int i = 0; i < inst.N(); ++i) {
      if (s > inst.items[i].deadline) continue;
      total += inst.items[i].demand * x[i][s - 1] * inst.items[i].holding[s - 1];
    }
  }
  return total;
}

}  // namespace testsupport
