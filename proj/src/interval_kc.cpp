#include "lotforge/interval_kc.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <optional>
#include <string>

#include "lotforge/covering.hpp"
#include "lotforge/errors.hpp"

namespace lotforge {

int LaminarFamily::find(const Interval& iv) const {
  auto it = std::find(members.begin(), members.end(), iv);
  return it == members.end() ? -1 : static_cast<int>(it - members.begin());
}

Rational compute_rprime(const Interval& iv, const std::vector<Rational>& y, const PeriodSet& Splus,
                        const std::vector<Rational>& C) {
  std::vector<int> free;
  for (int s = iv.a + 1; s <= iv.b; ++s) {
    if (!Splus.count(s)) free.push_back(s);
  }
  std::sort(free.begin(), free.end(), [&](int p, int q) { return C[p - 1] < C[q - 1]; });

  // Largest root of f(W) = Σ min{C_s, W} y_s − 2W, concave with f(0) = 0.
  Rational mass = 0;
  for (int s : free) mass += y[s - 1];
  Rational W = 0, f = 0;
  std::optional<Rational> w1;
  for (int s : free) {
    const Rational& next = C[s - 1];
    Rational slope = mass - 2;
    if (slope < 0) {
      Rational root = W + f / (-slope);
      if (root <= next) {
        w1 = std::move(root);
        break;
      }
    }
    f += slope * (next - W);
    W = next;
    mass -= y[s - 1];
  }
  if (!w1) w1 = W + f / 2;

  // Largest capacity whose upper tail carries y-mass at least one.
  Rational w2 = 0;
  Rational tail = 0;
  for (auto it = free.rbegin(); it != free.rend(); ++it) {
    tail += y[*it - 1];
    auto next = std::next(it);
    // Only evaluate once every knapsack of equal capacity is in the tail.
    if (next != free.rend() && C[*next - 1] == C[*it - 1]) continue;
    if (tail >= 1) {
      w2 = C[*it - 1];
      break;
    }
  }
  return rmax(*w1, w2);
}

LaminarFamily construct_laminar_family(const std::vector<Rational>& y, const PeriodSet& Splus,
                                       const std::vector<Rational>& C, int T) {
  IntervalTable<Rational> memo(T, Rational(0));
  for (const Interval& iv : all_intervals(T)) memo[iv] = compute_rprime(iv, y, Splus, C);

  LaminarFamily family;
  std::function<int(Interval, int)> build = [&](Interval iv, int parent) {
    const int id = family.size();
    family.members.push_back(iv);
    family.parent.push_back(parent);
    family.children.push_back({-1, -1});
    family.rprime.push_back(memo[iv]);
    if (iv.length() == 1) return id;
    int best_c = iv.a + 1;
    Rational best = rmin(memo[{iv.a, best_c}], memo[{best_c, iv.b}]);
    for (int c = iv.a + 2; c < iv.b; ++c) {
      Rational score = rmin(memo[{iv.a, c}], memo[{c, iv.b}]);
      if (score > best) {
        best = std::move(score);
        best_c = c;
      }
    }
    const int left = build({iv.a, best_c}, id);
    const int right = build({best_c, iv.b}, id);
    family.children[id] = {left, right};
    return id;
  };
  build({0, T}, -1);
  return family;
}

bool has_full_binary_shape(const LaminarFamily& family, int T) {
  if (family.size() != 2 * T - 1 || family.members.empty()) return false;
  if (family.members.front() != Interval{0, T} || family.parent.front() != -1) return false;
  if (!is_laminar(family.members)) return false;
  for (int m = 0; m < family.size(); ++m) {
    const Interval& iv = family.members[m];
    const auto [l, r] = family.children[m];
    if (l < 0 && r < 0) {
      if (iv.length() != 1) return false;
      continue;
    }
    if (l < 0 || r < 0) return false;
    const Interval& left = family.members[l];
    const Interval& right = family.members[r];
    if (left.a != iv.a || right.b != iv.b || left.b != right.a) return false;
    if (family.parent[l] != m || family.parent[r] != m) return false;
  }
  return true;
}

bool check_family_bounds(const LaminarFamily& family, const IntervalTable<Rational>& Rtilde) {
  for (const Interval& iv : all_intervals(Rtilde.horizon())) {
    if (Rtilde[iv] == 0) continue;
    bool found = false;
    for (int m = 0; m < family.size() && !found; ++m) {
      found = iv.contains(family.members[m]) && family.rprime[m] >= Rtilde[iv];
    }
    if (!found) return false;
  }
  return true;
}

bool covers_all(const IntervalKcInstance& inst, const PeriodSet& S) {
  for (const Interval& iv : all_intervals(inst.T)) {
    if (capacity_in(inst.C, S, iv) < inst.R[iv]) return false;
  }
  return true;
}

IntervalKcSolution solve_interval_kc(const IntervalKcInstance& inst, const std::vector<Rational>& yhat,
                                     const PeriodSet& Splus, const IntervalTable<Rational>& Rtilde,
                                     const LaminarKcOptions& options) {
  LOTFORGE_ENSURE(ones_of(yhat) == Splus, "S+ must be exactly the periods with yhat = 1");
  for (const Interval& iv : all_intervals(inst.T)) {
    if (Rtilde[iv] == 0) continue;
    LOTFORGE_ENSURE(covering_disjunction(iv, yhat, Splus, inst.C, Rtilde[iv], 10, 6),
                    "scaled hypothesis fails on " + to_string(iv));
  }

  IntervalKcSolution out;
  out.family = construct_laminar_family(yhat, Splus, inst.C, inst.T);
  out.laminar = LaminarKcInstance{inst.T, inst.C, inst.K, out.family.members, {}};
  for (int m = 0; m < out.family.size(); ++m) {
    out.laminar.requirement.push_back(out.family.rprime[m] +
                                      capacity_in(inst.C, Splus, out.family.members[m]));
  }
  LOTFORGE_ENSURE(laminar_hypothesis_holds(out.laminar, yhat), "laminar hypothesis fails on the built family");

  out.rounding = solve_laminar_kc(out.laminar, yhat, options);
  out.selected = out.rounding.selected;

  LOTFORGE_ENSURE(covers_all(inst, out.selected), "selection misses an interval requirement");
  Rational budget = 0;
  for (int s = 0; s < inst.T; ++s) budget += yhat[s] * inst.K[s];
  LOTFORGE_ENSURE(cost_of(inst.K, out.selected) <= budget, "selection costs more than the scaled y");
  return out;
}

void write_laminar_tree(std::ostream& out, const LaminarFamily& family) {
  std::function<void(int, int)> walk = [&](int m, int depth) {
    out << std::string(2 * depth, ' ') << to_string(family.members[m]) << " R~'=" << to_string(family.rprime[m])
        << "\n";
    for (int child : family.children[m]) {
      if (child >= 0) walk(child, depth + 1);
    }
  };
  if (family.size() > 0) walk(0, 0);
}

}  // namespace lotforge
