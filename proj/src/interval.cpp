#include "lotforge/interval.hpp"

#include "lotforge/covering.hpp"

namespace lotforge {

std::string to_string(const Interval& iv) {
  return "(" + std::to_string(iv.a) + "," + std::to_string(iv.b) + "]";
}

std::vector<Interval> all_intervals(int T) {
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(T) * (T + 1) / 2);
  for (int a = 0; a < T; ++a) {
    for (int b = a + 1; b <= T; ++b) out.push_back({a, b});
  }
  return out;
}

Rational capacity_in(const std::vector<Rational>& C, const PeriodSet& S, const Interval& iv) {
  Rational total = 0;
  for (auto it = S.upper_bound(iv.a); it != S.end() && *it <= iv.b; ++it) total += C.at(*it - 1);
  return total;
}

Rational capacity_of(const std::vector<Rational>& C, const PeriodSet& S) {
  Rational total = 0;
  for (int s : S) total += C.at(s - 1);
  return total;
}

Rational cost_of(const std::vector<Rational>& K, const PeriodSet& S) {
  Rational total = 0;
  for (int s : S) total += K.at(s - 1);
  return total;
}

std::string to_string(const PeriodSet& S) {
  std::string out = "{";
  for (int s : S) {
    if (out.size() > 1) out += ",";
    out += std::to_string(s);
  }
  return out + "}";
}

Rational effective_cover(const Interval& iv, const std::vector<Rational>& y,
                         const PeriodSet& excluded, const std::vector<Rational>& C,
                         const Rational& cap) {
  Rational total = 0;
  for (int s = iv.a + 1; s <= iv.b; ++s) {
    if (excluded.count(s)) continue;
    const Rational& c = C[s - 1];
    total += (c < cap ? c : cap) * y[s - 1];
  }
  return total;
}

Rational large_knapsack_mass(const Interval& iv, const std::vector<Rational>& y,
                             const PeriodSet& excluded, const std::vector<Rational>& C,
                             const Rational& threshold) {
  Rational total = 0;
  for (int s = iv.a + 1; s <= iv.b; ++s) {
    if (excluded.count(s) || C[s - 1] < threshold) continue;
    total += y[s - 1];
  }
  return total;
}

bool covering_disjunction(const Interval& iv, const std::vector<Rational>& y,
                          const PeriodSet& excluded, const std::vector<Rational>& C,
                          const Rational& residual, const Rational& cover_factor,
                          const Rational& mass_floor) {
  if (effective_cover(iv, y, excluded, C, residual) >= cover_factor * residual) return true;
  return large_knapsack_mass(iv, y, excluded, C, residual) >= mass_floor;
}

}  // namespace lotforge
