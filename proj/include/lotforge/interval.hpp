#pragma once

// Integer period intervals (a, b] over [T], and a dense table keyed by them.

#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lotforge/rational.hpp"

namespace lotforge {

/// Half-open integer interval (a, b] = {a+1, ..., b}. Periods are 1-based.
struct Interval {
  int a = 0;
  int b = 0;

  bool contains(int s) const { return a < s && s <= b; }
  bool contains(const Interval& other) const { return a <= other.a && other.b <= b; }
  bool disjoint(const Interval& other) const { return b <= other.a || other.b <= a; }
  int length() const { return b - a; }

  auto operator<=>(const Interval&) const = default;
};

std::string to_string(const Interval& iv);

/// All intervals over [T], ordered by a ascending, then b ascending.
std::vector<Interval> all_intervals(int T);

/// Dense map from every interval (a, b], 0 <= a < b <= T, to a value.
template <typename V>
class IntervalTable {
 public:
  IntervalTable() = default;
  explicit IntervalTable(int T, const V& init = V{})
      : T_(T), data_(static_cast<std::size_t>(T + 1) * (T + 1), init) {}

  int horizon() const { return T_; }

  V& operator[](const Interval& iv) { return data_[index(iv)]; }
  const V& operator[](const Interval& iv) const { return data_[index(iv)]; }

 private:
  std::size_t index(const Interval& iv) const {
    if (iv.a < 0 || iv.a >= iv.b || iv.b > T_) {
      throw std::out_of_range("interval " + to_string(iv) + " outside horizon");
    }
    return static_cast<std::size_t>(iv.a) * (T_ + 1) + iv.b;
  }

  int T_ = 0;
  std::vector<V> data_;
};

using PeriodSet = std::set<int>;

/// C(S ∩ (a, b]) for a 1-based capacity vector.
Rational capacity_in(const std::vector<Rational>& C, const PeriodSet& S, const Interval& iv);
Rational capacity_of(const std::vector<Rational>& C, const PeriodSet& S);
Rational cost_of(const std::vector<Rational>& K, const PeriodSet& S);

std::string to_string(const PeriodSet& S);

}  // namespace lotforge
