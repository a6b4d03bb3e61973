#pragma once

// Test-side reference computations, written independently of the library's
// algorithms (brute force or direct summation).

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lotforge/instance.hpp"
#include "lotforge/interval_kc.hpp"
#include "lotforge/laminar_kc.hpp"
#include "lotforge/lp.hpp"

namespace testsupport {

using lotforge::Interval;
using lotforge::PeriodSet;
using lotforge::Rational;

/// Optimum by enumerating every choice of variable status (at lo, at hi, or
/// free) and a matching set of tight rows. Requires finite bounds.
struct EnumeratedOptimum {
  bool feasible = false;
  Rational value;
  std::uint64_t systems = 0;
};
EnumeratedOptimum enumerate_vertices(const lotforge::LinearProgram& lp);

/// Random LP with 1..max_vars boxed variables and 0..max_rows rows of mixed
/// relations, small integer coefficients.
lotforge::LinearProgram random_lp(std::mt19937_64& rng, int max_vars, int max_rows);

/// Sup of W >= 0 meeting either covering condition, by evaluating both
/// conditions on 0, every capacity, segment midpoints and the per-segment
/// roots of the directly evaluated cover function.
Rational grid_scan_rprime(const Interval& iv, const std::vector<Rational>& y, const PeriodSet& Splus,
                          const std::vector<Rational>& C);

/// Direct evaluation of the two covering conditions at W.
bool rprime_condition(const Interval& iv, const std::vector<Rational>& y, const PeriodSet& Splus,
                      const std::vector<Rational>& C, const Rational& W);

/// Hall's condition over every subset of order periods: supply whose allowed
/// periods all lie inside U never exceeds C(U).
bool hall_feasible(const lotforge::CmilsInstance& inst, const PeriodSet& Sstar,
                   const lotforge::FractionTable& xprime);

/// A fraction in [0, 1] with small denominator; 0 and 1 appear often.
Rational random_fraction(std::mt19937_64& rng, int max_den = 6);

/// Mostly strictly fractional: 0 and 1 each with probability 1/10.
Rational random_weight(std::mt19937_64& rng);

/// Random fractional assignment satisfying the coverage equalities.
lotforge::FractionTable random_x(std::mt19937_64& rng, const lotforge::CmilsInstance& inst);

/// Random laminar instance with the entry hypothesis built in. Requirements
/// are chosen from [0, sup] per member using grid_scan_rprime.
struct SyntheticLaminar {
  lotforge::LaminarKcInstance inst;
  std::vector<Rational> y;
};
SyntheticLaminar synthetic_laminar(std::uint64_t seed, int max_T = 10);

/// Random interval covering instance with every requirement coverable.
lotforge::IntervalKcInstance random_interval_kc(std::uint64_t seed, int max_T = 10);

/// Σ_i d_i Σ_s x_{s,i} h_i(s) via a plain loop over a period-major layout.
Rational naive_hcost(const lotforge::CmilsInstance& inst, const lotforge::FractionTable& x);

}  // namespace testsupport
