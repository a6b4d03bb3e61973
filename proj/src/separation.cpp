#include "lotforge/separation.hpp"

#include "lotforge/covering.hpp"
#include "lotforge/errors.hpp"

namespace lotforge {

IntervalTable<Rational> compute_requirements(const FractionTable& x, const CmilsInstance& inst) {
  const int T = inst.T;
  const Rational five_halves(5, 2);
  IntervalTable<Rational> R(T, Rational(0));
  // shortfall[t] accumulates items due at t for the current a.
  std::vector<Rational> shortfall(T + 1);
  for (int a = 0; a < T; ++a) {
    for (auto& v : shortfall) v = 0;
    for (int i = 0; i < inst.N(); ++i) {
      const Item& item = inst.items[i];
      if (item.deadline <= a) continue;
      Rational prefix = 0;
      for (int s = 1; s <= a; ++s) prefix += x[i][s - 1];
      Rational open = 1 - five_halves * prefix;
      if (open > 0) shortfall[item.deadline] += open * item.demand;
    }
    Rational running = 0;
    for (int b = a + 1; b <= T; ++b) {
      running += shortfall[b];
      R[{a, b}] = running;
    }
  }
  return R;
}

ScaledY scale_y(const std::vector<Rational>& y) {
  ScaledY out;
  out.yhat.reserve(y.size());
  const Rational tenth(1, 10);
  for (std::size_t s = 0; s < y.size(); ++s) {
    out.yhat.push_back(rmin(10 * y[s], Rational(1)));
    if (y[s] >= tenth) out.Splus.insert(static_cast<int>(s) + 1);
  }
  return out;
}

IntervalTable<Rational> residual_requirements(const IntervalTable<Rational>& R,
                                              const std::vector<Rational>& C,
                                              const PeriodSet& Splus) {
  const int T = R.horizon();
  IntervalTable<Rational> out(T, Rational(0));
  for (const Interval& iv : all_intervals(T)) {
    Rational rest = R[iv] - capacity_in(C, Splus, iv);
    if (rest > 0) out[iv] = rest;
  }
  return out;
}

CoveringCut designated_cut(const Interval& iv, const FractionalSolution& sol,
                           const CmilsInstance& inst, const PeriodSet& Splus) {
  CoveringCut cut;
  for (int s = iv.a + 1; s <= iv.b; ++s) {
    (Splus.count(s) ? cut.S1 : cut.S2).insert(s);
  }
  const Rational two_fifths(2, 5);
  for (int i = 0; i < inst.N(); ++i) {
    if (!iv.contains(inst.items[i].deadline)) continue;
    if (sol.prefix(i, iv.a) < two_fifths) cut.items.insert(i);
  }
  return cut;
}

SeparationResult try_round(const FractionalSolution& sol, const CmilsInstance& inst,
                           const SeparationOptions& options) {
  SeparationResult result;
  const IntervalTable<Rational> R = compute_requirements(sol.x, inst);
  ScaledY scaled = scale_y(sol.y);
  IntervalTable<Rational> Rtilde = residual_requirements(R, inst.C, scaled.Splus);

  const Rational three_fifths(3, 5);
  for (const Interval& iv : all_intervals(inst.T)) {
    if (Rtilde[iv] == 0) continue;
    const Rational cs1 = capacity_in(inst.C, scaled.Splus, iv);
    if (cs1 >= R[iv]) continue;

    CoveringCut cut = designated_cut(iv, sol, inst, scaled.Splus);
    ++result.checks;
    if (cut_lhs(cut, sol, inst) < cut_demand(cut, inst)) {
      result.cuts.push_back(std::move(cut));
      if (!options.all_violated) return result;
      continue;
    }

    const Rational& residual = Rtilde[iv];
    LOTFORGE_ENSURE(covering_disjunction(iv, sol.y, scaled.Splus, inst.C, residual, 1, three_fifths),
                    "covering row holds but transfer bound fails on " + to_string(iv));
    LOTFORGE_ENSURE(covering_disjunction(iv, scaled.yhat, scaled.Splus, inst.C, residual, 10, 6),
                    "scaled hypothesis fails on " + to_string(iv));
  }
  if (!result.cuts.empty()) return result;

  result.ready = RoundingPayload{std::move(scaled.yhat), std::move(scaled.Splus), R, std::move(Rtilde)};
  return result;
}

void write_requirements_csv(std::ostream& out, const IntervalTable<Rational>& R,
                            const IntervalTable<Rational>& Rtilde) {
  out << "a,b,R,Rtilde\n";
  for (const Interval& iv : all_intervals(R.horizon())) {
    out << iv.a << "," << iv.b << "," << to_string(R[iv]) << "," << to_string(Rtilde[iv]) << "\n";
  }
}

}  // namespace lotforge
