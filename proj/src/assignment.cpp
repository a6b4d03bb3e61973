#include "lotforge/assignment.hpp"

#include <map>
#include <utility>

#include "lotforge/errors.hpp"
#include "lotforge/flow.hpp"

namespace lotforge {

FractionTable build_xprime(const FractionTable& x, const CmilsInstance& inst) {
  const Rational five_halves(5, 2);
  FractionTable out(inst.N());
  for (int i = 0; i < inst.N(); ++i) {
    Rational placed = 0;
    Rational prefix = 0;
    for (int s = 1; s <= inst.items[i].deadline; ++s) {
      Rational v = rmin(five_halves * x[i][s - 1], 1 - placed);
      placed += v;
      prefix += x[i][s - 1];
      LOTFORGE_ENSURE(placed == rmin(five_halves * prefix, Rational(1)), "x' prefix identity fails");
      out[i].push_back(std::move(v));
    }
  }
  return out;
}

std::optional<FractionTable> solve_assignment(const CmilsInstance& inst, const PeriodSet& Sstar,
                                              const FractionTable& xprime) {
  FlowGraph g(2);
  const int source = 0, sink = 1;
  std::map<int, int> order_node;
  for (int s : Sstar) {
    if (s < 1 || s > inst.T) throw std::invalid_argument("order period out of range");
    order_node[s] = g.add_node();
    g.add_edge(order_node[s], sink, inst.capacity(s));
  }

  struct Link {
    int item, period, edge;
  };
  std::vector<Link> links;
  Rational supply = 0;
  for (int i = 0; i < inst.N(); ++i) {
    const Item& item = inst.items[i];
    for (int s = 1; s <= item.deadline; ++s) {
      const Rational amount = xprime[i][s - 1] * item.demand;
      if (amount == 0) continue;
      supply += amount;
      const int u = g.add_node();
      g.add_edge(source, u, amount);
      for (auto it = Sstar.lower_bound(s); it != Sstar.end() && *it <= item.deadline; ++it) {
        links.push_back({i, *it, g.add_edge(u, order_node[*it], amount)});
      }
    }
  }
  if (g.max_flow(source, sink) < supply) return std::nullopt;

  FractionTable xstar(inst.N());
  for (int i = 0; i < inst.N(); ++i) xstar[i].assign(inst.items[i].deadline, Rational(0));
  for (const Link& link : links) {
    xstar[link.item][link.period - 1] += g.flow(link.edge) / inst.items[link.item].demand;
  }
  return xstar;
}

bool hcost_bound_check(const CmilsInstance& inst, const FractionTable& x, const FractionTable& xstar) {
  return hcost(inst, xstar) <= Rational(5, 2) * hcost(inst, x);
}

bool prefix_dominated(const CmilsInstance& inst, const FractionTable& xstar, const FractionTable& xprime) {
  for (int i = 0; i < inst.N(); ++i) {
    Rational lhs = 0, rhs = 0;
    for (int t = 1; t <= inst.items[i].deadline; ++t) {
      lhs += xstar[i][t - 1];
      rhs += xprime[i][t - 1];
      if (lhs > rhs) return false;
    }
  }
  return true;
}

bool interval_requirements_met(const CmilsInstance& inst, const PeriodSet& Sstar,
                               const FractionTable& xprime) {
  for (const Interval& iv : all_intervals(inst.T)) {
    Rational need = 0;
    for (int i = 0; i < inst.N(); ++i) {
      const Item& item = inst.items[i];
      if (!iv.contains(item.deadline)) continue;
      Rational prefix = 0;
      for (int s = 1; s <= iv.a; ++s) prefix += xprime[i][s - 1];
      need += (1 - prefix) * item.demand;
    }
    if (capacity_in(inst.C, Sstar, iv) < need) return false;
  }
  return true;
}

}  // namespace lotforge
