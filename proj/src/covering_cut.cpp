#include "lotforge/covering_cut.hpp"

#include <stdexcept>

namespace lotforge {

std::string CoveringCut::key() const {
  std::string out = to_string(S1) + "|" + to_string(S2) + "|{";
  bool first = true;
  for (int i : items) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Rational cut_demand(const CoveringCut& cut, const CmilsInstance& inst) {
  Rational total = 0;
  for (int i : cut.items) total += inst.items.at(i).demand;
  return total;
}

void check_cut(const CoveringCut& cut, const CmilsInstance& inst) {
  for (int s : cut.S1) {
    if (s < 1 || s > inst.T) throw std::invalid_argument("cut period out of range");
    if (cut.S2.count(s)) throw std::invalid_argument("cut has S1 and S2 overlapping");
  }
  for (int s : cut.S2) {
    if (s < 1 || s > inst.T) throw std::invalid_argument("cut period out of range");
  }
  for (int i : cut.items) {
    if (i < 0 || i >= inst.N()) throw std::invalid_argument("cut item out of range");
  }
  if (capacity_of(inst.C, cut.S1) >= cut_demand(cut, inst)) {
    throw std::invalid_argument("cut has C(S1) >= d(I)");
  }
}

Rational cut_lhs(const CoveringCut& cut, const FractionalSolution& sol, const CmilsInstance& inst) {
  check_cut(cut, inst);
  const Rational cs1 = capacity_of(inst.C, cut.S1);
  const Rational residual = cut_demand(cut, inst) - cs1;
  Rational lhs = cs1;
  for (int s : cut.S2) lhs += rmin(inst.capacity(s), residual) * sol.y.at(s - 1);
  for (int i : cut.items) {
    const Item& item = inst.items[i];
    Rational mass = 0;
    for (int s = 1; s <= item.deadline; ++s) {
      if (cut.S1.count(s) || cut.S2.count(s)) continue;
      mass += sol.x_at(i, s);
    }
    lhs += item.demand * mass;
  }
  return lhs;
}

std::string to_string(const CoveringCut& cut) {
  std::string items = "{";
  bool first = true;
  for (int i : cut.items) {
    if (!first) items += ",";
    items += std::to_string(i + 1);
    first = false;
  }
  items += "}";
  return "S1=" + to_string(cut.S1) + " S2=" + to_string(cut.S2) + " I=" + items;
}

}  // namespace lotforge
