#include "lotforge/instance.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lotforge/errors.hpp"

namespace lotforge {

Rational CmilsInstance::total_demand() const {
  Rational total = 0;
  for (const auto& it : items) total += it.demand;
  return total;
}

Rational FractionalSolution::x_at(int i, int s) const {
  const auto& row = x.at(i);
  if (s < 1 || s > static_cast<int>(row.size())) return 0;
  return row[s - 1];
}

Rational FractionalSolution::prefix(int i, int t) const {
  const auto& row = x.at(i);
  Rational total = 0;
  const int upto = std::min<int>(t, static_cast<int>(row.size()));
  for (int s = 1; s <= upto; ++s) total += row[s - 1];
  return total;
}

// ---------------------------------------------------------------------------
// Validation and costs

namespace {

std::string at_item(int i) { return "item " + std::to_string(i + 1); }

std::string at_item_period(int i, int s) {
  return "item " + std::to_string(i + 1) + ", period " + std::to_string(s);
}

}  // namespace

std::vector<Violation> validate(const CmilsInstance& inst) {
  std::vector<Violation> out;
  if (inst.T < 1) out.push_back({"T >= 1", "T=" + std::to_string(inst.T)});
  if (inst.N() < 1) out.push_back({"N >= 1", "N=" + std::to_string(inst.N())});
  if (static_cast<int>(inst.K.size()) != inst.T) out.push_back({"|K| = T", "K"});
  if (static_cast<int>(inst.C.size()) != inst.T) out.push_back({"|C| = T", "C"});
  for (std::size_t s = 0; s < inst.K.size(); ++s) {
    if (inst.K[s] < 0) out.push_back({"K_s >= 0", "period " + std::to_string(s + 1)});
  }
  for (std::size_t s = 0; s < inst.C.size(); ++s) {
    if (inst.C[s] <= 0) out.push_back({"C_s > 0", "period " + std::to_string(s + 1)});
  }
  for (int i = 0; i < inst.N(); ++i) {
    const Item& it = inst.items[i];
    if (it.demand <= 0) out.push_back({"d_i > 0", at_item(i)});
    if (it.deadline < 1 || it.deadline > inst.T) {
      out.push_back({"r_i in [1,T]", at_item(i)});
      continue;
    }
    if (static_cast<int>(it.holding.size()) != it.deadline) {
      out.push_back({"|h_i| = r_i", at_item(i)});
      continue;
    }
    for (int s = 1; s < it.deadline; ++s) {
      if (it.h(s) < it.h(s + 1)) out.push_back({"h non-increasing", at_item_period(i, s)});
    }
    if (it.h(it.deadline) != 0) out.push_back({"h_i(r_i)=0", at_item_period(i, it.deadline)});
  }
  return out;
}

FeasibilityReport check_feasible(const CmilsInstance& inst, const OrderSchedule& sched) {
  FeasibilityReport rep;
  auto fail = [&rep](std::string rule, std::string where) {
    rep.feasible = false;
    rep.violations.push_back({std::move(rule), std::move(where)});
  };
  for (int s : sched.orders) {
    if (s < 1 || s > inst.T) fail("order period in [1,T]", "period " + std::to_string(s));
  }
  if (static_cast<int>(sched.quantity.size()) != inst.N()) {
    fail("one assignment row per item", "assignment");
    return rep;
  }
  std::vector<Rational> load(inst.T, 0);
  for (int i = 0; i < inst.N(); ++i) {
    const auto& row = sched.quantity[i];
    if (static_cast<int>(row.size()) != inst.T) {
      fail("one assignment entry per period", at_item(i));
      continue;
    }
    Rational delivered = 0;
    for (int s = 1; s <= inst.T; ++s) {
      const Rational& q = row[s - 1];
      if (q < 0) fail("quantity >= 0", at_item_period(i, s));
      if (q == 0) continue;
      if (s > inst.items[i].deadline) fail("deadline", at_item_period(i, s));
      if (!sched.orders.count(s)) fail("order placed", at_item_period(i, s));
      delivered += q;
      load[s - 1] += q;
    }
    if (delivered != inst.items[i].demand) fail("demand satisfied", at_item(i));
  }
  for (int s = 1; s <= inst.T; ++s) {
    if (load[s - 1] > inst.capacity(s)) fail("capacity", "period " + std::to_string(s));
  }
  return rep;
}

namespace {

CostBreakdown raw_cost(const CmilsInstance& inst, const OrderSchedule& sched) {
  CostBreakdown c;
  c.ordering = cost_of(inst.K, sched.orders);
  c.holding = 0;
  for (int i = 0; i < inst.N(); ++i) {
    const Item& it = inst.items[i];
    for (int s = 1; s <= it.deadline; ++s) c.holding += sched.quantity[i][s - 1] * it.h(s);
  }
  c.total = c.ordering + c.holding;
  return c;
}

}  // namespace

CostBreakdown cost(const CmilsInstance& inst, const OrderSchedule& sched) {
  const auto rep = check_feasible(inst, sched);
  if (!rep.feasible) {
    throw std::invalid_argument("cost of infeasible schedule: " + rep.violations.front().rule +
                                " at " + rep.violations.front().where);
  }
  return raw_cost(inst, sched);
}

Rational hcost(const CmilsInstance& inst, const FractionTable& x) {
  Rational total = 0;
  for (int i = 0; i < inst.N(); ++i) {
    const Item& it = inst.items[i];
    const int upto = std::min<int>(it.deadline, static_cast<int>(x.at(i).size()));
    Rational item = 0;
    for (int s = 1; s <= upto; ++s) item += x[i][s - 1] * it.h(s);
    total += it.demand * item;
  }
  return total;
}

OrderSchedule make_schedule(const CmilsInstance& inst, const PeriodSet& orders,
                            const FractionTable& xstar) {
  OrderSchedule sched;
  sched.orders = orders;
  sched.quantity.assign(inst.N(), std::vector<Rational>(inst.T, 0));
  for (int i = 0; i < inst.N(); ++i) {
    const auto& row = xstar.at(i);
    for (std::size_t s = 0; s < row.size() && s < static_cast<std::size_t>(inst.T); ++s) {
      sched.quantity[i][s] = row[s] * inst.items[i].demand;
    }
  }
  sched.costs = raw_cost(inst, sched);
  return sched;
}

FractionTable fractions_of(const CmilsInstance& inst, const OrderSchedule& sched) {
  FractionTable x(inst.N());
  for (int i = 0; i < inst.N(); ++i) {
    const Item& it = inst.items[i];
    x[i].assign(it.deadline, 0);
    for (int s = 1; s <= it.deadline; ++s) x[i][s - 1] = sched.quantity.at(i).at(s - 1) / it.demand;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

class SeededDraw {
 public:
  explicit SeededDraw(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi]; modulo mapping keeps the stream identical across
  // standard libraries, unlike std::uniform_int_distribution.
  int between(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

void require_range(int lo, int hi, const char* name) {
  if (lo > hi) throw std::invalid_argument(std::string("empty range for ") + name);
}

}  // namespace

CmilsInstance gen_random(std::uint64_t seed, const GeneratorParams& p) {
  if (p.T < 1) throw std::invalid_argument("T must be >= 1");
  if (p.N < 1) throw std::invalid_argument("N must be >= 1");
  require_range(p.capacity_lo, p.capacity_hi, "capacity");
  require_range(p.order_cost_lo, p.order_cost_hi, "ordering cost");
  require_range(p.demand_lo, p.demand_hi, "demand");
  require_range(p.holding_rate_lo, p.holding_rate_hi, "holding rate");
  if (p.capacity_lo < 1) throw std::invalid_argument("capacities must be positive");
  if (p.demand_lo < 1) throw std::invalid_argument("demands must be positive");
  if (p.order_cost_lo < 0 || p.holding_rate_lo < 0) {
    throw std::invalid_argument("costs must be non-negative");
  }
  if (p.slack_factor < 1) throw std::invalid_argument("slack_factor must be >= 1");

  SeededDraw draw(seed);
  CmilsInstance inst;
  inst.T = p.T;
  for (int s = 0; s < p.T; ++s) {
    inst.C.emplace_back(draw.between(p.capacity_lo, p.capacity_hi));
    inst.K.emplace_back(draw.between(p.order_cost_lo, p.order_cost_hi));
  }
  for (int i = 0; i < p.N; ++i) {
    Item it;
    it.deadline = draw.between(1, p.T);
    it.demand = draw.between(p.demand_lo, p.demand_hi);
    it.holding.assign(it.deadline, 0);
    for (int s = it.deadline - 1; s >= 1; --s) {
      it.holding[s - 1] = it.holding[s] + draw.between(p.holding_rate_lo, p.holding_rate_hi);
    }
    inst.items.push_back(std::move(it));
  }

  Rational prefix_cap = 0;
  for (int t = 1; t <= p.T; ++t) {
    Rational due = 0;
    for (const auto& it : inst.items) {
      if (it.deadline <= t) due += it.demand;
    }
    prefix_cap += inst.C[t - 1];
    const Rational need = p.slack_factor * due - prefix_cap;
    if (need > 0) {
      inst.C[t - 1] += need;
      prefix_cap += need;
    }
  }
  return inst;
}

CmilsInstance gen_kc_gap(const Rational& R) {
  if (R < 2) throw std::invalid_argument("gap instance needs R >= 2");
  CmilsInstance inst;
  inst.T = 2;
  inst.C = {R - 1, R};
  inst.K = {0, 1};
  inst.items.push_back(Item{R, 2, {0, 0}});
  return inst;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name, const std::string& ctx) {
  if (!obj.is_object()) throw ParseError(ctx + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(ctx + ": missing field \"" + name + "\"");
  return *it;
}

Rational rational_field(const json& v, const std::string& ctx) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(ctx + ": " + e.what());
  }
  throw ParseError(ctx + ": expected a rational string \"p/q\"");
}

int int_field(const json& v, const std::string& ctx) {
  if (!v.is_number_integer()) throw ParseError(ctx + ": expected an integer");
  return v.get<int>();
}

std::vector<Rational> rational_array(const json& v, const std::string& ctx) {
  if (!v.is_array()) throw ParseError(ctx + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(rational_field(v[k], ctx + "[" + std::to_string(k) + "]"));
  }
  return out;
}

json rational_array_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace

json to_json(const CmilsInstance& inst) {
  json j;
  j["T"] = inst.T;
  j["N"] = inst.N();
  j["K"] = rational_array_json(inst.K);
  j["C"] = rational_array_json(inst.C);
  json items = json::array();
  for (const auto& it : inst.items) {
    items.push_back({{"d", to_string(it.demand)}, {"r", it.deadline}, {"h", rational_array_json(it.holding)}});
  }
  j["items"] = items;
  return j;
}

CmilsInstance instance_from_json(const json& j) {
  CmilsInstance inst;
  inst.T = int_field(field(j, "T", "instance"), "T");
  const int N = int_field(field(j, "N", "instance"), "N");
  inst.K = rational_array(field(j, "K", "instance"), "K");
  inst.C = rational_array(field(j, "C", "instance"), "C");
  const json& items = field(j, "items", "instance");
  if (!items.is_array()) throw ParseError("items: expected an array");
  if (static_cast<int>(items.size()) != N) throw ParseError("items: expected N entries");
  if (static_cast<int>(inst.K.size()) != inst.T) throw ParseError("K: expected T entries");
  if (static_cast<int>(inst.C.size()) != inst.T) throw ParseError("C: expected T entries");
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string ctx = "items[" + std::to_string(k) + "]";
    Item it;
    it.demand = rational_field(field(items[k], "d", ctx), ctx + ".d");
    it.deadline = int_field(field(items[k], "r", ctx), ctx + ".r");
    it.holding = rational_array(field(items[k], "h", ctx), ctx + ".h");
    if (static_cast<int>(it.holding.size()) != it.deadline) {
      throw ParseError(ctx + ".h: expected r entries");
    }
    inst.items.push_back(std::move(it));
  }
  return inst;
}

json to_json(const OrderSchedule& sched) {
  json j;
  j["orders"] = json::array();
  for (int s : sched.orders) j["orders"].push_back(s);
  json rows = json::array();
  for (std::size_t i = 0; i < sched.quantity.size(); ++i) {
    for (std::size_t s = 0; s < sched.quantity[i].size(); ++s) {
      const Rational& q = sched.quantity[i][s];
      if (q == 0) continue;
      rows.push_back({{"s", static_cast<int>(s) + 1}, {"i", static_cast<int>(i) + 1}, {"qty", to_string(q)}});
    }
  }
  j["assignment"] = rows;
  j["costs"] = {{"ordering", to_string(sched.costs.ordering)},
                {"holding", to_string(sched.costs.holding)},
                {"total", to_string(sched.costs.total)}};
  return j;
}

OrderSchedule schedule_from_json(const json& j, const CmilsInstance& inst) {
  OrderSchedule sched;
  const json& orders = field(j, "orders", "schedule");
  if (!orders.is_array()) throw ParseError("orders: expected an array");
  for (const auto& s : orders) sched.orders.insert(int_field(s, "orders[]"));
  sched.quantity.assign(inst.N(), std::vector<Rational>(inst.T, 0));
  const json& rows = field(j, "assignment", "schedule");
  if (!rows.is_array()) throw ParseError("assignment: expected an array");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string ctx = "assignment[" + std::to_string(k) + "]";
    const int s = int_field(field(rows[k], "s", ctx), ctx + ".s");
    const int i = int_field(field(rows[k], "i", ctx), ctx + ".i");
    if (s < 1 || s > inst.T) throw ParseError(ctx + ".s: out of range");
    if (i < 1 || i > inst.N()) throw ParseError(ctx + ".i: out of range");
    sched.quantity[i - 1][s - 1] += rational_field(field(rows[k], "qty", ctx), ctx + ".qty");
  }
  const json& costs = field(j, "costs", "schedule");
  sched.costs.ordering = rational_field(field(costs, "ordering", "costs"), "costs.ordering");
  sched.costs.holding = rational_field(field(costs, "holding", "costs"), "costs.holding");
  sched.costs.total = rational_field(field(costs, "total", "costs"), "costs.total");
  return sched;
}

CmilsInstance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

void save_instance(const CmilsInstance& inst, const std::filesystem::path& path) {
  write_json_file(to_json(inst), path);
}

OrderSchedule load_schedule(const std::filesystem::path& path, const CmilsInstance& inst) {
  return schedule_from_json(read_json_file(path), inst);
}

void save_schedule(const OrderSchedule& sched, const std::filesystem::path& path) {
  write_json_file(to_json(sched), path);
}

}  // namespace lotforge
