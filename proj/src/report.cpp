#include "lotforge/report.hpp"

namespace lotforge {

RunReport make_report(std::string instance_id, const PipelineResult& result,
                      const std::optional<Rational>& oracle_cost) {
  RunReport r;
  r.instance_id = std::move(instance_id);
  r.lp_value = result.certificate.lp_value;
  r.alg_cost = result.schedule.costs;
  r.oracle_cost = oracle_cost;
  if (r.lp_value > 0) r.ratio_vs_lp = Rational(r.alg_cost.total / r.lp_value);
  if (oracle_cost && *oracle_cost > 0) r.ratio_vs_opt = Rational(r.alg_cost.total / *oracle_cost);
  r.rounds = result.certificate.rounds;
  r.cuts = result.certificate.num_cuts;
  return r;
}

namespace {

nlohmann::json exact(const std::optional<Rational>& q) {
  return q ? nlohmann::json(to_string(*q)) : nlohmann::json(nullptr);
}

nlohmann::json decimal(const std::optional<Rational>& q) {
  return q ? nlohmann::json(to_decimal(*q)) : nlohmann::json(nullptr);
}

std::string cell(const std::optional<Rational>& q) { return q ? to_string(*q) : ""; }
std::string dcell(const std::optional<Rational>& q) { return q ? to_decimal(*q) : ""; }

}  // namespace

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["instance_id"] = r.instance_id;
  j["lp_value"] = {{"exact", to_string(r.lp_value)}, {"decimal", to_decimal(r.lp_value)}};
  j["alg_cost"] = {
      {"ordering", {{"exact", to_string(r.alg_cost.ordering)}, {"decimal", to_decimal(r.alg_cost.ordering)}}},
      {"holding", {{"exact", to_string(r.alg_cost.holding)}, {"decimal", to_decimal(r.alg_cost.holding)}}},
      {"total", {{"exact", to_string(r.alg_cost.total)}, {"decimal", to_decimal(r.alg_cost.total)}}}};
  j["oracle_cost"] = {{"exact", exact(r.oracle_cost)}, {"decimal", decimal(r.oracle_cost)}};
  j["ratio_vs_lp"] = {{"exact", exact(r.ratio_vs_lp)}, {"decimal", decimal(r.ratio_vs_lp)}};
  j["ratio_vs_opt"] = {{"exact", exact(r.ratio_vs_opt)}, {"decimal", decimal(r.ratio_vs_opt)}};
  j["rounds"] = r.rounds;
  j["cuts"] = r.cuts;
  j["wall_time_ms"] = r.wall_time_ms ? nlohmann::json(*r.wall_time_ms) : nlohmann::json(nullptr);
  return j;
}

void write_csv_header(std::ostream& out) {
  out << "instance_id,lp_value,lp_value_dec,ordering,ordering_dec,holding,holding_dec,total,total_dec,"
         "oracle_cost,oracle_cost_dec,ratio_vs_lp,ratio_vs_lp_dec,ratio_vs_opt,ratio_vs_opt_dec,"
         "rounds,cuts,wall_time_ms\n";
}

void write_csv_row(std::ostream& out, const RunReport& r) {
  out << r.instance_id << "," << to_string(r.lp_value) << "," << to_decimal(r.lp_value) << ","
      << to_string(r.alg_cost.ordering) << "," << to_decimal(r.alg_cost.ordering) << ","
      << to_string(r.alg_cost.holding) << "," << to_decimal(r.alg_cost.holding) << ","
      << to_string(r.alg_cost.total) << "," << to_decimal(r.alg_cost.total) << "," << cell(r.oracle_cost) << ","
      << dcell(r.oracle_cost) << "," << cell(r.ratio_vs_lp) << "," << dcell(r.ratio_vs_lp) << ","
      << cell(r.ratio_vs_opt) << "," << dcell(r.ratio_vs_opt) << "," << r.rounds << "," << r.cuts << ","
      << (r.wall_time_ms ? std::to_string(*r.wall_time_ms) : "") << "\n";
}

}  // namespace lotforge
