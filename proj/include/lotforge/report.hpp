#pragma once

// Per-run summary shared by the `solve` and `bench` commands.

#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"

#include "lotforge/instance.hpp"
#include "lotforge/master.hpp"

namespace lotforge {

struct RunReport {
  std::string instance_id;
  Rational lp_value;
  CostBreakdown alg_cost;
  std::optional<Rational> oracle_cost;
  std::optional<Rational> ratio_vs_lp;   // unset when lp_value = 0
  std::optional<Rational> ratio_vs_opt;  // unset without an oracle or when OPT = 0
  int rounds = 0;
  int cuts = 0;
  std::optional<long long> wall_time_ms;  // only filled on request; breaks byte-identity
};

RunReport make_report(std::string instance_id, const PipelineResult& result,
                      const std::optional<Rational>& oracle_cost);

nlohmann::json to_json(const RunReport& report);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunReport& report);

}  // namespace lotforge
