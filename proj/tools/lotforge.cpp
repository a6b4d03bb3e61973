// lotforge command-line driver: generate, solve, verify, bench.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <regex>
#include <thread>

#include "CLI11.hpp"

#include "lotforge/errors.hpp"
#include "lotforge/instance.hpp"
#include "lotforge/master.hpp"
#include "lotforge/oracles.hpp"
#include "lotforge/report.hpp"

namespace fs = std::filesystem;
using namespace lotforge;

namespace {

enum Exit { kOk = 0, kUsage = 1, kAlgorithm = 2, kMismatch = 3 };

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  static const std::regex pattern(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw std::invalid_argument(std::string(what) + ": expected lo..hi, got \"" + text + "\"");
  }
  return {std::stoi(m[1]), std::stoi(m[2])};
}

bool trace_from_env() {
  const char* v = std::getenv("LOTFORGE_TRACE");
  return v && std::string(v) == "1";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

struct GenerateArgs {
  std::uint64_t seed = 1;
  int T = 6, N = 4;
  std::string slack = "1";
  std::string capacity = "4..30", order_cost = "5..60", demand = "1..20", holding = "0..6";
  std::string family = "random";
  std::string R = "1000";
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  CmilsInstance inst;
  if (a.family == "kc-gap") {
    inst = gen_kc_gap(parse_rational(a.R));
  } else {
    GeneratorParams p;
    p.T = a.T;
    p.N = a.N;
    std::tie(p.capacity_lo, p.capacity_hi) = parse_range(a.capacity, "--capacity");
    std::tie(p.order_cost_lo, p.order_cost_hi) = parse_range(a.order_cost, "--order-cost");
    std::tie(p.demand_lo, p.demand_hi) = parse_range(a.demand, "--demand");
    std::tie(p.holding_rate_lo, p.holding_rate_hi) = parse_range(a.holding, "--holding-rate");
    p.slack_factor = parse_rational(a.slack);
    inst = gen_random(a.seed, p);
  }
  if (a.out.empty()) {
    std::cout << to_json(inst).dump(2) << "\n";
  } else {
    save_instance(inst, a.out);
  }
  return kOk;
}

struct SolveArgs {
  std::string instance;
  std::string out;
  std::string dump;
  int max_rounds = 200;
  bool trace = false;
  bool oracle = false;
  bool timing = false;
  bool all_cuts = false;
};

int cmd_solve(const SolveArgs& a) {
  const CmilsInstance inst = load_instance(a.instance);
  if (a.oracle && inst.T > kCmilsOracleMaxT) {
    throw std::invalid_argument("--oracle needs T <= " + std::to_string(kCmilsOracleMaxT));
  }
  PipelineConfig config;
  config.max_rounds = a.max_rounds;
  config.add_all_violated = a.all_cuts;
  if (a.trace || trace_from_env()) config.trace = &std::cerr;

  const auto start = std::chrono::steady_clock::now();
  PipelineResult result;
  try {
    result = run_pipeline(inst, config);
  } catch (const PipelineRoundLimit& e) {
    std::cerr << "error: " << e.what() << "; last lp_value " << to_string(e.lp_value) << ", "
              << e.cuts.size() << " cuts pooled\n";
    return kAlgorithm;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  std::optional<Rational> opt;
  if (a.oracle) opt = brute_force_cmils(inst).optimum_cost;
  RunReport report = make_report(fs::path(a.instance).stem().string(), result, opt);
  if (a.timing) report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  if (!a.out.empty()) save_schedule(result.schedule, a.out);
  if (!a.dump.empty()) {
    fs::create_directories(a.dump);
    std::ostringstream lp, csv, tree;
    write_lp(lp, result.final_lp);
    write_requirements_csv(csv, result.payload.R, result.payload.Rtilde);
    write_laminar_tree(tree, result.interval.family);
    write_text(fs::path(a.dump) / "master.lp", lp.str());
    write_text(fs::path(a.dump) / "requirements.csv", csv.str());
    write_text(fs::path(a.dump) / "laminar.txt", tree.str());
  }

  nlohmann::json j = to_json(report);
  j["certificate"] = to_json(result.certificate);
  j["orders"] = result.schedule.orders;
  std::cout << j.dump(2) << "\n";

  const bool ok = result.certificate.ordering_bound_ok && result.certificate.holding_bound_ok &&
                  (!report.ratio_vs_opt || *report.ratio_vs_opt <= 10);
  return ok ? kOk : kMismatch;
}

int cmd_verify(const std::string& instance_path, const std::string& schedule_path) {
  const CmilsInstance inst = load_instance(instance_path);
  const OrderSchedule sched = load_schedule(schedule_path, inst);
  int problems = 0;
  const FeasibilityReport feas = check_feasible(inst, sched);
  for (const Violation& v : feas.violations) {
    std::cerr << "infeasible: " << v.rule << " at " << v.where << "\n";
    ++problems;
  }
  if (feas.feasible) {
    const CostBreakdown actual = cost(inst, sched);
    auto compare = [&](const char* name, const Rational& stored, const Rational& recomputed) {
      if (stored == recomputed) return;
      std::cerr << "cost mismatch: " << name << " stored " << to_string(stored) << ", recomputed "
                << to_string(recomputed) << "\n";
      ++problems;
    };
    compare("ordering", sched.costs.ordering, actual.ordering);
    compare("holding", sched.costs.holding, actual.holding);
    compare("total", sched.costs.total, actual.total);
  }
  if (problems > 0) return kMismatch;
  std::cout << "ok\n";
  return kOk;
}

struct BenchArgs {
  std::string seeds = "1..10";
  int T = 6, N = 4;
  std::string slack = "1";
  bool oracle = false;
  bool timing = false;
  unsigned jobs = 1;
  int max_rounds = 200;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  const auto [first, last] = parse_range(a.seeds, "--seeds");
  if (a.oracle && a.T > kCmilsOracleMaxT) {
    throw std::invalid_argument("--oracle needs --T <= " + std::to_string(kCmilsOracleMaxT));
  }
  GeneratorParams params;
  params.T = a.T;
  params.N = a.N;
  params.slack_factor = parse_rational(a.slack);

  const int count = last >= first ? last - first + 1 : 0;
  std::vector<std::optional<RunReport>> rows(count);
  std::vector<std::string> failures(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < count; k = next++) {
      const int seed = first + k;
      try {
        const CmilsInstance inst = gen_random(static_cast<std::uint64_t>(seed), params);
        PipelineConfig config;
        config.max_rounds = a.max_rounds;
        const auto start = std::chrono::steady_clock::now();
        PipelineResult result = run_pipeline(inst, config);
        const auto elapsed = std::chrono::steady_clock::now() - start;
        std::optional<Rational> opt;
        if (a.oracle) opt = brute_force_cmils(inst).optimum_cost;
        RunReport r = make_report("seed-" + std::to_string(seed), result, opt);
        if (a.timing) r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        rows[k] = std::move(r);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(std::max(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw ParseError("cannot write " + a.out);
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  write_csv_header(out);
  int code = kOk;
  for (int k = 0; k < count; ++k) {
    if (!rows[k]) {
      std::cerr << "seed " << first + k << ": " << failures[k] << "\n";
      code = std::max(code, static_cast<int>(kAlgorithm));
      continue;
    }
    write_csv_row(out, *rows[k]);
    if (rows[k]->ratio_vs_opt && *rows[k]->ratio_vs_opt > 10) {
      std::cerr << "seed " << first + k << ": ratio_vs_opt " << to_string(*rows[k]->ratio_vs_opt) << " > 10\n";
      code = kMismatch;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lotforge: capacitated multi-item lot-sizing with a 10-approximation certificate"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write a random or gap instance");
  g->add_option("--seed", gen.seed);
  g->add_option("--T", gen.T)->check(CLI::PositiveNumber);
  g->add_option("--N", gen.N)->check(CLI::PositiveNumber);
  g->add_option("--slack", gen.slack, "prefix capacity slack factor (>= 1)");
  g->add_option("--capacity", gen.capacity, "capacity range lo..hi");
  g->add_option("--order-cost", gen.order_cost, "ordering cost range lo..hi");
  g->add_option("--demand", gen.demand, "demand range lo..hi");
  g->add_option("--holding-rate", gen.holding, "per-period holding rate range lo..hi");
  g->add_option("--family", gen.family)->check(CLI::IsMember({"random", "kc-gap"}));
  g->add_option("--R", gen.R, "gap parameter for --family kc-gap");
  g->add_option("-o,--out", gen.out, "output path (stdout when omitted)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "run the approximation pipeline");
  s->add_option("instance", solve.instance)->required();
  s->add_option("-o,--out", solve.out, "schedule output path");
  s->add_option("--max-rounds", solve.max_rounds)->check(CLI::PositiveNumber);
  s->add_flag("--trace", solve.trace, "log rounds, cuts and rounding steps to stderr");
  s->add_option("--dump", solve.dump, "directory for the LP, requirement table and laminar tree");
  s->add_flag("--oracle", solve.oracle, "also compute the exact optimum");
  s->add_flag("--timing", solve.timing, "fill wall_time_ms");
  s->add_flag("--all-cuts", solve.all_cuts, "add every violated cut per round");

  std::string v_instance, v_schedule;
  auto* v = app.add_subcommand("verify", "re-check a schedule against an instance");
  v->add_option("instance", v_instance)->required();
  v->add_option("schedule", v_schedule)->required();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "solve a seed range and print CSV");
  b->add_option("--seeds", bench.seeds, "seed range a..b");
  b->add_option("--T", bench.T)->check(CLI::PositiveNumber);
  b->add_option("--N", bench.N)->check(CLI::PositiveNumber);
  b->add_option("--slack", bench.slack);
  b->add_flag("--oracle", bench.oracle, "compare against the exact optimum");
  b->add_flag("--timing", bench.timing, "fill wall_time_ms");
  b->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber);
  b->add_option("--max-rounds", bench.max_rounds)->check(CLI::PositiveNumber);
  b->add_option("-o,--out", bench.out, "CSV output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*s) return cmd_solve(solve);
    if (*v) return cmd_verify(v_instance, v_schedule);
    if (*b) return cmd_bench(bench);
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant failed: " << e.what() << "\n";
    return kAlgorithm;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
