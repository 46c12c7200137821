// Command-line front end: generate, solve, verify, oracle, export, bench.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bbap/bnp.h"
#include "bbap/generator.h"
#include "bbap/instance.h"
#include "bbap/io.h"
#include "bbap/lp_export.h"
#include "bbap/oracle.h"
#include "bbap/report.h"

namespace {

// Keep in sync with the table in README.md.
enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kMalformedInput = 3,
  kOracleLimit = 4,
  kInfeasible = 5,
  kIoFailure = 6,
  kDigestMismatch = 7,
  kNoSolution = 8,
};

struct CliError {
  int code;
  std::string message;
};

bbap::Instance LoadInstance(const std::string& path) {
  const std::string text = bbap::ReadFile(path);
  try {
    return bbap::ParseInstance(text);
  } catch (const bbap::FormatError& e) {
    throw CliError{kMalformedInput, path + ": " + e.what()};
  } catch (const bbap::InvalidInstanceError& e) {
    std::string msg = path + ": invalid instance";
    for (const auto& v : e.violations()) msg += "\n  " + v.ToString();
    throw CliError{kMalformedInput, msg};
  }
}

std::string Fixed2(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

int RunGenerate(const bbap::GenConfig& cfg, const std::string& out) {
  if (!bbap::ValidGenConfig(cfg)) {
    throw CliError{kUsage, "invalid generator configuration"};
  }
  std::optional<bbap::Instance> inst;
  try {
    inst.emplace(bbap::Generate(cfg));
  } catch (const bbap::InvalidInstanceError& e) {
    std::string msg = "generated instance is unschedulable";
    for (const auto& v : e.violations()) msg += "\n  " + v.ToString();
    throw CliError{kInfeasible, msg};
  }
  const std::string text = bbap::SerializeInstance(*inst);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    bbap::WriteFile(out, text);
  }
  return kOk;
}

int RunSolve(const std::string& file, double time_limit, const std::string& out,
             bool progress) {
  const bbap::Instance inst = LoadInstance(file);
  bbap::BnpOptions options;
  options.time_limit_seconds = time_limit;
  if (progress) {
    options.on_node = [](const bbap::ProgressInfo& p) {
      std::fprintf(stderr, "nodes %lld  open %zu  ub %.0f  incumbent %s  %.2fs\n",
                   static_cast<long long>(p.nodes_explored), p.open_nodes,
                   p.best_ub,
                   p.incumbent ? std::to_string(*p.incumbent).c_str() : "none",
                   p.elapsed_seconds);
    };
  }
  const bbap::BnpResult res = bbap::SolveBnp(inst, options);

  std::printf("time %s  gap (%%) %s  optimal %s  nodes %lld  objective %s  ub %.0f\n",
              Fixed2(res.elapsed_seconds).c_str(),
              Fixed2(res.gap_percent).c_str(),
              res.proven_optimal ? "yes" : "no",
              static_cast<long long>(res.nodes_explored),
              res.incumbent ? std::to_string(res.incumbent->objective).c_str()
                            : "none",
              res.best_ub);

  if (res.status == bbap::BnpStatus::kInfeasible) {
    throw CliError{kInfeasible, "instance has no feasible assignment"};
  }
  if (!res.incumbent) {
    throw CliError{kNoSolution, "no feasible solution found within the time limit"};
  }
  if (!out.empty()) {
    bbap::SolutionFile sol;
    sol.instance_digest = bbap::InstanceDigest(inst);
    sol.solution = *res.incumbent;
    sol.solver = bbap::SolverMetadata{res.best_ub, res.gap_percent,
                                      res.nodes_explored, res.elapsed_seconds,
                                      res.proven_optimal};
    bbap::WriteFile(out, bbap::SerializeSolutionFile(sol));
  }
  return kOk;
}

int RunVerify(const std::string& file, const std::string& sol_path) {
  const bbap::Instance inst = LoadInstance(file);
  bbap::SolutionFile sol;
  try {
    sol = bbap::ParseSolutionFile(bbap::ReadFile(sol_path));
  } catch (const bbap::FormatError& e) {
    throw CliError{kMalformedInput, sol_path + ": " + e.what()};
  }
  const std::string digest = bbap::InstanceDigest(inst);
  if (sol.instance_digest != digest) {
    throw CliError{kDigestMismatch, "solution digest " + sol.instance_digest +
                                        " does not match instance " + digest};
  }
  bbap::FeasibilityReport report;
  try {
    report = bbap::CheckSolution(inst, sol.solution);
  } catch (const bbap::MalformedSolutionError& e) {
    throw CliError{kMalformedInput, sol_path + ": " + e.what()};
  }
  for (const auto& v : report.violations) {
    std::printf("violation %s: %s\n", bbap::ToString(v.kind), v.detail.c_str());
  }
  std::printf("feasible %s  objective %lld  recomputed %lld  match %s\n",
              report.feasible() ? "yes" : "no",
              static_cast<long long>(sol.solution.objective),
              static_cast<long long>(report.recomputed_objective),
              report.objective_matches ? "yes" : "no");
  return report.ok() ? kOk : kVerifyFailed;
}

int RunOracle(const std::string& file) {
  const bbap::Instance inst = LoadInstance(file);
  std::optional<bbap::Solution> best;
  try {
    best = bbap::OracleSolve(inst);
  } catch (const bbap::OracleLimitError& e) {
    throw CliError{kOracleLimit, e.what()};
  }
  if (!best) throw CliError{kInfeasible, "instance has no feasible assignment"};
  std::printf("objective %lld\n", static_cast<long long>(best->objective));
  for (const auto& a : best->assignments) {
    std::printf("flight %d  belt %d  start %d  duration %d\n", a.flight, a.belt,
                a.start, a.duration);
  }
  return kOk;
}

int RunExport(const std::string& file, const std::string& out) {
  const bbap::Instance inst = LoadInstance(file);
  const std::string text = bbap::CompactLpString(inst);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    bbap::WriteFile(out, text);
  }
  return kOk;
}

int RunBench(const std::string& family, double alpha, double treq_frac,
             int seeds, std::uint64_t first_seed, double time_limit, int jobs) {
  auto cfg = bbap::FamilyConfig(family);
  if (!cfg) throw CliError{kUsage, "unknown family " + family};
  cfg->alpha = alpha;
  cfg->treq_frac = treq_frac;
  if (!bbap::ValidGenConfig(*cfg)) {
    throw CliError{kUsage, "invalid generator configuration"};
  }
  bbap::BenchConfig bench;
  bench.family = *cfg;
  bench.first_seed = first_seed;
  bench.seeds = seeds;
  bench.time_limit_seconds = time_limit;
  bench.jobs = jobs;
  std::vector<bbap::BenchRecord> records;
  try {
    records = bbap::RunBench(bench, [](const bbap::BenchRecord& r) {
      std::printf("%s\n", bbap::FormatRecord(r).c_str());
      std::fflush(stdout);
    });
  } catch (const bbap::InvalidInstanceError& e) {
    throw CliError{kInfeasible, std::string("generated instance is unschedulable: ") +
                                    e.what()};
  }
  std::printf("%s\n%s\n", bbap::SummaryHeader().c_str(),
              bbap::FormatSummary(bench, bbap::Summarize(records)).c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branch-and-price solver for baggage belt assignment"};
  app.require_subcommand(1);

  bbap::GenConfig gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a seeded random instance");
  generate->add_option("--flights", gen.n, "Number of flights")->capture_default_str();
  generate->add_option("--belts", gen.m, "Number of belts")->capture_default_str();
  generate->add_option("--tmax", gen.t_max, "Planning horizon")->capture_default_str();
  generate->add_option("--alpha", gen.alpha, "Weight of the duration term")
      ->capture_default_str();
  generate->add_option("--treq-frac", gen.treq_frac,
                       "Requested starts drawn in [0, frac * tmax]")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--beta1", gen.beta1, "Scale of the duration reward")->capture_default_str();
  generate->add_option("--beta2", gen.beta2, "Scale of the punctuality reward")->capture_default_str();
  generate->add_option("--bags-min", gen.bag_range.first, "Fewest bags per flight")->capture_default_str();
  generate->add_option("--bags-max", gen.bag_range.second, "Most bags per flight")->capture_default_str();
  generate->add_option("--rate-min", gen.productivity_range.first, "Slowest belt, bags per minute")
      ->capture_default_str();
  generate->add_option("--rate-max", gen.productivity_range.second, "Fastest belt, bags per minute")
      ->capture_default_str();
  generate->add_option("--out", gen_out, "Output file (stdout if omitted)");

  std::string solve_file, solve_out;
  double solve_limit = 300.0;
  bool solve_progress = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance by branch-and-price");
  solve->add_option("FILE", solve_file)->required();
  solve->add_option("--time-limit", solve_limit, "Seconds")->capture_default_str();
  solve->add_option("--out", solve_out, "Solution file to write");
  solve->add_flag("--progress", solve_progress, "Per-node progress on stderr");

  std::string verify_file, verify_sol;
  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("FILE", verify_file)->required();
  verify->add_option("SOL", verify_sol)->required();

  std::string oracle_file;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive solve of a tiny instance");
  oracle->add_option("FILE", oracle_file)->required();

  std::string export_file, export_out;
  auto* exporter = app.add_subcommand("export", "Write the compact model in LP format");
  exporter->add_option("FILE", export_file)->required();
  exporter->add_option("--out", export_out, "Output file (stdout if omitted)");

  std::string family = "n30m5";
  double bench_alpha = 0.5, bench_frac = 0.5, bench_limit = 300.0;
  int bench_seeds = 10, bench_jobs = 1;
  std::uint64_t bench_first = 1;
  auto* bench = app.add_subcommand("bench", "Solve a seeded family and summarize");
  bench->add_option("--family", family)
      ->check(CLI::IsMember({"n30m5", "n50m10"}))
      ->capture_default_str();
  bench->add_option("--alpha", bench_alpha)->capture_default_str();
  bench->add_option("--treq-frac", bench_frac)->capture_default_str();
  bench->add_option("--seeds", bench_seeds)->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--first-seed", bench_first)->capture_default_str();
  bench->add_option("--time-limit", bench_limit)->capture_default_str();
  bench->add_option("--jobs", bench_jobs, "Instances solved concurrently")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return RunGenerate(gen, gen_out);
    if (*solve) return RunSolve(solve_file, solve_limit, solve_out, solve_progress);
    if (*verify) return RunVerify(verify_file, verify_sol);
    if (*oracle) return RunOracle(oracle_file);
    if (*exporter) return RunExport(export_file, export_out);
    if (*bench) {
      return RunBench(family, bench_alpha, bench_frac, bench_seeds, bench_first,
                      bench_limit, bench_jobs);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const bbap::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  }
  return kUsage;
}
