// Benchmark runs over seeded generator families and the summary row
// (time, gap %, # opt, # nodes) used to report them.

#ifndef BBAP_REPORT_H_
#define BBAP_REPORT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bbap/bnp.h"
#include "bbap/generator.h"

namespace bbap {

struct BenchRecord {
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  double gap_percent = 0.0;
  bool proven_optimal = false;
  std::int64_t nodes = 0;
  std::optional<std::int64_t> objective;
  double best_ub = 0.0;
};

struct BenchSummary {
  int instances = 0;
  double avg_time = 0.0;
  double avg_gap = 0.0;  // over all instances; infinite if any gap is
  int optimal = 0;
  double avg_nodes = 0.0;
};

BenchSummary Summarize(const std::vector<BenchRecord>& records);

// Named family presets: "n30m5" and "n50m10" (t_max 120).
std::optional<GenConfig> FamilyConfig(const std::string& family);

struct BenchConfig {
  GenConfig family;
  std::uint64_t first_seed = 1;
  int seeds = 10;
  double time_limit_seconds = 300.0;
  int jobs = 1;  // instances solved concurrently
};

// Solves seeds first_seed .. first_seed + seeds - 1. Records come back in
// seed order whatever the concurrency. `on_record` is called (serialized)
// as each instance finishes.
std::vector<BenchRecord> RunBench(
    const BenchConfig& config,
    const std::function<void(const BenchRecord&)>& on_record = {});

std::string FormatRecord(const BenchRecord& r);
std::string SummaryHeader();
std::string FormatSummary(const BenchConfig& config, const BenchSummary& s);

}  // namespace bbap

#endif  // BBAP_REPORT_H_
