#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <sstream>

#include "bbap/bnp.h"
#include "bbap/io.h"
#include "bbap/lp_export.h"
#include "bbap/profit.h"
#include "bbap/report.h"
#include "support.h"

namespace bbap {
namespace {

bool SameData(const InstanceData& a, const InstanceData& b) {
  if (a.t_max != b.t_max || a.flights.size() != b.flights.size() ||
      a.belts.size() != b.belts.size() || a.durations.size() != b.durations.size()) {
    return false;
  }
  for (std::size_t j = 0; j < a.flights.size(); ++j) {
    const auto &x = a.flights[j], &y = b.flights[j];
    if (x.id != y.id || x.bags != y.bags || x.t_req != y.t_req) return false;
  }
  for (std::size_t i = 0; i < a.belts.size(); ++i) {
    const auto &x = a.belts[i], &y = b.belts[i];
    if (x.id != y.id || x.productivity != y.productivity ||
        x.compatible_flights != y.compatible_flights ||
        x.dual_station_threshold != y.dual_station_threshold) {
      return false;
    }
  }
  for (const auto& [key, ds] : a.durations) {
    auto it = b.durations.find(key);
    if (it == b.durations.end() || it->second.values != ds.values ||
        it->second.nominal != ds.nominal) {
      return false;
    }
  }
  if (a.profit.index() != b.profit.index()) return false;
  if (const auto* p = std::get_if<ProfitParams>(&a.profit)) {
    const auto& q = std::get<ProfitParams>(b.profit);
    return p->alpha == q.alpha && p->beta1 == q.beta1 && p->beta2 == q.beta2;
  }
  return std::get<ProfitTable>(a.profit) == std::get<ProfitTable>(b.profit);
}

TEST(InstanceFile, RoundTripsGeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenConfig cfg;
    cfg.n = 12;
    cfg.m = 3;
    cfg.seed = seed;
    const Instance inst = Generate(cfg);
    const std::string text = SerializeInstance(inst);
    const Instance back = ParseInstance(text);
    EXPECT_TRUE(SameData(inst.ToData(), back.ToData()));
    EXPECT_EQ(SerializeInstance(back), text);
  }
}

TEST(InstanceFile, RoundTripsTablesAndExplicitDurations) {
  InstanceData data;
  data.t_max = 20;
  data.flights = {{0, 30, 6}, {1, 50, 2}};
  Belt b0{0, 10.0, {0, 1}, 40};
  Belt b1{1, 12.5, {1}, std::nullopt};
  data.belts = {b0, b1};
  data.durations[{0, 0}] = DurationSet{3, {3, 4}};
  data.durations[{0, 1}] = DurationSet{5, {5}};
  data.durations[{1, 1}] = DurationSet{4, {2, 4}};
  ProfitTable table;
  for (const auto& [key, ds] : data.durations) {
    for (int w : ds.values) {
      for (int t = data.flights[key.second].t_req; t + w <= 20; ++t) {
        table[{key.first, key.second, t, w}] = t * 3 - w;
      }
    }
  }
  data.profit = table;
  const Instance inst = Instance::Create(data);
  const std::string text = SerializeInstance(inst);
  const Instance back = ParseInstance(text);
  EXPECT_TRUE(SameData(inst.ToData(), back.ToData()));
  EXPECT_EQ(SerializeInstance(back), text);
  EXPECT_EQ(InstanceDigest(inst), InstanceDigest(back));
}

TEST(InstanceFile, FlightIdsAreLabels) {
  const std::string text = R"({
    "format_version": 1, "t_max": 40,
    "belts": [{"id": 0, "productivity": 10, "compatible_flights": [7, 3]}],
    "flights": [{"id": 7, "bags": 100, "t_req": 20}, {"id": 3, "bags": 60, "t_req": 5}],
    "profit": {"formula": {"alpha": 0.5, "beta1": 500, "beta2": 500}},
    "durations": {"rule": "nominal-5x2"}
  })";
  const Instance inst = ParseInstance(text);
  EXPECT_EQ(inst.flight(0).bags, 60);
  EXPECT_EQ(inst.flight(1).bags, 100);
  EXPECT_EQ(inst.durations(0, 0).nominal, 6);
  EXPECT_EQ(inst.durations(0, 1).nominal, 10);
}

TEST(InstanceFile, RejectsMalformedDocuments) {
  GenConfig cfg;
  cfg.n = 3;
  cfg.m = 1;
  const std::string good = SerializeInstance(Generate(cfg));
  EXPECT_NO_THROW(ParseInstance(good));

  auto with = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto pos = s.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    s.replace(pos, from.size(), to);
    return s;
  };
  EXPECT_THROW(ParseInstance("{"), FormatError);
  EXPECT_THROW(ParseInstance("[]"), FormatError);
  EXPECT_THROW(ParseInstance(with("\"t_max\"", "\"extra\": 1,\n  \"t_max\"")),
               FormatError);
  EXPECT_THROW(ParseInstance(with("\"format_version\": 1", "\"format_version\": 2")),
               FormatError);
  EXPECT_THROW(ParseInstance(with("nominal-5x2", "other-rule")), FormatError);
  EXPECT_THROW(ParseInstance(with("\"t_req\"", "\"t_request\"")), FormatError);
  EXPECT_THROW(ParseInstance(with("\"bags\": ", "\"bags\": \"x\", \"b\": ")),
               FormatError);
}

TEST(InstanceFile, InvalidInstanceIsNotAFormatError) {
  GenConfig cfg;
  cfg.n = 2;
  cfg.m = 1;
  std::string text = SerializeInstance(Generate(cfg));
  const auto pos = text.find("\"t_max\": 120");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 12, "\"t_max\": 1");
  EXPECT_NO_THROW(ParseInstanceData(text));
  EXPECT_THROW(ParseInstance(text), InvalidInstanceError);
}

TEST(InstanceDigest, StableAndSensitive) {
  GenConfig cfg;
  cfg.n = 5;
  cfg.m = 2;
  const Instance a = Generate(cfg);
  EXPECT_TRUE(std::regex_match(InstanceDigest(a),
                               std::regex("fnv1a64:[0-9a-f]{16}")));
  EXPECT_EQ(InstanceDigest(a), InstanceDigest(Generate(cfg)));
  cfg.seed = 2;
  EXPECT_NE(InstanceDigest(a), InstanceDigest(Generate(cfg)));
}

TEST(SolutionFile, RoundTrip) {
  SolutionFile f;
  f.instance_digest = "fnv1a64:0123456789abcdef";
  f.solution.assignments = {{0, 1, 4, 6}, {1, 0, 2, 8}};
  f.solution.objective = 812;
  f.solver = SolverMetadata{815.0, 0.37, 12, 1.234, false};
  const SolutionFile back = ParseSolutionFile(SerializeSolutionFile(f));
  EXPECT_EQ(back.instance_digest, f.instance_digest);
  EXPECT_EQ(back.solution.assignments, f.solution.assignments);
  EXPECT_EQ(back.solution.objective, 812);
  ASSERT_TRUE(back.solver.has_value());
  EXPECT_EQ(back.solver->nodes, 12);
  EXPECT_EQ(back.solver->elapsed_seconds, 1.23);
  EXPECT_FALSE(back.solver->proven_optimal);

  f.solver->gap_percent = INFINITY;
  const SolutionFile inf = ParseSolutionFile(SerializeSolutionFile(f));
  EXPECT_TRUE(std::isinf(inf.solver->gap_percent));

  f.solver.reset();
  EXPECT_FALSE(ParseSolutionFile(SerializeSolutionFile(f)).solver.has_value());
  EXPECT_THROW(ParseSolutionFile("{\"format_version\": 1}"), FormatError);
}

int CountLines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0;
  return n;
}

TEST(LpExport, SingleVariableModel) {
  testing::TableSpec spec;
  spec.t_max = 3;
  spec.t_req = {1};
  spec.w_values = {{2}};
  const Instance inst = Instance::Create(testing::TableData(spec, 1, 7, 7));
  const std::string lp = CompactLpString(inst);
  EXPECT_NE(lp.find("Maximize\n obj: 7 x_0_0_1_2\n"), std::string::npos) << lp;
  EXPECT_NE(lp.find(" assign_0: 1 x_0_0_1_2 = 1\n"), std::string::npos) << lp;
  EXPECT_EQ(CountLines(lp, " prec_"), 0);
  EXPECT_NE(lp.find("Binaries\n x_0_0_1_2\nEnd\n"), std::string::npos) << lp;
}

TEST(LpExport, OnePrecedenceRowPerPairAndBelt) {
  testing::TableSpec spec;
  spec.t_max = 10;
  spec.t_req = {0, 2, 3};
  spec.w_values = {{2}, {2, 3}, {2}};
  spec.belts = 2;
  const Instance inst = Instance::Create(testing::TableData(spec, 4, 1, 9));
  const std::string lp = CompactLpString(inst);
  EXPECT_EQ(CountLines(lp, " assign_"), 3);
  EXPECT_EQ(CountLines(lp, " prec_"), 2 * 3);
  EXPECT_NE(lp.find(" prec_1_0_2: "), std::string::npos);
  // Big-M form: j's finish + T on the left, T - start for j', 2T on the right.
  const auto at = lp.find(" prec_0_0_1: ");
  const auto row = lp.substr(at, lp.find("\n", lp.find("<=", at)) - at + 1);
  EXPECT_EQ(row.rfind(" prec_0_0_1: 12 x_0_0_0_2 + ", 0), 0u) << row;
  EXPECT_NE(row.find(" + 8 x_0_1_2_2"), std::string::npos) << row;
  EXPECT_NE(row.find("<= 20\n"), std::string::npos);
  EXPECT_EQ(lp, CompactLpString(inst));
}

TEST(Report, SummaryRecomputesFromRecords) {
  std::vector<BenchRecord> records(4);
  for (int k = 0; k < 4; ++k) {
    records[k].seed = k + 1;
    records[k].elapsed_seconds = 1.0 + k;
    records[k].gap_percent = k == 3 ? 2.0 : 0.0;
    records[k].proven_optimal = k != 3;
    records[k].nodes = 10 * (k + 1);
  }
  const BenchSummary s = Summarize(records);
  EXPECT_EQ(s.instances, 4);
  EXPECT_DOUBLE_EQ(s.avg_time, 2.5);
  EXPECT_DOUBLE_EQ(s.avg_gap, 0.5);
  EXPECT_EQ(s.optimal, 3);
  EXPECT_DOUBLE_EQ(s.avg_nodes, 25.0);
}

TEST(Report, FamiliesAndFormatting) {
  ASSERT_TRUE(FamilyConfig("n30m5").has_value());
  EXPECT_EQ(FamilyConfig("n50m10")->m, 10);
  EXPECT_FALSE(FamilyConfig("n10m1").has_value());
  BenchConfig cfg;
  cfg.family = *FamilyConfig("n30m5");
  BenchSummary s{10, 12.345, 0.01, 9, 595.8};
  const std::string row = FormatSummary(cfg, s);
  EXPECT_NE(row.find("9/10"), std::string::npos);
  EXPECT_NE(row.find("12.35"), std::string::npos);
  EXPECT_NE(SummaryHeader().find("# nodes"), std::string::npos);
}

TEST(Report, RunBenchKeepsSeedOrder) {
  BenchConfig cfg;
  cfg.family = testing::OracleSizedConfig(1);
  cfg.family.n = 5;
  cfg.family.m = 2;
  cfg.seeds = 4;
  cfg.jobs = 3;
  cfg.first_seed = 10;
  int calls = 0;
  const auto records = RunBench(cfg, [&](const BenchRecord&) { ++calls; });
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(calls, 4);
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(records[k].seed, 10u + k);
    GenConfig g = cfg.family;
    g.seed = 10 + k;
    const BnpResult r = SolveBnp(Generate(g));
    EXPECT_EQ(records[k].nodes, r.nodes_explored);
    EXPECT_EQ(records[k].objective.has_value(), r.incumbent.has_value());
  }
}

}  // namespace
}  // namespace bbap
