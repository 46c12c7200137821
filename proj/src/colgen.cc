#include "bbap/colgen.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bbap {

BranchConstraints::BranchConstraints(int flights, int belts)
    : belts_(belts),
      forced_(flights, -1),
      forbidden_(static_cast<std::size_t>(flights) * belts, 0) {}

void BranchConstraints::Force(int flight, int belt) {
  forced_[flight] = belt;
  for (int i = 0; i < belts_; ++i) {
    if (i != belt) Forbid(flight, i);
  }
}

void BranchConstraints::Forbid(int flight, int belt) {
  forbidden_[static_cast<std::size_t>(flight) * belts_ + belt] = 1;
}

std::vector<int> BranchConstraints::ForcedOn(int belt) const {
  std::vector<int> out;
  for (int j = 0; j < num_flights(); ++j) {
    if (forced_[j] == belt) out.push_back(j);
  }
  return out;
}

std::vector<int> BranchConstraints::Eligible(const Instance& inst,
                                             int belt) const {
  std::vector<int> out;
  for (int j : inst.compatible_flights(belt)) {
    if (!forbidden(j, belt)) out.push_back(j);
  }
  return out;
}

bool BranchConstraints::Admits(const ScheduleColumn& column) const {
  if (column.is_dummy) return true;
  return std::none_of(column.coverage.begin(), column.coverage.end(),
                      [&](int j) { return forbidden(j, column.belt); });
}

int ColumnStore::Intern(ScheduleColumn column) {
  auto key = std::make_pair(column.belt, column.assignments);
  if (!column.is_dummy) {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
  }
  const int id = size();
  if (!column.is_dummy) index_.emplace(std::move(key), id);
  columns_.push_back(std::move(column));
  return id;
}

std::int64_t DummyPenalty(const Instance& inst) {
  return 1 + static_cast<std::int64_t>(inst.num_flights()) *
                 std::max<std::int64_t>(inst.max_abs_profit(), 1);
}

ColumnPool ColumnPool::WithDummies(const Instance& inst,
                                   std::shared_ptr<ColumnStore> store) {
  ColumnPool pool;
  pool.store_ = std::move(store);
  auto& dummies = pool.store_->dummy_by_belt_;
  if (dummies.empty()) {
    std::vector<int> all(inst.num_flights());
    for (int j = 0; j < inst.num_flights(); ++j) all[j] = j;
    for (int i = 0; i < inst.num_belts(); ++i) {
      ScheduleColumn dummy;
      dummy.belt = i;
      dummy.profit = -DummyPenalty(inst);
      dummy.coverage = all;
      dummy.is_dummy = true;
      dummies.push_back(pool.store_->Intern(std::move(dummy)));
    }
  }
  pool.ids_ = dummies;
  return pool;
}

bool ColumnPool::Add(ScheduleColumn column) {
  const int id = store_->Intern(std::move(column));
  if (std::find(ids_.begin(), ids_.end(), id) != ids_.end()) return false;
  ids_.push_back(id);
  return true;
}

ColumnPool ColumnPool::Filtered(
    const std::function<bool(const ScheduleColumn&)>& keep) const {
  ColumnPool out;
  out.store_ = store_;
  for (int id : ids_) {
    const auto& c = store_->at(id);
    if (c.is_dummy || keep(c)) out.ids_.push_back(id);
  }
  return out;
}

namespace {

LpColumn ToLpColumn(const Instance& inst, const ScheduleColumn& c) {
  LpColumn col;
  col.cost = static_cast<double>(c.profit);
  col.entries.reserve(c.coverage.size() + 1);
  for (int j : c.coverage) col.entries.emplace_back(j, 1.0);
  col.entries.emplace_back(inst.num_flights() + c.belt, 1.0);
  return col;
}

}  // namespace

Rmp BuildRmp(const Instance& inst, const ColumnPool& pool,
             const BranchConstraints& constraints) {
  Rmp rmp;
  for (int j = 0; j < inst.num_flights(); ++j) {
    rmp.problem.AddRow(Relation::kEqual, 1.0);
  }
  for (int i = 0; i < inst.num_belts(); ++i) {
    rmp.problem.AddRow(Relation::kLessEqual, 1.0);
  }
  for (int k = 0; k < pool.size(); ++k) {
    const auto& c = pool.column(k);
    if (!constraints.Admits(c)) continue;
    rmp.problem.columns.push_back(ToLpColumn(inst, c));
    rmp.lp_to_pool.push_back(k);
  }
  return rmp;
}

std::vector<int> DummyCrashBasis(const Instance& inst, const Rmp& rmp,
                                 const ColumnPool& pool) {
  const int n = inst.num_flights();
  const int m = inst.num_belts();
  const int rows = n + m;
  if (rmp.lp_to_pool.empty() || !pool.column(rmp.lp_to_pool[0]).is_dummy) {
    return {};
  }
  std::vector<int> basis;
  basis.reserve(rows);
  basis.push_back(0);
  for (int j = 1; j < n; ++j) basis.push_back(ArtificialId(j, rows));
  for (int i = 0; i < m; ++i) basis.push_back(SlackId(n + i));
  return basis;
}

std::optional<Solution> ExtractInteger(const Instance& inst,
                                       const std::vector<double>& values,
                                       const ColumnPool& pool) {
  Solution sol;
  std::vector<int> covered(inst.num_flights(), 0);
  for (int k = 0; k < pool.size(); ++k) {
    const double v = k < static_cast<int>(values.size()) ? values[k] : 0.0;
    if (v <= kIntegralityEps) continue;
    if (v < 1.0 - kIntegralityEps) return std::nullopt;
    const auto& c = pool.column(k);
    if (c.is_dummy) return std::nullopt;
    for (const auto& a : c.assignments) {
      sol.assignments.push_back({a.flight, c.belt, a.start, a.duration});
      ++covered[a.flight];
    }
    sol.objective += c.profit;
  }
  for (int cnt : covered) {
    if (cnt != 1) return std::nullopt;
  }
  std::sort(sol.assignments.begin(), sol.assignments.end(),
            [](const Assignment& a, const Assignment& b) {
              return a.flight < b.flight;
            });
  return sol;
}

CgOutcome RunColgen(const Instance& inst, ColumnPool& pool,
                    const BranchConstraints& constraints,
                    const CgOptions& options) {
  const int n = inst.num_flights();
  const int m = inst.num_belts();
  CgOutcome out;
  Rmp rmp = BuildRmp(inst, pool, constraints);

  std::vector<std::vector<int>> eligible(m), forced(m);
  for (int i = 0; i < m; ++i) {
    eligible[i] = constraints.Eligible(inst, i);
    forced[i] = constraints.ForcedOn(i);
  }

  LpOptions lp_options;
  lp_options.warm_basis = DummyCrashBasis(inst, rmp, pool);
  while (true) {
    const LpResult res = SolveLp(rmp.problem, lp_options);
    if (options.on_lp) options.on_lp(rmp.problem, res);
    if (res.status != LpStatus::kOptimal) {
      throw LpFailureError(std::string("restricted master: ") +
                           ToString(res.status));
    }
    lp_options.warm_basis = res.basis;
    ++out.iterations;
    out.ub = res.objective;
    out.objective_history.push_back(res.objective);
    out.values.assign(pool.size(), 0.0);
    for (std::size_t c = 0; c < rmp.lp_to_pool.size(); ++c) {
      out.values[rmp.lp_to_pool[c]] = res.primal[c];
    }
    if (auto sol = ExtractInteger(inst, out.values, pool)) {
      if (!out.incumbent || sol->objective > out.incumbent->objective) {
        out.incumbent = std::move(sol);
      }
    }
    out.duals.y.assign(res.duals.begin(), res.duals.begin() + n);
    out.duals.u.assign(res.duals.begin() + n, res.duals.end());

    if (options.deadline && Clock::now() >= *options.deadline) {
      out.status = CgStatus::kDeadline;
      return out;
    }

    bool added = false;
    out.max_reduced_cost = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      PricingInput in{&inst, i, eligible[i], forced[i], &out.duals};
      auto priced = SolvePricing(in);
      if (!priced) {
        out.status = CgStatus::kInfeasible;
        return out;
      }
      out.max_reduced_cost = std::max(out.max_reduced_cost, priced->reduced_cost);
      if (priced->reduced_cost <= kReducedCostEps) continue;
      ScheduleColumn col = std::move(priced->column);
      LpColumn lp_col = ToLpColumn(inst, col);
      if (pool.Add(std::move(col))) {
        rmp.problem.columns.push_back(std::move(lp_col));
        rmp.lp_to_pool.push_back(pool.size() - 1);
        ++out.columns_added;
        added = true;
      }
    }
    if (!added) {
      out.status = CgStatus::kConverged;
      return out;
    }
  }
}

}  // namespace bbap
