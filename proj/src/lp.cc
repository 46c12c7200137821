#include "bbap/lp.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace bbap {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kOptTol = 1e-9;
constexpr double kFeasTol = 1e-9;
constexpr int kRefactorEvery = 100;

enum class VarKind { kStructural, kSlack, kArtificial };

class Simplex {
 public:
  Simplex(const LpProblem& problem, const LpOptions& options)
      : p_(problem),
        rows_(problem.num_rows()),
        cols_(problem.num_columns()) {
    max_iterations_ = options.max_iterations > 0
                          ? options.max_iterations
                          : 50 * (rows_ + cols_) + 1000;
    // Logical variables after the structurals: one slack per <= row, one
    // artificial per equality row and per <= row with negative rhs.
    id_of_.reserve(cols_ + 2 * rows_);
    for (int j = 0; j < cols_; ++j) {
      id_of_.push_back(j);
      kind_.push_back(VarKind::kStructural);
    }
    slack_var_.assign(rows_, -1);
    art_var_.assign(rows_, -1);
    for (int r = 0; r < rows_; ++r) {
      if (p_.relations[r] == Relation::kLessEqual) {
        slack_var_[r] = static_cast<int>(kind_.size());
        id_of_.push_back(SlackId(r));
        kind_.push_back(VarKind::kSlack);
      }
    }
    for (int r = 0; r < rows_; ++r) {
      if (p_.relations[r] == Relation::kEqual || p_.rhs[r] < 0.0) {
        art_var_[r] = static_cast<int>(kind_.size());
        id_of_.push_back(ArtificialId(r, rows_));
        kind_.push_back(VarKind::kArtificial);
      }
    }
    vars_ = static_cast<int>(kind_.size());
    b_ = Eigen::Map<const Eigen::VectorXd>(p_.rhs.data(), rows_);
    warm_ = options.warm_basis;
  }

  LpResult Run() {
    LpResult result;
    bool ready = false;
    if (!warm_.empty() && TryWarmStart()) {
      ready = true;
      result.warm_started = true;
    }
    if (!ready) {
      ColdBasis();
      if (!Refactor()) return Fail(result);
      // Phase 1: drive artificials to zero.
      bool any_art = false;
      std::vector<double> cost(vars_, 0.0);
      for (int v = 0; v < vars_; ++v) {
        if (kind_[v] == VarKind::kArtificial) {
          cost[v] = -1.0;
          any_art = true;
        }
      }
      if (any_art) {
        const auto st = Iterate(cost, /*phase2=*/false);
        if (st == LpStatus::kNumericalFailure) return Fail(result);
        double infeas = 0.0;
        for (int r = 0; r < rows_; ++r) {
          if (kind_[basis_[r]] == VarKind::kArtificial) infeas += std::abs(x_[r]);
        }
        if (infeas > 1e-7 * (1.0 + b_.lpNorm<Eigen::Infinity>())) {
          result.status = LpStatus::kInfeasible;
          result.iterations = iterations_;
          return result;
        }
      }
    }

    std::vector<double> cost(vars_, 0.0);
    for (int j = 0; j < cols_; ++j) cost[j] = p_.columns[j].cost;
    const auto st = Iterate(cost, /*phase2=*/true);
    result.iterations = iterations_;
    if (st == LpStatus::kUnbounded) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
    if (st != LpStatus::kOptimal) return Fail(result);
    if (!Refactor()) return Fail(result);

    result.status = LpStatus::kOptimal;
    result.primal.assign(cols_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      const int v = basis_[r];
      if (kind_[v] == VarKind::kStructural) {
        result.primal[v] = std::max(0.0, x_[r]);
      }
    }
    const Eigen::VectorXd y = Duals(cost);
    result.duals.assign(y.data(), y.data() + rows_);
    result.objective = 0.0;
    for (int j = 0; j < cols_; ++j) {
      result.objective += p_.columns[j].cost * result.primal[j];
    }
    result.basis.resize(rows_);
    for (int r = 0; r < rows_; ++r) result.basis[r] = id_of_[basis_[r]];
    return result;
  }

 private:
  LpResult Fail(LpResult& result) {
    result.status = LpStatus::kNumericalFailure;
    result.iterations = iterations_;
    return result;
  }

  // Column of variable v as (row, coefficient) pairs.
  template <typename F>
  void ForEachEntry(int v, F&& f) const {
    switch (kind_[v]) {
      case VarKind::kStructural:
        for (const auto& [r, a] : p_.columns[v].entries) f(r, a);
        break;
      case VarKind::kSlack:
        f(RowOfLogical(v), 1.0);
        break;
      case VarKind::kArtificial: {
        const int r = RowOfLogical(v);
        f(r, p_.rhs[r] < 0.0 ? -1.0 : 1.0);
        break;
      }
    }
  }

  int RowOfLogical(int v) const {
    const int id = id_of_[v];
    return kind_[v] == VarKind::kSlack ? -id - 1 : -id - rows_ - 1;
  }

  int VarOfId(int id) const {
    if (id >= 0) return id < cols_ ? id : -1;
    const int k = -id - 1;
    if (k < rows_) return slack_var_[k];
    if (k < 2 * rows_) return art_var_[k - rows_];
    return -1;
  }

  void ColdBasis() {
    basis_.assign(rows_, -1);
    for (int r = 0; r < rows_; ++r) {
      const bool use_slack =
          p_.relations[r] == Relation::kLessEqual && p_.rhs[r] >= 0.0;
      basis_[r] = use_slack ? slack_var_[r] : art_var_[r];
    }
    ResetBasic();
  }

  void ResetBasic() {
    in_basis_.assign(vars_, 0);
    for (int v : basis_) in_basis_[v] = 1;
  }

  bool TryWarmStart() {
    if (static_cast<int>(warm_.size()) != rows_) return false;
    basis_.assign(rows_, -1);
    std::vector<char> seen(vars_, 0);
    for (int r = 0; r < rows_; ++r) {
      const int v = VarOfId(warm_[r]);
      if (v < 0 || seen[v]) return false;
      seen[v] = 1;
      basis_[r] = v;
    }
    ResetBasic();
    if (!Refactor()) return false;
    for (int r = 0; r < rows_; ++r) {
      if (x_[r] < -kFeasTol) return false;
      if (kind_[basis_[r]] == VarKind::kArtificial && std::abs(x_[r]) > kFeasTol) {
        return false;
      }
    }
    return true;
  }

  bool Refactor() {
    Eigen::MatrixXd basis_matrix = Eigen::MatrixXd::Zero(rows_, rows_);
    for (int r = 0; r < rows_; ++r) {
      ForEachEntry(basis_[r], [&](int row, double a) { basis_matrix(row, r) = a; });
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (!(lu.rcond() > 1e-12)) return false;
    binv_ = lu.inverse();
    x_ = binv_ * b_;
    since_refactor_ = 0;
    return true;
  }

  Eigen::VectorXd Duals(const std::vector<double>& cost) const {
    Eigen::VectorXd cb(rows_);
    for (int r = 0; r < rows_; ++r) cb[r] = cost[basis_[r]];
    return binv_.transpose() * cb;
  }

  LpStatus Iterate(const std::vector<double>& cost, bool phase2) {
    bool bland = false;
    int degenerate_run = 0;
    const int stall_limit = 5 * (rows_ + cols_);
    Eigen::VectorXd column(rows_);
    while (true) {
      if (iterations_ >= max_iterations_) return LpStatus::kNumericalFailure;
      if (since_refactor_ >= kRefactorEvery && !Refactor()) {
        return LpStatus::kNumericalFailure;
      }
      const Eigen::VectorXd y = Duals(cost);

      int entering = -1;
      double best = kOptTol;
      for (int v = 0; v < vars_; ++v) {
        if (in_basis_[v]) continue;
        if (phase2 && kind_[v] == VarKind::kArtificial) continue;
        double d = cost[v];
        ForEachEntry(v, [&](int r, double a) { d -= y[r] * a; });
        if (d > best) {
          entering = v;
          if (bland) break;
          best = d;
        }
      }
      if (entering < 0) return LpStatus::kOptimal;

      column.setZero();
      ForEachEntry(entering, [&](int r, double a) { column += a * binv_.col(r); });

      int leave = -1;
      double theta = std::numeric_limits<double>::infinity();
      double leave_alpha = 0.0;
      for (int r = 0; r < rows_; ++r) {
        const double alpha = column[r];
        double ratio;
        if (phase2 && kind_[basis_[r]] == VarKind::kArtificial) {
          // Artificials are fixed at zero once phase 1 is over.
          if (std::abs(alpha) <= kPivotTol) continue;
          ratio = 0.0;
        } else {
          if (alpha <= kPivotTol) continue;
          ratio = std::max(x_[r], 0.0) / alpha;
        }
        bool better;
        if (leave < 0 || ratio < theta - 1e-12) {
          better = true;
        } else if (ratio <= theta + 1e-12) {
          better = bland ? id_of_[basis_[r]] < id_of_[basis_[leave]]
                         : std::abs(alpha) > std::abs(leave_alpha);
        } else {
          better = false;
        }
        if (better) {
          leave = r;
          theta = ratio;
          leave_alpha = alpha;
        }
      }
      if (leave < 0) {
        if (!phase2) return LpStatus::kNumericalFailure;
        return LpStatus::kUnbounded;
      }

      // Product-form update of the explicit inverse.
      x_ -= theta * column;
      x_[leave] = theta;
      const Eigen::RowVectorXd pivot_row = binv_.row(leave) / leave_alpha;
      binv_ -= column * pivot_row;
      binv_.row(leave) = pivot_row;
      in_basis_[basis_[leave]] = 0;
      basis_[leave] = entering;
      in_basis_[entering] = 1;
      ++iterations_;
      ++since_refactor_;

      if (theta < 1e-12) {
        if (++degenerate_run > stall_limit) bland = true;
      } else {
        degenerate_run = 0;
      }
    }
  }

  const LpProblem& p_;
  int rows_;
  int cols_;
  int vars_ = 0;
  int max_iterations_ = 0;
  int iterations_ = 0;
  int since_refactor_ = 0;
  std::vector<int> id_of_;
  std::vector<VarKind> kind_;
  std::vector<int> slack_var_;
  std::vector<int> art_var_;
  std::vector<int> basis_;
  std::vector<char> in_basis_;
  std::vector<int> warm_;
  Eigen::VectorXd b_;
  Eigen::VectorXd x_;
  Eigen::MatrixXd binv_;
};

}  // namespace

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kNumericalFailure:
      return "numerical-failure";
  }
  return "unknown";
}

LpResult SolveLp(const LpProblem& problem, const LpOptions& options) {
  if (problem.num_rows() == 0) return {};
  LpResult result = Simplex(problem, options).Run();
  if (result.status == LpStatus::kOptimal &&
      !CheckCertificate(problem, result).ok()) {
    if (result.warm_started) {
      LpOptions cold = options;
      cold.warm_basis.clear();
      return SolveLp(problem, cold);
    }
    result.status = LpStatus::kNumericalFailure;
  }
  return result;
}

double LpCertificate::duality_gap() const {
  return std::abs(primal_objective - dual_objective);
}

bool LpCertificate::ok() const {
  return primal_infeasibility <= 1e-7 && dual_infeasibility <= 1e-7 &&
         duality_gap() <= 1e-6 * (1.0 + std::abs(primal_objective)) &&
         row_complementarity <= 1e-6 && column_complementarity <= 1e-6;
}

LpCertificate CheckCertificate(const LpProblem& problem, const LpResult& result) {
  LpCertificate cert;
  const int rows = problem.num_rows();
  std::vector<double> activity(rows, 0.0);
  for (int j = 0; j < problem.num_columns(); ++j) {
    const auto& col = problem.columns[j];
    const double x = result.primal[j];
    cert.primal_objective += col.cost * x;
    cert.primal_infeasibility = std::max(cert.primal_infeasibility, -x);
    double reduced = col.cost;
    for (const auto& [r, a] : col.entries) {
      activity[r] += a * x;
      reduced -= result.duals[r] * a;
    }
    cert.dual_infeasibility = std::max(cert.dual_infeasibility, reduced);
    cert.column_complementarity =
        std::max(cert.column_complementarity, std::abs(reduced * x));
  }
  for (int r = 0; r < rows; ++r) {
    const double y = result.duals[r];
    cert.dual_objective += problem.rhs[r] * y;
    const double slack = problem.rhs[r] - activity[r];
    if (problem.relations[r] == Relation::kEqual) {
      cert.primal_infeasibility = std::max(cert.primal_infeasibility, std::abs(slack));
    } else {
      cert.primal_infeasibility = std::max(cert.primal_infeasibility, -slack);
      cert.dual_infeasibility = std::max(cert.dual_infeasibility, -y);
      cert.row_complementarity =
          std::max(cert.row_complementarity, std::abs(y * slack));
    }
  }
  return cert;
}

}  // namespace bbap
