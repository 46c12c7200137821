// Small dense revised simplex for restricted master problems.
//
//   maximize    c^T x
//   subject to  a_r^T x (= or <=) b_r   for every row r
//               x >= 0
//
// The problem is stored column-wise because column generation appends
// columns. Basis factorization is an explicit dense inverse refreshed from an
// LU factorization; rows stay in the tens, so nothing sparse is needed.

#ifndef BBAP_LP_H_
#define BBAP_LP_H_

#include <utility>
#include <vector>

namespace bbap {

enum class Relation { kEqual, kLessEqual };

struct LpColumn {
  double cost = 0.0;
  std::vector<std::pair<int, double>> entries;  // (row, coefficient)
};

struct LpProblem {
  std::vector<Relation> relations;
  std::vector<double> rhs;
  std::vector<LpColumn> columns;

  int AddRow(Relation rel, double b) {
    relations.push_back(rel);
    rhs.push_back(b);
    return static_cast<int>(rhs.size()) - 1;
  }
  int AddColumn(double cost, std::vector<std::pair<int, double>> entries) {
    columns.push_back({cost, std::move(entries)});
    return static_cast<int>(columns.size()) - 1;
  }
  int num_rows() const { return static_cast<int>(rhs.size()); }
  int num_columns() const { return static_cast<int>(columns.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

const char* ToString(LpStatus status);

// Basis members: a structural column j is encoded as j, the slack of row r
// as SlackId(r) and the artificial of row r as ArtificialId(r, rows). These
// ids survive appending columns, which is what warm starts rely on.
constexpr int SlackId(int row) { return -(row + 1); }
constexpr int ArtificialId(int row, int rows) { return -(rows + row + 1); }

struct LpResult {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> primal;  // per column
  std::vector<double> duals;   // per row
  double objective = 0.0;
  std::vector<int> basis;      // one id per row, see SlackId
  int iterations = 0;
  bool warm_started = false;
};

struct LpOptions {
  // Starting basis. Used when it factors and is primal feasible (basic
  // artificials at zero); otherwise the solver falls back to phase 1.
  std::vector<int> warm_basis;
  int max_iterations = 0;  // 0 picks 50 * (rows + columns) + 1000
};

LpResult SolveLp(const LpProblem& problem, const LpOptions& options = {});

// Optimality certificate of a claimed optimal result, all in absolute terms.
struct LpCertificate {
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double primal_infeasibility = 0.0;  // row residuals and negative x
  double dual_infeasibility = 0.0;    // positive reduced costs, negative <=-duals
  double row_complementarity = 0.0;   // max |dual * slack|
  double column_complementarity = 0.0;  // max |reduced cost * x|

  double duality_gap() const;
  // Tolerances of the LP contract: 1e-7 feasibility, 1e-6 * (1 + |obj|)
  // duality gap, 1e-6 complementary slackness.
  bool ok() const;
};

LpCertificate CheckCertificate(const LpProblem& problem, const LpResult& result);

}  // namespace bbap

#endif  // BBAP_LP_H_
