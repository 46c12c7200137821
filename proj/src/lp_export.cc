#include "bbap/lp_export.h"

#include <sstream>
#include <vector>

namespace bbap {
namespace {

constexpr int kTermsPerLine = 6;

struct Var {
  int start;
  int duration;
  std::string name;
};

// Admissible (start, duration) pairs of a compatible pair, start-major.
std::vector<Var> Vars(const Instance& inst, int belt, int flight) {
  std::vector<Var> out;
  const auto& values = inst.durations(belt, flight).values;
  for (int t = inst.flight(flight).t_req; t < inst.t_max(); ++t) {
    for (int w : values) {
      if (t + w > inst.t_max()) continue;
      out.push_back({t, w,
                     "x_" + std::to_string(belt) + "_" + std::to_string(flight) +
                         "_" + std::to_string(t) + "_" + std::to_string(w)});
    }
  }
  return out;
}

// Writes "c1 v1 + c2 v2 - ..." wrapped over several lines.
class TermWriter {
 public:
  explicit TermWriter(std::ostream& out) : out_(out) {}

  void Add(std::int64_t coef, const std::string& var) {
    if (count_ > 0 && count_ % kTermsPerLine == 0) out_ << "\n   ";
    if (count_ == 0) {
      if (coef < 0) out_ << "- ";
    } else {
      out_ << (coef < 0 ? " - " : " + ");
    }
    out_ << (coef < 0 ? -coef : coef) << ' ' << var;
    ++count_;
  }
  int count() const { return count_; }

 private:
  std::ostream& out_;
  int count_ = 0;
};

}  // namespace

void ExportCompactLp(const Instance& inst, std::ostream& out) {
  const int n = inst.num_flights();
  const int m = inst.num_belts();
  const std::int64_t horizon = inst.t_max();

  std::vector<std::vector<std::vector<Var>>> vars(m, std::vector<std::vector<Var>>(n));
  for (int i = 0; i < m; ++i) {
    for (int j : inst.compatible_flights(i)) vars[i][j] = Vars(inst, i, j);
  }

  out << "\\ Baggage belt assignment, compact model\n";
  out << "Maximize\n obj: ";
  {
    TermWriter terms(out);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        for (const Var& v : vars[i][j]) {
          terms.Add(inst.profit(i, j, v.start, v.duration), v.name);
        }
      }
    }
    if (terms.count() == 0) out << "0";
  }
  out << "\nSubject To\n";

  for (int j = 0; j < n; ++j) {
    out << " assign_" << j << ": ";
    TermWriter terms(out);
    for (int i = 0; i < m; ++i) {
      for (const Var& v : vars[i][j]) terms.Add(1, v.name);
    }
    out << " = 1\n";
  }

  for (int i = 0; i < m; ++i) {
    const auto& flights = inst.compatible_flights(i);
    for (std::size_t a = 0; a < flights.size(); ++a) {
      for (std::size_t b = a + 1; b < flights.size(); ++b) {
        const int j = flights[a];
        const int jp = flights[b];
        out << " prec_" << i << '_' << j << '_' << jp << ": ";
        TermWriter terms(out);
        for (const Var& v : vars[i][j]) {
          terms.Add(v.start + v.duration + horizon, v.name);
        }
        for (const Var& v : vars[i][jp]) terms.Add(horizon - v.start, v.name);
        out << " <= " << 2 * horizon << "\n";
      }
    }
  }

  out << "Binaries\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const Var& v : vars[i][j]) out << ' ' << v.name << '\n';
    }
  }
  out << "End\n";
}

std::string CompactLpString(const Instance& inst) {
  std::ostringstream out;
  ExportCompactLp(inst, out);
  return out.str();
}

}  // namespace bbap
