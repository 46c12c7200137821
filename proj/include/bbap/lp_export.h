// Writes the compact assignment model in the CPLEX LP text format so an
// external MILP solver can cross-check results.
//
// Variables are x_<belt>_<flight>_<start>_<duration> (sorted flight
// indices), one per admissible tuple. Rows: assign_<flight> (each flight
// exactly once) and prec_<belt>_<j>_<j'> for every compatible pair j < j'
// on a belt, the big-M non-overlap/precedence row
//   sum (t + w + T) x_j + sum (T - t) x_j' <= 2 T,   T = t_max.

#ifndef BBAP_LP_EXPORT_H_
#define BBAP_LP_EXPORT_H_

#include <ostream>
#include <string>

#include "bbap/instance.h"

namespace bbap {

void ExportCompactLp(const Instance& inst, std::ostream& out);
std::string CompactLpString(const Instance& inst);

}  // namespace bbap

#endif  // BBAP_LP_EXPORT_H_
