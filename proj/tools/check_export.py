#!/usr/bin/env python3
"""Solve an exported compact model with HiGHS and print its objective.

Usage: check_export.py MODEL.lp [EXPECTED]

With EXPECTED, exits 0 iff the MILP optimum equals it (integer profits, so
the comparison is on the rounded objective) and 1 otherwise. Exits 2 when the
model is infeasible and 3 when highspy is missing.
"""

import sys


def main(argv):
    if len(argv) not in (2, 3):
        print(__doc__.strip(), file=sys.stderr)
        return 2
    try:
        import highspy
    except ImportError:
        print("highspy not available", file=sys.stderr)
        return 3

    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    h.setOptionValue("threads", 1)
    if h.readModel(argv[1]) != highspy.HighsStatus.kOk:
        print(f"cannot read {argv[1]}", file=sys.stderr)
        return 2
    h.run()
    status = h.getModelStatus()
    if status == highspy.HighsModelStatus.kInfeasible:
        print("infeasible")
        return 0 if len(argv) == 3 and argv[2] == "infeasible" else 2
    if status != highspy.HighsModelStatus.kOptimal:
        print(f"status {h.modelStatusToString(status)}", file=sys.stderr)
        return 2
    objective = round(h.getInfo().objective_function_value)
    print(objective)
    if len(argv) == 3:
        return 0 if argv[2] == str(objective) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
