"""Seeded random sweeps over every statement, with reproducible reports.

The same plan gives the same bytes whether it runs on one process or many.
"""
import time

from morleykit.constructions import DEG
from morleykit.verifier import Theorem, TrialPlan, run


def main():
    for theorem, trials, min_angle in (
        (Theorem.T1, 10_000, 5.0),
        (Theorem.T2, 1000, 5.0),
        (Theorem.T3, 1000, 5.0),
        (Theorem.T4, 1000, 5.0),
        (Theorem.T5_150, 1000, 5.0),
        (Theorem.T6, 100, 15.0),
    ):
        start = time.perf_counter()
        rep = run(TrialPlan(theorem, trials, 1, min_angle * DEG))
        print(f"{theorem.value:7s} pass {rep.pass_count:5d}/{trials:<5d} "
              f"not converged {rep.not_converged:3d}  max {rep.max_residual:.2e}  "
              f"p99 {rep.p99_residual:.2e}  {time.perf_counter() - start:.2f} s")

    plan = TrialPlan(Theorem.T3, 400, 7)
    same = run(plan).to_text() == run(plan, workers=4).to_text()
    print("serial and 4-process reports identical:", same)
    print()
    print(run(TrialPlan(Theorem.T1, 100, 42)).to_text(), end="")


if __name__ == "__main__":
    main()
