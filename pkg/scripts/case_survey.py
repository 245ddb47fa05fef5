#!/usr/bin/env python3
"""Survey all six matrix cases (j, c): system sizes, whether the staged
elimination terminates, and the surviving moduli.

The (1,0) and (2,1) systems are expected to stall: their residual relations
contain products like b11*b12 that a constant-pivot eliminator cannot split.
The script reports the smallest residual polynomials for those.
"""

import argparse
import time

from godeaux2.alpha import AlphaCase, build_ansatz, make_table
from godeaux2.elim import EliminationError, driver, survivors
from godeaux2.pipeline import GB_NAMES, R_NAMES
from godeaux2.rc import build_l_ansatz, extract_system, rc_residuals


def survey(max_rounds: int) -> None:
    for j in (1, 2, 3):
        for c in (1, 0):
            t0 = time.monotonic()
            case = AlphaCase(j, c)
            table = make_table(j)
            alpha0, params = build_ansatz(case, table)
            l0 = build_l_ansatz(alpha0, case)
            system = extract_system(rc_residuals(alpha0, l0), case)
            invertible = ("d",) if j == 2 else ()
            head = f"alpha_{j} c={c}: |f|={len(system.f)} params={system.param_count}"
            try:
                state = driver(
                    system.f, list(R_NAMES), list(GB_NAMES), max_rounds, invertible
                )
            except EliminationError as err:
                left = sorted(err.state.f, key=lambda p: p.num_terms())
                print(f"{head}  STALLED ({len(err.state.f)} residuals, "
                      f"{time.monotonic() - t0:.1f}s)")
                for p in left[:3]:
                    print(f"    residual: {str(p)[:100]}")
                continue
            surv = survivors(params, state.deps)
            stages = "".join(r.stage for r in state.round_log)
            print(f"{head}  solved [{stages}] in {time.monotonic() - t0:.1f}s; "
                  f"survivors ({len(surv)}): {', '.join(surv)}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rounds", type=int, default=16)
    args = parser.parse_args()
    survey(args.max_rounds)
