"""End-to-end pipeline: ansatz -> rank condition -> elimination -> equations.

Runs are cached per (j, c, max_rounds) because several verification checks
share them.  Artifact writers emit the stable JSON/text formats; everything
except wall-clock and memory statistics is byte-deterministic.
"""

from __future__ import annotations

import json
import resource
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .alpha import AlphaCase, SymPolyMatrix, build_ansatz, make_table
from .elim import (
    EliminationState,
    back_substitute,
    driver,
    resolve_dependencies,
    survivors,
)
from .rc import RCSystem, build_l_ansatz, extract_system, rc_residuals
from .ring import Polynomial
from .surface import SurfaceEquations, collect_Gm, generate_equations, remove_r

R_NAMES = tuple(f"r{k}" for k in range(1, 372))
GB_NAMES = tuple([f"g{k}" for k in range(1, 11)] + [f"b{k}" for k in range(1, 13)])


@dataclass
class PipelineResult:
    case: AlphaCase
    table: object
    alpha0: SymPolyMatrix
    params: list
    l0: object
    system: RCSystem
    elim: EliminationState
    resolved: dict
    alpha_final: SymPolyMatrix
    l_final: dict
    equations_raw: SurfaceEquations
    equations: SurfaceEquations
    gm: dict
    gbd_survivors: list
    r_survivors: list
    wall_time: float
    peak_kb: int
    _det: Optional[Polynomial] = field(default=None, repr=False)

    def det_final(self) -> Polynomial:
        if self._det is None:
            self._det = self.alpha_final.determinant()
        return self._det


_CACHE: dict = {}


def run_pipeline(j: int, c: int, max_rounds: int = 10) -> PipelineResult:
    key = (j, c, max_rounds)
    if key in _CACHE:
        return _CACHE[key]
    t0 = time.monotonic()
    case = AlphaCase(j, c)
    table = make_table(j)
    alpha0, params = build_ansatz(case, table)
    l0 = build_l_ansatz(alpha0, case)
    residuals = rc_residuals(alpha0, l0)
    system = extract_system(residuals, case)
    invertible = ("d",) if j == 2 else ()
    state = driver(system.f, list(R_NAMES), list(GB_NAMES), max_rounds, invertible)
    resolved = resolve_dependencies(state.deps)
    alpha_final = back_substitute(alpha0, state.deps, resolved)
    alpha_final.check_pattern()
    l_final = back_substitute(l0.polys, state.deps, resolved)
    gbd = survivors(params, state.deps)
    r_present = sorted(
        {
            n
            for p in list(l_final.values()) + [alpha_final[i, j2] for i in range(1, 7) for j2 in range(i, 7)]
            for n in p.variables()
            if n.startswith("r") and n != "r"
        },
        key=lambda n: table.index[n],
    )
    equations_raw = generate_equations(alpha_final, l_final, case, gbd)
    gm = collect_Gm(equations_raw)
    equations = remove_r(equations_raw)
    result = PipelineResult(
        case=case,
        table=table,
        alpha0=alpha0,
        params=params,
        l0=l0,
        system=system,
        elim=state,
        resolved=resolved,
        alpha_final=alpha_final,
        l_final=l_final,
        equations_raw=equations_raw,
        equations=equations,
        gm=gm,
        gbd_survivors=gbd,
        r_survivors=r_present,
        wall_time=time.monotonic() - t0,
        peak_kb=resource.getrusage(resource.RUSAGE_SELF).ru_maxrss,
    )
    _CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# serialization


def coeff_str(c) -> str:
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def poly_to_json(p: Polynomial) -> dict:
    table = p.table
    terms = []
    for m, c in p.sorted_terms():
        terms.append(
            {
                "coeff": coeff_str(c),
                "exps": {table.names[v]: e for v, e in m},
            }
        )
    return {"text": str(p), "terms": terms}


def alpha_to_json(result: PipelineResult) -> dict:
    return {
        "case": {"alpha": result.case.j, "c": result.case.c},
        "parameters": result.params,
        "survivors": result.gbd_survivors,
        "matrix": [
            [poly_to_json(p) for p in row] for row in result.alpha_final.rows
        ],
    }


def equations_to_json(result: PipelineResult) -> dict:
    return {
        "case": {"alpha": result.case.j, "c": result.case.c},
        "variables": [
            result.table.names[v] for v in range(result.table.geo_cut)
        ],
        "parameters": result.gbd_survivors,
        "equations": [
            {
                "label": eq.label,
                "weighted_degree": eq.degree,
                "sigma_sign": eq.sign,
                **poly_to_json(eq.poly),
            }
            for eq in result.equations.eqs
        ],
    }


def deps_log_text(result: PipelineResult) -> str:
    lines = [f"{dep.var} := {dep.expr}" for dep in result.elim.deps]
    return "\n".join(lines) + "\n"


def stats_dict(result: PipelineResult) -> dict:
    return {
        "case": {"alpha": result.case.j, "c": result.case.c},
        "initial_f": len(result.system.f),
        "distinct_parameters": result.system.param_count,
        "r_count": result.l0.r_count,
        "rounds": [
            {
                "stage": r.stage,
                "n": r.n,
                "eliminated": r.eliminated,
                "f_size": r.f_size,
                "seconds": round(r.seconds, 6),
                "peak_kb": r.peak_kb,
            }
            for r in result.elim.round_log
        ],
        "dependencies": len(result.elim.deps),
        "survivors": result.gbd_survivors,
        "r_survivors": len(result.r_survivors),
        "equations": len(result.equations.eqs),
        "wall_time_s": round(result.wall_time, 6),
        "peak_memory_kb": result.peak_kb,
    }


def write_artifacts(
    result: PipelineResult,
    out_dir,
    emit: Sequence[str] = ("alpha", "equations", "deps", "stats"),
) -> list:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if "alpha" in emit:
        path = out / "alpha.json"
        path.write_text(json.dumps(alpha_to_json(result), indent=1) + "\n")
        written.append(path)
    if "equations" in emit:
        path = out / "equations.json"
        path.write_text(json.dumps(equations_to_json(result), indent=1) + "\n")
        written.append(path)
    if "deps" in emit:
        path = out / "deps.log"
        path.write_text(deps_log_text(result))
        written.append(path)
    if "stats" in emit:
        path = out / "stats.json"
        path.write_text(json.dumps(stats_dict(result), indent=1) + "\n")
        written.append(path)
    return written
