"""Rank-condition ansatz: multipliers l_ij^k and the coefficient system f.

The rank condition asks every cofactor beta_ij to be an A-combination of the
first-row cofactors: beta_ij = sum_k l_ij^k beta_1k.  The 15 unordered pairs
(i, j), 2 <= i <= j <= 6 carry the content (pairs with i = 1 are tautological).
Each l_ij^k is a generic polynomial over {x, y1, y2, w} of the forced weighted
degree and sigma-sign, one fresh r-parameter per basis monomial; the forced
degree is deg(beta_ij) - deg(beta_1k) and negative degrees mean l = 0.

Flattening the 15 residuals beta_ij - sum_k l_ij^k beta_1k along geometric
monomials yields the system f of parameter polynomials, affine in the r's.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alpha import ROW_WEIGHTS, AlphaCase, SymPolyMatrix, entry_sign
from .ring import Polynomial, RingError, lex_descending, monomial_basis

PAIRS = tuple((i, j) for i in range(2, 7) for j in range(i, 7))

EXPECTED_R_COUNT = 371


class RCError(RingError):
    pass


def cofactor_degree(i: int, j: int) -> int:
    return 16 - ROW_WEIGHTS[i - 1] - ROW_WEIGHTS[j - 1]


def multiplier_degree(i: int, j: int, k: int) -> int:
    return cofactor_degree(i, j) - cofactor_degree(1, k)


def multiplier_sign(i: int, j: int, k: int) -> int:
    return entry_sign(i, j) * entry_sign(1, k)


@dataclass
class LAnsatz:
    """Generic multipliers with one fresh r-parameter per monomial slot."""

    polys: dict  # (i, j, k) -> Polynomial
    r_count: int
    r_names: list
    slot_of: dict  # r name -> (i, j, k, mono)
    cofactors: dict  # (i, j) -> beta_ij, for row 1 and all pairs

    def poly(self, i: int, j: int, k: int) -> Polynomial:
        if i > j:
            i, j = j, i
        return self.polys[(i, j, k)]


def compute_cofactors(alpha: SymPolyMatrix) -> dict:
    """beta_1k for k = 1..6 plus beta_ij for the 15 pairs, one shared cache."""
    wanted = [(1, k) for k in range(1, 7)] + list(PAIRS)
    betas = alpha.cofactors(wanted)
    for (i, j), b in betas.items():
        if b.is_zero():
            continue
        if b.weighted_degree() != cofactor_degree(i, j):
            raise RCError(
                f"cofactor ({i},{j}) has degree {b.weighted_degree()}, "
                f"wants {cofactor_degree(i, j)}"
            )
        if b.sigma_sign() != entry_sign(i, j):
            raise RCError(f"cofactor ({i},{j}) is not a pure sigma eigenvector")
    return betas


def build_l_ansatz(alpha: SymPolyMatrix, case: AlphaCase) -> LAnsatz:
    """Multiplier ansatz for the given matrix; r-slots are numbered over pairs
    (2,2),(2,3),...,(6,6), then k = 1..6, then descending lex monomials."""
    table = alpha.table
    betas = compute_cofactors(alpha)
    geo = list(case.geo4)
    polys = {}
    r_names = []
    slot_of = {}
    counter = 0
    for (i, j) in PAIRS:
        for k in range(1, 7):
            deg = multiplier_degree(i, j, k)
            if deg < 0:
                polys[(i, j, k)] = table.zero()
                continue
            sign = multiplier_sign(i, j, k)
            monos = lex_descending(table, monomial_basis(table, deg, sign, geo))
            p = table.zero()
            for m in monos:
                counter += 1
                name = f"r{counter}"
                if name not in table.index:
                    raise RCError("variable table has too few r-parameters")
                r_names.append(name)
                slot_of[name] = (i, j, k, m)
                p = p + table.var(name) * Polynomial(table, {m: 1})
            polys[(i, j, k)] = p
    if counter != EXPECTED_R_COUNT:
        raise RCError(
            f"multiplier ansatz has {counter} parameters, expected {EXPECTED_R_COUNT}"
        )
    return LAnsatz(polys, counter, r_names, slot_of, betas)


def rc_residuals(alpha: SymPolyMatrix, l: LAnsatz) -> list:
    """The 15 residuals beta_ij - sum_k l_ij^k beta_1k, in pair order."""
    betas = l.cofactors
    out = []
    for (i, j) in PAIRS:
        acc = betas[(i, j)]
        for k in range(1, 7):
            lp = l.polys[(i, j, k)]
            if lp.is_zero():
                continue
            acc = acc - lp * betas[(1, k)]
        out.append(acc)
    return out


@dataclass
class RCSystem:
    """The flattened coefficient system.

    f[k] is a polynomial purely in parameters; provenance[k] = (pair, mono)
    records the residual and geometric monomial it came from.  Coefficients
    that repeat verbatim across slots are kept once (first occurrence): the
    system size 876 for alpha_1, c=1 counts distinct coefficients (the raw
    flattening has 896 slots with 20 exact repeats).
    """

    residuals: list
    f: list
    provenance: list
    param_names: list  # distinct parameters occurring in f, table order
    geo_vars: tuple

    @property
    def param_count(self) -> int:
        return len(self.param_names)

    def dump_text(self) -> str:
        """Ordered canonical text of the f entries, for diffing across runs."""
        lines = []
        for (pair, mono), p in zip(self.provenance, self.f):
            table = p.table
            lines.append(f"[{pair[0]}{pair[1]}:{table.mono_str(mono) or '1'}] {p}")
        return "\n".join(lines) + "\n"


def extract_system(residuals: list, case: AlphaCase) -> RCSystem:
    if len(residuals) != len(PAIRS):
        raise RCError("expected one residual per unordered pair")
    geo = case.geo4
    table = None
    f = []
    provenance = []
    seen_params = set()
    seen_coeffs = set()
    for pair, res in zip(PAIRS, residuals):
        if res.is_zero():
            continue
        table = res.table
        geo_idx = {table.index[n] for n in geo}
        for mono, coeff in res.coefficients_wrt(geo):
            support = coeff.support()
            if support & geo_idx:
                raise RCError(
                    f"coefficient of residual {pair} involves a geometric variable"
                )
            key = frozenset(coeff.terms.items())
            if key in seen_coeffs:
                continue
            seen_coeffs.add(key)
            f.append(coeff)
            provenance.append((pair, mono))
            seen_params |= support
    names = [table.names[v] for v in sorted(seen_params)] if table is not None else []
    return RCSystem(residuals, f, provenance, names, tuple(geo))
