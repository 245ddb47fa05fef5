"""The symmetric 6x6 matrix families alpha_j and their linear algebra.

A valid matrix is graded by row weights (4, 1, 1, 1, 1, 0): entry (i, j) is
weighted-homogeneous of degree w_i + w_j, so det has weighted degree 16 (the
bicanonical octic).  Rows carry the involution characters (+, -, -, +, +, -);
entry (i, j) is a pure eigenvector of sign -eps_i*eps_j.

Case j selects the linear constraint tying the auxiliary degree-2 variable to
the others (j=1: y4 = d*y3, j=2: y3 = -2d*y1 cleared of denominators, j=3:
y3 = 0); c in {0, 1} is the central x^2 coefficient.  The border polynomials
G, q1..q4 are generic of weighted degrees 6 and 4 with signs (-, -, -, +, +),
subject to the 8-slot normalization that row/column operations allow, leaving
10 g-parameters and 12 b-parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .ring import (
    ALGEBRAIC,
    GEOMETRIC,
    PARAMETER,
    Polynomial,
    RewriteRule,
    RingError,
    VariableTable,
    lex_descending,
    monomial_basis,
)

ROW_WEIGHTS = (4, 1, 1, 1, 1, 0)
ROW_SIGNS = (1, -1, -1, 1, 1, -1)

DEFAULT_R_COUNT = 380


class PatternError(RingError):
    pass


def entry_degree(i: int, j: int) -> int:
    """Required weighted degree of entry (i, j), 1-based."""
    return ROW_WEIGHTS[i - 1] + ROW_WEIGHTS[j - 1]


def entry_sign(i: int, j: int) -> int:
    """Required sigma-sign of entry (i, j), 1-based."""
    return -ROW_SIGNS[i - 1] * ROW_SIGNS[j - 1]


@dataclass(frozen=True)
class AlphaCase:
    """A member (j, c) of the three-by-two family of matrix shapes."""

    j: int
    c: int

    def __post_init__(self):
        if self.j not in (1, 2, 3) or self.c not in (0, 1):
            raise ValueError(f"invalid case (j={self.j}, c={self.c})")

    @property
    def w_name(self) -> str:
        """The surviving anti-invariant degree-2 variable besides y1."""
        return "y3" if self.j == 1 else "y4"

    @property
    def geo4(self) -> tuple:
        return ("x", "y1", "y2", self.w_name)

    @property
    def label(self) -> str:
        return f"alpha_{self.j}_c_{self.c}"


def make_table(j: int, r_count: int = DEFAULT_R_COUNT) -> VariableTable:
    """Pipeline variable table for case j.

    Geometric: x, y1, y2, y3|y4, z1..z4, t.  Parameters: d, g1..g10, b1..b12,
    r1..rN.  Trailing algebraic symbols i (i^2 = -1), r (r^2 = -15) and s make
    quadratic-extension specializations plain substitutions on the same table.
    """
    w = "y3" if j == 1 else "y4"
    entries = [
        ("x", 1, -1, GEOMETRIC),
        ("y1", 2, -1, GEOMETRIC),
        ("y2", 2, 1, GEOMETRIC),
        (w, 2, -1, GEOMETRIC),
        ("z1", 3, -1, GEOMETRIC),
        ("z2", 3, -1, GEOMETRIC),
        ("z3", 3, 1, GEOMETRIC),
        ("z4", 3, 1, GEOMETRIC),
        ("t", 4, -1, GEOMETRIC),
        ("d", 0, 1, PARAMETER),
    ]
    entries += [(f"g{k}", 0, 1, PARAMETER) for k in range(1, 11)]
    entries += [(f"b{k}", 0, 1, PARAMETER) for k in range(1, 13)]
    entries += [(f"r{k}", 0, 1, PARAMETER) for k in range(1, r_count + 1)]
    entries += [("i", 0, 1, ALGEBRAIC), ("r", 0, 1, ALGEBRAIC), ("s", 0, 1, ALGEBRAIC)]
    rules = [
        RewriteRule("i", 2, {(): -1}),
        RewriteRule("r", 2, {(): -15}),
    ]
    return VariableTable(entries, rules=rules)


# ---------------------------------------------------------------------------
# matrices


class SymPolyMatrix:
    """Symmetric 6x6 matrix of polynomials.  All indices are 1-based."""

    __slots__ = ("table", "rows")

    def __init__(self, rows: Sequence[Sequence[Polynomial]]):
        if len(rows) != 6 or any(len(r) != 6 for r in rows):
            raise PatternError("matrix must be 6x6")
        self.table = rows[0][0].table
        for r in rows:
            for p in r:
                if p.table is not self.table:
                    raise PatternError("mixed variable tables in matrix")
        for a in range(6):
            for b in range(a + 1, 6):
                if rows[a][b] != rows[b][a]:
                    raise PatternError(f"matrix not symmetric at ({a + 1},{b + 1})")
        self.rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPolyMatrix) and self.rows == other.rows

    def map_entries(self, fn) -> "SymPolyMatrix":
        return SymPolyMatrix([[fn(p) for p in row] for row in self.rows])

    def substitute(self, bindings) -> "SymPolyMatrix":
        return self.map_entries(lambda p: p.substitute(bindings))

    def check_pattern(self) -> None:
        """Enforce the degree and sign pattern; raises PatternError."""
        for i in range(1, 7):
            for j in range(i, 7):
                p = self[i, j]
                if p.is_zero():
                    continue
                d = p.weighted_degree()
                if (i, j) == (6, 6):
                    if d != 0:
                        raise PatternError("entry (6,6) must be 0 or a constant")
                    continue
                if d != entry_degree(i, j):
                    raise PatternError(
                        f"entry ({i},{j}) has degree {d}, wants {entry_degree(i, j)}"
                    )
                if p.sigma_sign() != entry_sign(i, j):
                    raise PatternError(
                        f"entry ({i},{j}) sign {p.sigma_sign()}, wants {entry_sign(i, j)}"
                    )

    # -- determinants --------------------------------------------------------

    def _minor_det(self, rows: tuple, cols: tuple, memo: dict) -> Polynomial:
        key = (rows, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        n = len(rows)
        table = self.table
        if n == 0:
            return table.one()
        if n == 1:
            return self.rows[rows[0]][cols[0]]
        # expand along the line (row or column) with the most zero entries
        best_zeros, best_is_row, best_k = -1, True, 0
        for k, r in enumerate(rows):
            z = sum(1 for c in cols if self.rows[r][c].is_zero())
            if z > best_zeros:
                best_zeros, best_is_row, best_k = z, True, k
        for k, c in enumerate(cols):
            z = sum(1 for r in rows if self.rows[r][c].is_zero())
            if z > best_zeros:
                best_zeros, best_is_row, best_k = z, False, k
        acc = table.zero()
        if best_is_row:
            r = rows[best_k]
            sub_rows = rows[:best_k] + rows[best_k + 1 :]
            for k, c in enumerate(cols):
                e = self.rows[r][c]
                if e.is_zero():
                    continue
                minor = self._minor_det(sub_rows, cols[:k] + cols[k + 1 :], memo)
                term = e * minor
                acc = acc + (term if (best_k + k) % 2 == 0 else -term)
        else:
            c = cols[best_k]
            sub_cols = cols[:best_k] + cols[best_k + 1 :]
            for k, r in enumerate(rows):
                e = self.rows[r][c]
                if e.is_zero():
                    continue
                minor = self._minor_det(rows[:k] + rows[k + 1 :], sub_cols, memo)
                term = e * minor
                acc = acc + (term if (k + best_k) % 2 == 0 else -term)
        memo[key] = acc
        return acc

    def cofactor(self, i: int, j: int, memo: Optional[dict] = None) -> Polynomial:
        """Signed cofactor beta_ij = (-1)^(i+j) det(minor), 1-based."""
        if not (1 <= i <= 6 and 1 <= j <= 6):
            raise PatternError("cofactor indices must lie in 1..6")
        rows = tuple(k for k in range(6) if k != i - 1)
        cols = tuple(k for k in range(6) if k != j - 1)
        d = self._minor_det(rows, cols, {} if memo is None else memo)
        return d if (i + j) % 2 == 0 else -d

    def cofactors(self, pairs) -> dict:
        """Cofactors for many (i, j) pairs sharing one minor cache."""
        memo: dict = {}
        return {(i, j): self.cofactor(i, j, memo) for (i, j) in pairs}

    def determinant(self) -> Polynomial:
        return self._minor_det(tuple(range(6)), tuple(range(6)), {})

    def restrict_x0(self) -> "SymPolyMatrix":
        """Substitute x -> 0 in every entry."""
        zero = self.table.zero()
        return self.substitute({"x": zero})

    def congruence(self, P: Sequence[Sequence]) -> "SymPolyMatrix":
        """P * M * P^T for a 6x6 matrix P of polynomials/scalars."""
        table = self.table
        Pp = [
            [e if isinstance(e, Polynomial) else table.const(e) for e in row]
            for row in P
        ]
        if len(Pp) != 6 or any(len(r) != 6 for r in Pp):
            raise PatternError("congruence transform must be 6x6")
        B = [
            [
                sum((Pp[i][k] * self.rows[k][j] for k in range(6)), table.zero())
                for j in range(6)
            ]
            for i in range(6)
        ]
        C = [
            [
                sum((B[i][k] * Pp[j][k] for k in range(6)), table.zero())
                for j in range(6)
            ]
            for i in range(6)
        ]
        return SymPolyMatrix(C)

    def to_strings(self) -> list:
        return [[str(p) for p in row] for row in self.rows]

    def __repr__(self) -> str:
        return "SymPolyMatrix(\n  " + "\n  ".join(
            "[" + ", ".join(str(p) for p in row) + "]" for row in self.rows
        ) + "\n)"


def det_any(rows) -> Polynomial:
    """Determinant of a square matrix of polynomials (cofactor expansion)."""
    n = len(rows)
    table = None
    for row in rows:
        for e in row:
            if isinstance(e, Polynomial):
                table = e.table
                break
        if table:
            break
    if table is None:
        raise PatternError("matrix has no polynomial entries")
    grid = [
        [e if isinstance(e, Polynomial) else table.const(e) for e in row]
        for row in rows
    ]

    def rec(rws, cls):
        if len(rws) == 1:
            return grid[rws[0]][cls[0]]
        acc = table.zero()
        r = rws[0]
        for k, c in enumerate(cls):
            e = grid[r][c]
            if e.is_zero():
                continue
            term = e * rec(rws[1:], cls[:k] + cls[k + 1 :])
            acc = acc + (term if k % 2 == 0 else -term)
        return acc

    return rec(tuple(range(n)), tuple(range(n)))


# ---------------------------------------------------------------------------
# the ansatz


# q-monomials removed by the 8-parameter normalization, per case.  For j=1 this
# is the classical choice (row/column operations on l3..l6); for j=2,3 no
# operation feeds w^2 into q3, so the removable set differs.
_DROPPED = {
    1: {
        1: {"x^2*y1", "x^2*y3"},
        2: set(),
        3: {"y1^2", "y1*y3", "y3^2"},
        4: {"x^2*y2", "y1^2", "y2^2"},
    },
    2: {
        1: {"x^2*y1", "x^2*y4"},
        2: set(),
        3: {"y1^2"},
        4: {"x^2*y2", "y2^2", "y1^2", "y1*y4", "y4^2"},
    },
}
_DROPPED[3] = _DROPPED[2]


def ansatz_slots(case: AlphaCase, table: VariableTable) -> dict:
    """Monomial slots for G (g1..g10) and q1..q4 (b1..b12), in the descending
    lex layout the slot numbering follows."""
    geo = list(case.geo4)
    g_monos = lex_descending(table, monomial_basis(table, 6, -1, geo))
    if len(g_monos) != 10:
        raise PatternError("G ansatz must have 10 slots")
    out = {"G": g_monos}
    dropped = _DROPPED[case.j]
    for k, sign in ((1, -1), (2, -1), (3, 1), (4, 1)):
        monos = lex_descending(table, monomial_basis(table, 4, sign, geo))
        keep = [m for m in monos if table.mono_str(m) not in dropped[k]]
        out[f"q{k}"] = keep
    if sum(len(out[f"q{k}"]) for k in (1, 2, 3, 4)) != 12:
        raise PatternError("q ansatz must have 12 slots after normalization")
    return out


def build_ansatz(case: AlphaCase, table: Optional[VariableTable] = None):
    """The generic matrix of the family (j, c).

    Returns (matrix, parameter names).  The parameter list has 23 entries for
    j=1,2 (g1..g10, b1..b12, d) and 22 for j=3 (d does not occur there).
    """
    if table is None:
        table = make_table(case.j)
    slots = ansatz_slots(case, table)
    g_names = [f"g{k}" for k in range(1, 11)]
    G = table.zero()
    for name, m in zip(g_names, slots["G"]):
        G = G + table.var(name) * Polynomial(table, {m: 1})
    qs = []
    b_names = []
    b_index = 1
    for k in (1, 2, 3, 4):
        q = table.zero()
        for m in slots[f"q{k}"]:
            name = f"b{b_index}"
            b_names.append(name)
            b_index += 1
            q = q + table.var(name) * Polynomial(table, {m: 1})
        qs.append(q)
    x = table.var("x")
    y1 = table.var("y1")
    y2 = table.var("y2")
    w = table.var(case.w_name)
    d = table.var("d")
    cx2 = table.const(case.c) * x * x
    zero = table.zero()
    if case.j == 1:
        central = [
            [d * w, y1, y2, zero],
            [y1, w, cx2, y2],
            [y2, cx2, -w, y1],
            [zero, y2, y1, -(d * w)],
        ]
        Q = y1 * y1 - y2 * y2 - d * w * w
        params = g_names + b_names + ["d"]
    elif case.j == 2:
        central = [
            [w, y1, y2, zero],
            [y1, -2 * d * y1, cx2, y2],
            [y2, cx2, 2 * d * y1, y1],
            [zero, y2, y1, -w],
        ]
        Q = y1 * y1 - y2 * y2 + 2 * d * y1 * w
        params = g_names + b_names + ["d"]
    else:
        central = [
            [w, y1, y2, zero],
            [y1, zero, cx2, y2],
            [y2, cx2, zero, y1],
            [zero, y2, y1, -w],
        ]
        Q = y1 * y1 - y2 * y2
        params = g_names + b_names
    xqs = [x * q for q in qs]
    rows = [
        [x * x * G] + xqs + [Q],
        [xqs[0]] + central[0] + [x],
        [xqs[1]] + central[1] + [zero],
        [xqs[2]] + central[2] + [zero],
        [xqs[3]] + central[3] + [zero],
        [Q, x, zero, zero, zero, zero],
    ]
    M = SymPolyMatrix(rows)
    M.check_pattern()
    return M, params
