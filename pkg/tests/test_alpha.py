"""Tests for the matrix family construction and its linear algebra."""

import random
from fractions import Fraction

import pytest

from godeaux2.alpha import (
    AlphaCase,
    PatternError,
    SymPolyMatrix,
    build_ansatz,
    entry_degree,
    entry_sign,
    make_table,
)
from godeaux2.ring import GEOMETRIC, PARAMETER, Polynomial, VariableTable


@pytest.fixture(scope="module")
def case11():
    case = AlphaCase(1, 1)
    table = make_table(1)
    M, params = build_ansatz(case, table)
    return case, table, M, params


def diag_matrix(table, entries):
    zero = table.zero()
    return SymPolyMatrix(
        [[entries[i] if i == j else zero for j in range(6)] for i in range(6)]
    )


def test_ansatz_corner_entries(case11):
    _, table, M, _ = case11
    y1, y2, y3, d, x = (table.var(n) for n in ("y1", "y2", "y3", "d", "x"))
    assert M[6, 6].is_zero()
    assert M[1, 6] == y1 * y1 - y2 * y2 - d * y3 * y3
    assert M[2, 6] == x
    assert M[3, 4] == x * x  # c = 1
    assert M[3, 6].is_zero() and M[4, 6].is_zero() and M[5, 6].is_zero()


def test_ansatz_c0_kills_central_x2():
    M, _ = build_ansatz(AlphaCase(1, 0))
    assert M[3, 4].is_zero()


def test_ansatz_parameter_counts():
    for j, expected in ((1, 23), (2, 23), (3, 22)):
        M, params = build_ansatz(AlphaCase(j, 1))
        assert len(params) == expected
        M.check_pattern()


def test_ansatz_q_slots_match_expected_layout(case11):
    _, table, M, _ = case11
    x = table.var("x")
    q1 = M[1, 2].exact_divide(x)
    assert str(q1) == "b1*y1*y2 + b2*y2*y3"
    q2 = M[1, 3].exact_divide(x)
    assert str(q2) == "b3*x^2*y1 + b4*x^2*y3 + b5*y1*y2 + b6*y2*y3"
    q3 = M[1, 4].exact_divide(x)
    assert str(q3) == "b7*x^4 + b8*x^2*y2 + b9*y2^2"
    q4 = M[1, 5].exact_divide(x)
    assert str(q4) == "b10*x^4 + b11*y1*y3 + b12*y3^2"


def test_pattern_rejects_wrong_degree(case11):
    _, table, M, _ = case11
    rows = [list(r) for r in M.rows]
    rows[1][2] = rows[2][1] = table.var("x")  # degree 1 where 2 is required
    bad = SymPolyMatrix(rows)
    with pytest.raises(PatternError):
        bad.check_pattern()


def test_cofactor_of_diagonal():
    T = VariableTable(
        [(f"p{k}", 1, 1, GEOMETRIC) for k in range(1, 7)]
    )
    ps = [T.var(f"p{k}") for k in range(1, 7)]
    M = diag_matrix(T, ps)
    c = M.cofactor(1, 1)
    assert c == ps[1] * ps[2] * ps[3] * ps[4] * ps[5]
    assert M.determinant() == ps[0] * c


def test_determinant_identity_matrix(case11):
    _, table, _, _ = case11
    one = table.one()
    assert diag_matrix(table, [one] * 6).determinant() == one


def _random_specialization(table, params, rng):
    return {
        p: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for p in params
    }


def test_laplace_identity_small_symbolic():
    T = VariableTable(
        [("u", 1, 1, GEOMETRIC), ("v", 1, 1, GEOMETRIC)]
    )
    u, v = T.var("u"), T.var("v")
    zero, one = T.zero(), T.one()
    rows = [
        [u, v, zero, one, zero, zero],
        [v, u + v, v, zero, zero, zero],
        [zero, v, u, zero, one, zero],
        [one, zero, zero, v, zero, zero],
        [zero, zero, one, zero, u, v],
        [zero, zero, zero, zero, v, u],
    ]
    M = SymPolyMatrix(rows)
    det = M.determinant()
    memo = {}
    for i in range(1, 7):
        for k in range(1, 7):
            acc = T.zero()
            for j in range(1, 7):
                acc = acc + M[i, j] * M.cofactor(k, j, memo)
            assert acc == (det if i == k else T.zero())


def test_laplace_identity_on_alpha_specialized(case11):
    _, table, M, params = case11
    rng = random.Random(3)
    spec = _random_specialization(table, params, rng)
    Ms = M.substitute(spec)
    det = Ms.determinant()
    memo = {}
    for i, k in [(1, 1), (2, 2), (1, 3), (4, 2), (6, 6), (5, 1)]:
        acc = table.zero()
        for j in range(1, 7):
            acc = acc + Ms[i, j] * Ms.cofactor(k, j, memo)
        assert acc == (det if i == k else table.zero())


def test_congruence_identity(case11):
    _, table, M, _ = case11
    eye = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    assert M.congruence(eye) == M


def test_congruence_determinant_scaling(case11):
    _, table, M, params = case11
    rng = random.Random(11)
    spec = _random_specialization(table, params, rng)
    Ms = M.substitute(spec)
    P = [[table.const(rng.randint(-3, 3)) for _ in range(6)] for _ in range(6)]
    PM = SymPolyMatrix  # noqa: F841  (P itself need not be symmetric)
    C = Ms.congruence(P)
    detP = _dense_det(table, P)
    assert C.determinant() == detP * detP * Ms.determinant()


def _dense_det(table, P):
    n = len(P)
    if n == 1:
        return P[0][0]
    acc = table.zero()
    for k in range(n):
        if P[0][k].is_zero():
            continue
        minor = [row[:k] + row[k + 1 :] for row in P[1:]]
        term = P[0][k] * _dense_det(table, minor)
        acc = acc + (term if k % 2 == 0 else -term)
    return acc


def test_restrict_x0_gives_central_shape(case11):
    _, table, M, _ = case11
    R = M.restrict_x0()
    y1, y2, y3, d = (table.var(n) for n in ("y1", "y2", "y3", "d"))
    zero = table.zero()
    Q = y1 * y1 - y2 * y2 - d * y3 * y3
    expected = SymPolyMatrix(
        [
            [zero, zero, zero, zero, zero, Q],
            [zero, d * y3, y1, y2, zero, zero],
            [zero, y1, y3, zero, y2, zero],
            [zero, y2, zero, -y3, y1, zero],
            [zero, zero, y2, y1, -(d * y3), zero],
            [Q, zero, zero, zero, zero, zero],
        ]
    )
    assert R == expected
    assert R.restrict_x0() == R  # x-free matrix is a fixed point


def test_det_even_in_x(case11):
    _, table, M, params = case11
    rng = random.Random(5)
    spec = _random_specialization(table, params, rng)
    det = M.substitute(spec).determinant()
    xi = table.index["x"]
    for m in det.terms:
        for v, e in m:
            if v == xi:
                assert e % 2 == 0
    assert det.weighted_degree() == 16


def test_make_table_main_pipeline_geometry():
    table = make_table(1)
    geo = [
        (table.names[v], table.weights[v], table.signs[v])
        for v in range(table.geo_cut)
    ]
    assert geo == [
        ("x", 1, -1),
        ("y1", 2, -1),
        ("y2", 2, 1),
        ("y3", 2, -1),
        ("z1", 3, -1),
        ("z2", 3, -1),
        ("z3", 3, 1),
        ("z4", 3, 1),
        ("t", 4, -1),
    ]


def test_determinant_matches_independent_expansion(case11):
    # independent oracle: always-first-row cofactor expansion
    from godeaux2.alpha import det_any

    _, table, M, params = case11
    rng = random.Random(23)
    spec = _random_specialization(table, params, rng)
    Ms = M.substitute(spec)
    assert Ms.determinant() == det_any([list(row) for row in Ms.rows])
