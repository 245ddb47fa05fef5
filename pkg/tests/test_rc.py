"""Tests for the rank-condition ansatz and coefficient system."""

import random
from fractions import Fraction

import pytest

from godeaux2.alpha import AlphaCase, SymPolyMatrix, build_ansatz, make_table
from godeaux2.rc import (
    PAIRS,
    LAnsatz,
    build_l_ansatz,
    cofactor_degree,
    extract_system,
    multiplier_degree,
    rc_residuals,
)


@pytest.fixture(scope="module")
def rc11():
    case = AlphaCase(1, 1)
    table = make_table(1)
    M, params = build_ansatz(case, table)
    l = build_l_ansatz(M, case)
    res = rc_residuals(M, l)
    system = extract_system(res, case)
    return case, table, M, l, res, system


def test_r_count_is_371(rc11):
    _, _, _, l, _, _ = rc11
    assert l.r_count == 371


def test_multiplier_degrees(rc11):
    assert multiplier_degree(2, 2, 6) == cofactor_degree(2, 2) - cofactor_degree(1, 6)
    assert multiplier_degree(2, 2, 6) == 14 - 12 == 2
    # negative required degree -> identically zero, no parameters
    _, _, _, l, _, _ = rc11
    for (i, j) in PAIRS:
        for k in range(1, 7):
            if multiplier_degree(i, j, k) < 0:
                assert l.polys[(i, j, k)].is_zero()


def test_every_r_in_exactly_one_slot(rc11):
    _, _, _, l, _, _ = rc11
    seen = {}
    for (i, j, k), p in l.polys.items():
        for name in p.variables():
            if name.startswith("r") and name != "r":
                assert name not in seen
                seen[name] = (i, j, k)
    assert len(seen) == 371


def test_multiplier_signs_match_cofactors(rc11):
    _, _, _, l, _, _ = rc11
    for (i, j, k), p in l.polys.items():
        if p.is_zero():
            continue
        bij = l.cofactors[(i, j)]
        b1k = l.cofactors[(1, k)]
        if bij.is_zero() or b1k.is_zero():
            continue
        assert p.sigma_sign() == bij.sigma_sign() * b1k.sigma_sign()


def test_residual_count_and_zero_l(rc11):
    _, table, M, l, res, _ = rc11
    assert len(res) == 15
    zero_l = LAnsatz(
        {key: table.zero() for key in l.polys},
        0,
        [],
        {},
        l.cofactors,
    )
    bare = rc_residuals(M, zero_l)
    for (i, j), r in zip(PAIRS, bare):
        assert r == l.cofactors[(i, j)]


def test_cofactor_symmetry(rc11):
    _, _, M, _, _, _ = rc11
    memo = {}
    for (i, j) in [(2, 3), (2, 6), (4, 5)]:
        assert M.cofactor(i, j, memo) == M.cofactor(j, i, memo)


def test_system_size_and_parameters(rc11):
    _, _, _, _, _, system = rc11
    assert len(system.f) == 876
    assert system.param_count == 394
    rs = [n for n in system.param_names if n.startswith("r") and n != "r"]
    assert len(rs) == 371


def test_f_entries_parameter_only_and_affine_in_r(rc11):
    _, table, _, _, _, system = rc11
    geo = set(system.geo_vars)
    r_names = {f"r{k}" for k in range(1, 372)}
    gb = [f"g{k}" for k in range(1, 11)] + [f"b{k}" for k in range(1, 13)]
    for p in system.f:
        names = p.variables()
        assert not (names & geo)
        assert p.max_degree_in(r_names) <= 1
        # degree <= 2 jointly in the g, b, r parameters (d is unconstrained)
        assert p.max_degree_in(set(gb) | r_names) <= 2


def test_extraction_commutes_with_specialization(rc11):
    _, table, _, _, res, system = rc11
    rng = random.Random(17)
    spec = {
        n: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        for n in system.param_names
    }
    # specialize a residual, re-extract, compare with specializing f directly
    target = res[3]
    specialized = target.substitute(spec)
    direct = {}
    for mono, coeff in target.coefficients_wrt(system.geo_vars):
        direct[mono] = coeff.substitute(spec).constant_part()
    recomputed = dict(
        (m, c.constant_part())
        for m, c in specialized.coefficients_wrt(system.geo_vars)
    )
    assert {m: c for m, c in direct.items() if c} == recomputed


def test_l_lives_on_four_variables(rc11):
    _, _, _, l, _, _ = rc11
    allowed = {"x", "y1", "y2", "y3"}
    for p in l.polys.values():
        geo = {n for n in p.variables() if not n[0] in "rgbd"}
        assert geo <= allowed


def test_exact_multipliers_give_zero_residuals():
    """With the exact single-column multipliers of the x=0 diagonal-type
    matrix, every residual vanishes identically."""
    from godeaux2.verify import curve_table, excluded_diagonal_matrix, excluded_diagonal_multipliers

    table = curve_table()
    M = excluded_diagonal_matrix(table)
    L = excluded_diagonal_multipliers(table)
    betas = M.cofactors([(1, k) for k in range(1, 7)] + list(PAIRS))
    zero = table.zero()
    polys = {}
    for (i, j) in PAIRS:
        for k in range(1, 7):
            polys[(i, j, k)] = L[i - 1][j - 1] if k == 6 else zero
    exact = LAnsatz(polys, 0, [], {}, betas)
    for res in rc_residuals(M, exact):
        assert res.is_zero()


def test_system_dump_is_stable(rc11):
    _, _, _, _, _, system = rc11
    dump = system.dump_text()
    lines = dump.splitlines()
    assert len(lines) == 876
    assert lines[0].startswith("[22:")
    assert dump == system.dump_text()
