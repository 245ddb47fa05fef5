"""Property-based tests for the polynomial core (ring axioms, gradings,
division/sqrt round trips, substitution homomorphism, rewrite confluence)."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from godeaux2.ring import (
    ALGEBRAIC,
    GEOMETRIC,
    PARAMETER,
    Polynomial,
    RewriteRule,
    VariableTable,
    monomial_basis,
)

TABLE = VariableTable(
    [
        ("x", 1, -1, GEOMETRIC),
        ("y1", 2, -1, GEOMETRIC),
        ("y2", 2, 1, GEOMETRIC),
        ("d", 0, 1, PARAMETER),
    ]
)

coeffs = st.one_of(
    st.integers(min_value=-9, max_value=9).filter(bool),
    st.builds(Fraction, st.integers(-9, 9).filter(bool), st.integers(1, 5)),
)
exponents = st.integers(min_value=0, max_value=3)
monos = st.tuples(exponents, exponents, exponents, exponents).map(
    lambda e: tuple((i, x) for i, x in enumerate(e) if x)
)
polys = st.dictionaries(monos, coeffs, max_size=4).map(
    lambda t: Polynomial(TABLE, {m: c for m, c in t.items() if c})
)


@given(polys, polys, polys)
@settings(max_examples=200, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


def test_ring_axioms_bulk_seeded():
    # the cheap non-hypothesis bulk run: >= 1000 random triples
    rng = random.Random(20240)

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(0, 4)):
            m = tuple(
                (i, e)
                for i, e in enumerate(rng.choices(range(0, 3), k=4))
                if e
            )
            terms[m] = terms.get(m, 0) + rng.randint(-5, 5)
        return Polynomial(TABLE, {m: c for m, c in terms.items() if c})

    for _ in range(1000):
        p, q, r = rand_poly(), rand_poly(), rand_poly()
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p


homog = st.sampled_from([2, 3, 4]).flatmap(
    lambda deg: st.builds(
        lambda pairs: Polynomial(TABLE, {m: c for m, c in pairs if c}),
        st.lists(
            st.tuples(
                st.sampled_from(
                    monomial_basis(TABLE, deg, 1, ["x", "y1", "y2"])
                    + monomial_basis(TABLE, deg, -1, ["x", "y1", "y2"])
                ),
                coeffs,
            ),
            min_size=1,
            max_size=3,
        ),
    )
)


@given(homog, homog)
@settings(max_examples=150, deadline=None)
def test_degree_and_sign_multiplicative(p, q):
    if p.is_zero() or q.is_zero():
        return
    dp, dq = p.weighted_degree(), q.weighted_degree()
    if dp is None or dq is None:
        return
    assert (p * q).weighted_degree() == dp + dq
    sp_, sq_ = p.sigma_sign(), q.sigma_sign()
    if sp_ is not None and sq_ is not None:
        assert (p * q).sigma_sign() == sp_ * sq_


@given(homog, homog)
@settings(max_examples=150, deadline=None)
def test_exact_divide_roundtrip(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_divide(q) == p


@given(polys)
@settings(max_examples=150, deadline=None)
def test_poly_sqrt_roundtrip(p):
    s = (p * p).poly_sqrt()
    assert s is not None
    assert s * s == p * p


@given(polys, polys, polys)
@settings(max_examples=150, deadline=None)
def test_substitute_is_homomorphism(p, q, img):
    b = {"y1": img}
    assert (p + q).substitute(b) == p.substitute(b) + q.substitute(b)
    assert (p * q).substitute(b) == p.substitute(b) * q.substitute(b)


def test_rewrite_confluence():
    # two independent power rules; reduction order must not matter
    T = VariableTable(
        [
            ("y1", 2, -1, GEOMETRIC),
            ("d", 0, 1, PARAMETER),
            ("i", 0, 1, ALGEBRAIC),
            ("r", 0, 1, ALGEBRAIC),
        ],
        rules=[
            RewriteRule("i", 2, {(): -1}),
            RewriteRule("r", 4, {((("d"), 2),): -1}),
        ],
    )
    i, r, y1, d = (T.var(n) for n in ("i", "r", "y1", "d"))
    rng = random.Random(7)
    factors = [i, r, y1 + i * r, d * r * r - i, r ** 3 + 2]
    for _ in range(60):
        chosen = [rng.choice(factors) for _ in range(4)]
        left = ((chosen[0] * chosen[1]) * chosen[2]) * chosen[3]
        right = chosen[0] * (chosen[1] * (chosen[2] * chosen[3]))
        shuffled = list(chosen)
        rng.shuffle(shuffled)
        prod = T.one()
        for f in shuffled:
            prod = prod * f
        assert left == right == prod
        # no residual exponent at or above the rule power
        for m in left.terms:
            for v, e in m:
                rule = T.rules.get(v)
                if rule:
                    assert e < rule[0]
