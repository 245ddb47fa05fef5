"""Exact sparse multivariate polynomials over a table of weighted, signed variables.

Coefficients are arbitrary-precision rationals kept in lowest terms (plain int
where integral, fractions.Fraction otherwise); there is no floating point
anywhere.  Monomials are sparse tuples of (variable index, exponent) pairs
sorted by index.  All text output and every "leading term" choice use the
canonical order described below.

Algebraic extensions (i = sqrt(-1), quartic roots, sqrt(-15)) are realized as
extra weight-0 variables carrying a monic power rewrite rule v^k -> p with p
free of v; products and substitutions are reduced to the rewrite fixpoint.

Weight-0 parameters rule out grading the term order by weighted degree (it
would not be well founded), so the canonical order is the elimination block
order: geometric variables (a table prefix) compared by total-degree grevlex,
ties broken by total-degree grevlex on the parameter block.  This is a genuine
term order and renders parameters as trailing coefficients in text output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Mono = tuple  # tuple[tuple[int, int], ...] sorted by variable index
Coeff = Union[int, Fraction]
Scalar = (int, Fraction)

GEOMETRIC = "geometric"
PARAMETER = "parameter"
ALGEBRAIC = "algebraic"

UNIT_MONO: Mono = ()


class RingError(ValueError):
    pass


class TableMismatchError(RingError):
    pass


class ZeroPolynomialError(RingError):
    pass


class CyclicBindingError(RingError):
    pass


# ---------------------------------------------------------------------------
# monomial helpers


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_div(a: Mono, b: Mono) -> Optional[Mono]:
    """a / b, or None when b does not divide a."""
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while j < lb:
        if i >= la:
            return None
        va, ea = a[i]
        vb, eb = b[j]
        if va < vb:
            out.append(a[i])
            i += 1
        elif va > vb:
            return None
        else:
            if ea < eb:
                return None
            if ea > eb:
                out.append((va, ea - eb))
            i += 1
            j += 1
    out.extend(a[i:])
    return tuple(out)


def mono_totdeg(a: Mono) -> int:
    return sum(e for _, e in a)


def _grevlex_block_cmp(a: Mono, b: Mono) -> int:
    da = mono_totdeg(a)
    db = mono_totdeg(b)
    if da != db:
        return 1 if da > db else -1
    # equal degree: walk indices from the top; at the first difference the
    # monomial with the *smaller* exponent is the larger one (reverse lex)
    i = len(a) - 1
    j = len(b) - 1
    while i >= 0 and j >= 0:
        va, ea = a[i]
        vb, eb = b[j]
        if va > vb:
            return -1
        if vb > va:
            return 1
        if ea != eb:
            return 1 if ea < eb else -1
        i -= 1
        j -= 1
    return 0  # equal total degree forces simultaneous exhaustion


def mono_split(m: Mono, cut: int) -> tuple:
    """(geometric part, parameter part) at the table's geometric prefix."""
    for i, (v, _) in enumerate(m):
        if v >= cut:
            return m[:i], m[i:]
    return m, UNIT_MONO


def grevlex_cmp(a: Mono, b: Mono, cut: int) -> int:
    """Canonical order: +1 if a > b, -1 if a < b, 0 if equal."""
    ag, ap = mono_split(a, cut)
    bg, bp = mono_split(b, cut)
    c = _grevlex_block_cmp(ag, bg)
    if c:
        return c
    return _grevlex_block_cmp(ap, bp)


def _mono_sort_key(nvars: int, cut: int):
    def key(m: Mono):
        exps = [0] * nvars
        for v, e in m:
            exps[v] = e
        geo, par = exps[:cut], exps[cut:]
        return (
            sum(geo),
            tuple(-e for e in reversed(geo)),
            sum(par),
            tuple(-e for e in reversed(par)),
        )

    return key


def sorted_monos(monos: Iterable[Mono], table: "VariableTable", reverse: bool = True) -> list:
    """Monomials in canonical order (descending by default)."""
    return sorted(monos, key=_mono_sort_key(table.nvars, table.geo_cut), reverse=reverse)


def lex_sort_key(m: Mono, nvars: int):
    exps = [0] * nvars
    for v, e in m:
        exps[v] = e
    return tuple(exps)


def _as_coeff(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise RingError(f"not an exact rational coefficient: {c!r}")


def _coeff_div(a: Coeff, b: Coeff) -> Coeff:
    q = Fraction(a) / Fraction(b)
    return int(q) if q.denominator == 1 else q


# ---------------------------------------------------------------------------
# variable tables


@dataclass(frozen=True)
class RewriteRule:
    """Power rewrite v^power -> replacement, with replacement free of v.

    The replacement is given name-based as {((name, exp), ...): coeff} so rules
    can be declared before the table exists.
    """

    variable: str
    power: int
    replacement: Mapping


class VariableTable:
    """Ordered table of variables with weights, sigma-signs, kinds and rules.

    The ordering is fixed at construction and defines the canonical monomial
    order.  Tables compare by identity: polynomials from different tables never
    mix.
    """

    __slots__ = (
        "names",
        "weights",
        "signs",
        "kinds",
        "index",
        "rules",
        "geo_cut",
        "_first_alg",
        "_var_cache",
        "_zero",
        "_one",
    )

    def __init__(self, entries: Sequence, rules: Sequence[RewriteRule] = ()):
        names, weights, signs, kinds = [], [], [], []
        for name, weight, sign, kind in entries:
            if weight < 0:
                raise RingError(f"negative weight for {name}")
            if sign not in (1, -1):
                raise RingError(f"sign of {name} must be +1 or -1")
            if kind not in (GEOMETRIC, PARAMETER, ALGEBRAIC):
                raise RingError(f"unknown kind {kind!r} for {name}")
            if kind in (PARAMETER, ALGEBRAIC) and (weight != 0 or sign != 1):
                raise RingError(f"{kind} variable {name} must have weight 0, sign +1")
            names.append(name)
            weights.append(weight)
            signs.append(sign)
            kinds.append(kind)
        if len(set(names)) != len(names):
            raise RingError("duplicate variable names")
        cut = sum(1 for k in kinds if k == GEOMETRIC)
        if any(k == GEOMETRIC for k in kinds[cut:]):
            raise RingError("geometric variables must form a prefix of the table")
        self.geo_cut = cut
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.signs = tuple(signs)
        self.kinds = tuple(kinds)
        self.index = {n: i for i, n in enumerate(names)}
        self._var_cache = {}
        self._zero = Polynomial(self, {})
        self._one = Polynomial(self, {UNIT_MONO: 1})
        self.rules = {}
        alg = [i for i, k in enumerate(kinds) if k == ALGEBRAIC]
        self._first_alg = min(alg) if alg else len(names)
        for rule in rules:
            vi = self.index[rule.variable]
            if self.kinds[vi] != ALGEBRAIC:
                raise RingError(f"rewrite rule on non-algebraic variable {rule.variable}")
            if rule.power < 2:
                raise RingError("rewrite power must be >= 2")
            terms = {}
            for named_mono, coeff in rule.replacement.items():
                mono = tuple(sorted((self.index[n], e) for n, e in named_mono))
                if any(v == vi for v, _ in mono):
                    raise RingError(f"rule replacement for {rule.variable} involves itself")
                terms[mono] = _as_coeff(coeff)
            self.rules[vi] = (rule.power, terms)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def var(self, name: str) -> "Polynomial":
        p = self._var_cache.get(name)
        if p is None:
            p = Polynomial(self, {((self.index[name], 1),): 1})
            self._var_cache[name] = p
        return p

    def zero(self) -> "Polynomial":
        return self._zero

    def one(self) -> "Polynomial":
        return self._one

    def const(self, c) -> "Polynomial":
        c = _as_coeff(Fraction(c) if not isinstance(c, Scalar) else c)
        return Polynomial(self, {UNIT_MONO: c} if c else {})

    def poly(self, terms: Mapping) -> "Polynomial":
        """Build from {((name, exp), ...): coeff}; normalizes and applies rules."""
        raw = {}
        for named_mono, coeff in terms.items():
            mono = tuple(sorted((self.index[n], e) for n, e in named_mono if e))
            c = _as_coeff(coeff)
            if not c:
                continue
            s = raw.get(mono)
            if s is None:
                raw[mono] = c
            else:
                s = s + c
                if s:
                    raw[mono] = s
                else:
                    del raw[mono]
        return Polynomial(self, self.reduce_terms(raw))

    def monomial(self, *factors) -> "Polynomial":
        """Convenience: monomial('x', ('y1', 2)) -> x*y1^2."""
        m = UNIT_MONO
        for f in factors:
            name, e = (f, 1) if isinstance(f, str) else f
            m = mono_mul(m, ((self.index[name], e),))
        return Polynomial(self, {m: 1})

    def mono_weight(self, mono: Mono) -> int:
        w = self.weights
        return sum(e * w[v] for v, e in mono)

    def mono_sign(self, mono: Mono) -> int:
        s = 1
        signs = self.signs
        for v, e in mono:
            if signs[v] == -1 and e % 2:
                s = -s
        return s

    def mono_str(self, mono: Mono) -> str:
        # parameter factors render first, as coefficients of the geometric part
        geo, par = mono_split(mono, self.geo_cut)
        return "*".join(
            self.names[v] if e == 1 else f"{self.names[v]}^{e}" for v, e in par + geo
        )

    def has_reducible(self, terms: Mapping) -> bool:
        if not self.rules:
            return False
        first = self._first_alg
        rules = self.rules
        for m in terms:
            if m and m[-1][0] >= first:
                for v, e in reversed(m):
                    if v < first:
                        break
                    rule = rules.get(v)
                    if rule is not None and e >= rule[0]:
                        return True
        return False

    def reduce_terms(self, terms: dict) -> dict:
        """Apply power rewrite rules to fixpoint.  Confluent for the rule sets
        used here (single power rule per variable, replacements free of all
        algebraic variables)."""
        if not self.has_reducible(terms):
            return terms
        rules = self.rules
        out = {}
        work = list(terms.items())
        while work:
            mono, coeff = work.pop()
            hit = None
            for v, e in mono:
                rule = rules.get(v)
                if rule is not None and e >= rule[0]:
                    hit = (v, e, rule)
                    break
            if hit is None:
                s = out.get(mono)
                if s is None:
                    out[mono] = coeff
                else:
                    s = s + coeff
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
                continue
            v, e, (power, repl) = hit
            rest = tuple(
                (w, ee) for w, ee in mono if w != v
            )
            if e > power:
                rest = mono_mul(rest, ((v, e - power),))
            for rm, rc in repl.items():
                work.append((mono_mul(rest, rm), coeff * rc))
        return out


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial over a VariableTable."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VariableTable, terms: dict):
        self.table = table
        self.terms = terms

    # -- basics ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            other = self.table.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table is other.table and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.table), frozenset(self.terms.items())))

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.table is not self.table:
                raise TableMismatchError("operands from different variable tables")
            return other
        if isinstance(other, Scalar):
            return self.table.const(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def support(self) -> frozenset:
        """Set of variable indices occurring in the polynomial."""
        s = set()
        for m in self.terms:
            for v, _ in m:
                s.add(v)
        return frozenset(s)

    def variables(self) -> frozenset:
        return frozenset(self.table.names[v] for v in self.support())

    def contains_var(self, name: str) -> bool:
        vi = self.table.index[name]
        return any(v == vi for m in self.terms for v, _ in m)

    def coefficient(self, mono: Mono) -> Coeff:
        return self.terms.get(mono, 0)

    def constant_part(self) -> Coeff:
        return self.terms.get(UNIT_MONO, 0)

    def num_terms(self) -> int:
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = s + c
                if s:
                    t[m] = s
                else:
                    del t[m]
        return Polynomial(self.table, t)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Scalar):
            c = _as_coeff(other)
            if not c:
                return self.table.zero()
            return Polynomial(self.table, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.table.zero()
        if len(a) > len(b):
            a, b = b, a
        res: dict = {}
        get = res.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                s = get(m)
                if s is None:
                    res[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        res[m] = s
                    else:
                        del res[m]
        return Polynomial(self.table, self.table.reduce_terms(res))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise RingError("polynomial powers must be nonnegative integers")
        result = self.table.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c) -> "Polynomial":
        return self * c

    # -- grading -------------------------------------------------------------

    def weighted_degree(self) -> Optional[int]:
        """Common weighted degree of all terms, None when inhomogeneous."""
        if not self.terms:
            raise ZeroPolynomialError("weighted degree of the zero polynomial")
        mono_weight = self.table.mono_weight
        it = iter(self.terms)
        d = mono_weight(next(it))
        for m in it:
            if mono_weight(m) != d:
                return None
        return d

    def sigma_sign(self) -> Optional[int]:
        """+1 / -1 for a pure eigen-polynomial, None when mixed; 0 -> +1."""
        if not self.terms:
            return 1
        mono_sign = self.table.mono_sign
        it = iter(self.terms)
        s = mono_sign(next(it))
        for m in it:
            if mono_sign(m) != s:
                return None
        return s

    def max_degree_in(self, names: Iterable[str]) -> int:
        """Largest per-term total exponent of the given variables."""
        idxs = {self.table.index[n] for n in names}
        best = 0
        for m in self.terms:
            d = sum(e for v, e in m if v in idxs)
            if d > best:
                best = d
        return best

    # -- leading terms and canonical text -------------------------------------

    def leading_mono(self) -> Mono:
        if not self.terms:
            raise ZeroPolynomialError("leading term of the zero polynomial")
        cut = self.table.geo_cut
        it = iter(self.terms)
        best = next(it)
        for m in it:
            if grevlex_cmp(m, best, cut) > 0:
                best = m
        return best

    def leading_term(self):
        m = self.leading_mono()
        return m, self.terms[m]

    def sorted_terms(self) -> list:
        order = sorted_monos(self.terms.keys(), self.table)
        return [(m, self.terms[m]) for m in order]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            neg = c < 0
            mag = -c if neg else c
            body = self.table.mono_str(m)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(f"-{text}" if neg else text)
            else:
                parts.append(f" - {text}" if neg else f" + {text}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"<poly {self}>"

    # -- substitution ----------------------------------------------------------

    def substitute(self, bindings: Mapping) -> "Polynomial":
        """Simultaneous substitution of variables (by name) by polynomials.

        Images are not re-substituted; a cyclic dependency among the bound
        variables is rejected.  Grading and sign need not be preserved.
        """
        if not bindings:
            return self
        table = self.table
        images = {}
        for name, val in bindings.items():
            vi = table.index[name]
            if isinstance(val, Scalar):
                images[vi] = table.const(val)
            else:
                if val.table is not table:
                    raise TableMismatchError("binding image from a different table")
                images[vi] = val
        _check_acyclic(table, images)
        return self._apply_images(images)

    def _apply_images(self, images: Mapping) -> "Polynomial":
        table = self.table
        bound = set(images)
        pow_cache: dict = {}

        def image_pow(v: int, e: int) -> Polynomial:
            key = (v, e)
            p = pow_cache.get(key)
            if p is None:
                p = images[v] ** e
                pow_cache[key] = p
            return p

        out = table.zero()
        untouched: dict = {}
        for m, c in self.terms.items():
            hit = [ve for ve in m if ve[0] in bound]
            if not hit:
                s = untouched.get(m)
                untouched[m] = c if s is None else s + c
                continue
            rest = tuple(ve for ve in m if ve[0] not in bound)
            piece = Polynomial(table, {rest: c})
            for v, e in hit:
                piece = piece * image_pow(v, e)
            out = out + piece
        if untouched:
            out = out + Polynomial(
                table, {m: c for m, c in untouched.items() if c}
            )
        if table.has_reducible(out.terms):
            out = Polynomial(table, table.reduce_terms(dict(out.terms)))
        return out

    def change_vars(self, bindings: Mapping) -> "Polynomial":
        """Simultaneous coordinate change: like substitute, but permits
        mutually dependent images (e.g. a swap y1 <-> y3).  Intended for
        linear changes of variables; images are never re-substituted."""
        if not bindings:
            return self
        table = self.table
        images = {}
        for name, val in bindings.items():
            vi = table.index[name]
            images[vi] = table.const(val) if isinstance(val, Scalar) else self._coerce(val)
        return self._apply_images(images)

    # -- coefficient extraction --------------------------------------------------

    def coefficients_wrt(self, names: Iterable[str]) -> list:
        """Split p = sum(mono_in_names * coefficient); canonical mono order.

        Returns [(mono, Polynomial)] with nonzero coefficient polynomials in
        the remaining variables, ordered canonically (descending).
        """
        table = self.table
        idxs = {table.index[n] for n in names}
        groups: dict = {}
        for m, c in self.terms.items():
            inside = tuple(ve for ve in m if ve[0] in idxs)
            outside = tuple(ve for ve in m if ve[0] not in idxs)
            g = groups.setdefault(inside, {})
            s = g.get(outside)
            if s is None:
                g[outside] = c
            else:
                s = s + c
                if s:
                    g[outside] = s
                else:
                    del g[outside]
        order = sorted_monos([m for m, g in groups.items() if g], table)
        return [(m, Polynomial(table, groups[m])) for m in order]

    # -- exact division and square root --------------------------------------------

    def exact_divide(self, q: "Polynomial") -> Optional["Polynomial"]:
        """h with self == q*h, else None.  Leading-term division with a final
        verification by multiplication."""
        q = self._coerce(q)
        if q.is_zero():
            raise ZeroPolynomialError("division by the zero polynomial")
        if self.is_zero():
            return self.table.zero()
        lt_m, lt_c = q.leading_term()
        rem = Polynomial(self.table, dict(self.terms))
        quo: dict = {}
        while rem.terms:
            rm, rc = rem.leading_term()
            m = mono_div(rm, lt_m)
            if m is None:
                return None
            c = _coeff_div(rc, lt_c)
            quo[m] = c
            rem = rem - Polynomial(self.table, {m: c}) * q
        h = Polynomial(self.table, quo)
        if q * h != self:
            return None
        return h

    def poly_sqrt(self) -> Optional["Polynomial"]:
        """s with s^2 == self (positive leading coefficient), else None."""
        if self.is_zero():
            return self.table.zero()
        lt_m, lt_c = self.leading_term()
        root_m = _mono_sqrt(lt_m)
        root_c = _coeff_sqrt(lt_c)
        if root_m is None or root_c is None:
            return None
        s = Polynomial(self.table, {root_m: root_c})
        rem = self - s * s
        prev = None
        while rem.terms:
            rm, rc = rem.leading_term()
            tm = mono_div(rm, root_m)
            if tm is None:
                return None
            if prev is not None and grevlex_cmp(tm, prev, self.table.geo_cut) >= 0:
                return None
            tc = _coeff_div(rc, 2 * root_c)
            t = Polynomial(self.table, {tm: tc})
            rem = rem - (2 * s * t) - t * t
            s = s + t
            prev = tm
        return s

    # -- cross-table transport --------------------------------------------------

    def convert_to(self, other: VariableTable) -> "Polynomial":
        """Re-express on another table by matching variable names."""
        if other is self.table:
            return self
        mapping = [other.index[n] for n in self.table.names]
        terms = {}
        for m, c in self.terms.items():
            nm = tuple(sorted((mapping[v], e) for v, e in m))
            terms[nm] = c
        return Polynomial(other, other.reduce_terms(terms))


def _check_acyclic(table: VariableTable, images: Mapping) -> None:
    bound = set(images)
    color: dict = {}

    def visit(v, stack):
        color[v] = 1
        for m in images[v].terms:
            for w, _ in m:
                if w in bound and w != v:  # self-maps like y2 -> y2 - c*x^2 are fine
                    if color.get(w) == 1:
                        raise CyclicBindingError(
                            "cyclic substitution through "
                            + " -> ".join(table.names[u] for u in stack + [v, w])
                        )
                    if w not in color:
                        visit(w, stack + [v])
        color[v] = 2

    for v in bound:
        if v not in color:
            visit(v, [])


def _mono_sqrt(m: Mono) -> Optional[Mono]:
    out = []
    for v, e in m:
        if e % 2:
            return None
        out.append((v, e // 2))
    return tuple(out)


def _coeff_sqrt(c: Coeff) -> Optional[Coeff]:
    f = Fraction(c)
    if f <= 0:
        return None
    n, d = f.numerator, f.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return _as_coeff(Fraction(rn, rd))


# ---------------------------------------------------------------------------
# monomial bases


def monomial_basis(table: VariableTable, degree: int, sign: int, names: Sequence[str]) -> list:
    """All monomials in the given variables of the given weighted degree and
    sigma-sign, in canonical (descending) order."""
    if degree < 0:
        raise RingError("degree must be nonnegative")
    idxs = [table.index[n] for n in names]
    if any(table.weights[v] == 0 for v in idxs):
        raise RingError("monomial_basis needs positively weighted variables")
    found: list = []

    def rec(pos: int, remaining: int, acc: list):
        if remaining == 0:
            found.append(tuple(sorted(acc)))
            return
        if pos == len(idxs):
            return
        v = idxs[pos]
        w = table.weights[v]
        e = 0
        while e * w <= remaining:
            rec(pos + 1, remaining - e * w, acc + ([(v, e)] if e else []))
            e += 1

    rec(0, degree, [])
    keep = [m for m in found if table.mono_sign(m) == sign]
    return sorted_monos(keep, table)


def lex_descending(table: VariableTable, monos: Iterable[Mono]) -> list:
    """Descending lexicographic order over the table's variable order (the
    layout used for ansatz slot numbering)."""
    return sorted(monos, key=lambda m: lex_sort_key(m, table.nvars), reverse=True)
