"""Sparse multivariate polynomials over Q.

A polynomial carries an ordered tuple of variable names and a term map
from exponent tuples to nonzero Fraction coefficients.  Binary operations
align variable tuples automatically (union, sorted by name), so callers
may mix polynomials built over different variable sets.

Term order is graded lexicographic: higher total degree first, ties broken
lexicographically on the exponent tuple.  "Leading coefficient" below always
refers to this order; gcds are normalized to leading coefficient 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: Mapping[Exponent, Fraction]):
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(value, vars: Iterable[str] = ()) -> "MPoly":
        vs = tuple(sorted(set(vars)))
        c = _frac(value)
        return MPoly(vs, {(0,) * len(vs): c} if c else {})

    @staticmethod
    def var(name: str, vars: Iterable[str] = ()) -> "MPoly":
        vs = tuple(sorted(set(vars) | {name}))
        e = tuple(1 if v == name else 0 for v in vs)
        return MPoly(vs, {e: Fraction(1)})

    @staticmethod
    def zero(vars: Iterable[str] = ()) -> "MPoly":
        return MPoly(tuple(sorted(set(vars))), {})

    @staticmethod
    def one(vars: Iterable[str] = ()) -> "MPoly":
        return MPoly.const(1, vars)

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree_in(self, var: str) -> int:
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def present_vars(self) -> tuple[str, ...]:
        out = []
        for i, v in enumerate(self.vars):
            if any(e[i] for e in self.terms):
                out.append(v)
        return tuple(out)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    # -- alignment -----------------------------------------------------

    def with_vars(self, vars: Iterable[str]) -> "MPoly":
        vs = tuple(sorted(set(vars) | set(self.present_vars())))
        if vs == self.vars:
            return self
        idx = []
        for v in self.vars:
            idx.append(vs.index(v) if v in vs else None)
        terms: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * len(vs)
            for i, x in enumerate(e):
                if x:
                    ne[idx[i]] = x
            terms[tuple(ne)] = c
        return MPoly(vs, terms)

    @staticmethod
    def _aligned(a: "MPoly", b: "MPoly") -> tuple["MPoly", "MPoly"]:
        if a.vars == b.vars:
            return a, b
        vs = tuple(sorted(set(a.vars) | set(b.vars)))
        return a.with_vars(vs), b.with_vars(vs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = MPoly._aligned(self, other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = MPoly._aligned(self, other)
        terms: dict[Exponent, Fraction] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, Fraction(0)) + ca * cb
        return MPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.vars)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = MPoly._aligned(self, other)
        return a.terms == b.terms

    def __hash__(self):
        p = self.with_vars(())
        return hash((p.vars, tuple(sorted(p.terms.items()))))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        from k3lab.exactarith.parser import format_mpoly

        return f"MPoly({format_mpoly(self)!r})"

    # -- structure helpers ------------------------------------------------

    def coeffs_in(self, var: str) -> dict[int, "MPoly"]:
        """Coefficients of self viewed as a polynomial in `var`.

        The returned polynomials keep the full variable tuple with the
        `var` exponent set to zero.
        """
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        buckets: dict[int, dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1 :]
            buckets.setdefault(k, {})[ne] = c
        return {k: MPoly(self.vars, t) for k, t in buckets.items()}

    @staticmethod
    def from_coeffs_in(var: str, coeffs: Mapping[int, "MPoly"]) -> "MPoly":
        vs: set[str] = {var}
        for c in coeffs.values():
            vs |= set(c.vars)
        out = MPoly.zero(vs)
        xv = MPoly.var(var, vs)
        for k, c in coeffs.items():
            out = out + c * xv**k
        return out

    def evaluate(self, bindings: Mapping[str, Fraction]) -> Fraction:
        missing = set(self.present_vars()) - set(bindings)
        if missing:
            raise ValueError(f"unbound variables {sorted(missing)}")
        total = Fraction(0)
        vals = [
            _frac(bindings.get(v, Fraction(0))) for v in self.vars
        ]
        for e, c in self.terms.items():
            m = c
            for x, p in zip(vals, e):
                if p:
                    m *= x**p
            total += m
        return total

    def subs_poly(self, bindings: Mapping[str, "MPoly"]) -> "MPoly":
        """Substitute polynomials for variables (total on present vars or partial)."""
        vs = set(self.vars)
        for b in bindings.values():
            vs |= set(b.vars)
        out = MPoly.zero(vs)
        for e, c in self.terms.items():
            m = MPoly.const(c, vs)
            for v, p in zip(self.vars, e):
                if not p:
                    continue
                base = bindings.get(v, MPoly.var(v, vs))
                m = m * base**p
            out = out + m
        return out


# -- division, gcd, square root --------------------------------------------


def mpoly_divexact(p: MPoly, d: MPoly) -> MPoly:
    """Exact division p / d; raises ValueError when d does not divide p."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return MPoly.zero(p.vars)
    p, d = MPoly._aligned(p, d)
    if d.is_constant():
        c = d.constant_value()
        return MPoly(p.vars, {e: x / c for e, x in p.terms.items()})
    ed, cd = d.leading_term()
    rem = p
    q_terms: dict[Exponent, Fraction] = {}
    while rem.terms:
        er, cr = rem.leading_term()
        eq = tuple(a - b for a, b in zip(er, ed))
        if any(x < 0 for x in eq):
            raise ValueError("not an exact polynomial division")
        cq = cr / cd
        q_terms[eq] = q_terms.get(eq, Fraction(0)) + cq
        rem = rem - MPoly(rem.vars, {eq: cq}) * d
    return MPoly(p.vars, q_terms)


def _divides(d: MPoly, p: MPoly) -> bool:
    try:
        mpoly_divexact(p, d)
        return True
    except ValueError:
        return False


def _upoly_gcd_frac(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    # dense-free Euclid on sparse int->Fraction maps in one variable
    def deg(f):
        return max(f, default=-1)

    def monic(f):
        if not f:
            return f
        lc = f[deg(f)]
        return {k: c / lc for k, c in f.items()}

    def rem(f, g):
        dg = deg(g)
        lcg = g[dg]
        f = dict(f)
        while f and deg(f) >= dg:
            df = deg(f)
            c = f[df] / lcg
            for k, gc in g.items():
                kk = k + df - dg
                nc = f.get(kk, Fraction(0)) - c * gc
                if nc:
                    f[kk] = nc
                else:
                    f.pop(kk, None)
        return f

    while b:
        a, b = b, rem(a, b)
    return monic(a)


def mpoly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """Greatest common divisor over Q, leading coefficient normalized to 1.

    gcd(0, 0) = 0.  Univariate inputs use plain Euclid; multivariate inputs
    use a primitive pseudo-remainder sequence recursing on the coefficient
    ring.
    """
    if p.is_zero() and q.is_zero():
        return MPoly.zero(p.vars)
    if p.is_zero():
        return _monic(q)
    if q.is_zero():
        return _monic(p)
    p, q = MPoly._aligned(p, q)
    vs = tuple(v for v in p.vars if p.degree_in(v) or q.degree_in(v))
    if not vs:
        return MPoly.one(p.vars)
    if len(vs) == 1:
        x = vs[0]
        i = p.vars.index(x)
        fa = {e[i]: c for e, c in p.terms.items()}
        fb = {e[i]: c for e, c in q.terms.items()}
        g = _upoly_gcd_frac(fa, fb)
        terms = {}
        for k, c in g.items():
            e = [0] * len(p.vars)
            e[i] = k
            terms[tuple(e)] = c
        return MPoly(p.vars, terms)
    # choose the main variable with the smallest maximal degree
    x = min(vs, key=lambda v: max(p.degree_in(v), q.degree_in(v)))
    cp, pp = _content_primitive(p, x)
    cq, pq = _content_primitive(q, x)
    cont = mpoly_gcd(cp, cq)
    a, b = pp, pq
    if a.degree_in(x) < b.degree_in(x):
        a, b = b, a
    while True:
        r = _prem(a, b, x)
        if r.is_zero():
            g = b
            break
        if r.degree_in(x) == 0:
            g = MPoly.one(p.vars)
            break
        a, b = b, _content_primitive(r, x)[1]
    g = _content_primitive(g, x)[1]
    return _monic(cont * g)


def _monic(p: MPoly) -> MPoly:
    if p.is_zero():
        return p
    lc = p.leading_coefficient()
    return MPoly(p.vars, {e: c / lc for e, c in p.terms.items()})


def _content_primitive(p: MPoly, x: str) -> tuple[MPoly, MPoly]:
    coeffs = list(p.coeffs_in(x).values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = mpoly_gcd(cont, c)
        if cont.is_constant() and not cont.is_zero():
            cont = MPoly.one(p.vars)
            break
    return cont, mpoly_divexact(p, cont)


def _prem(a: MPoly, b: MPoly, x: str) -> MPoly:
    """Pseudo-remainder of a by b with respect to x."""
    db = b.degree_in(x)
    lcb = b.coeffs_in(x)[db]
    r = a
    e = a.degree_in(x) - db + 1
    xv = MPoly.var(x, a.vars)
    while not r.is_zero() and r.degree_in(x) >= db:
        dr = r.degree_in(x)
        lcr = r.coeffs_in(x)[dr]
        r = r * lcb - lcr * xv ** (dr - db) * b
        e -= 1
    if e > 0:
        r = r * lcb**e
    return r


def frac_sqrt(c: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None."""
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def mpoly_sqrt(p: MPoly) -> MPoly | None:
    """Exact polynomial square root, or None when p is not a square.

    Coefficient matching in the first present variable, recursing on the
    leading coefficient; the candidate is verified by squaring.
    """
    if p.is_zero():
        return MPoly.zero(p.vars)
    if p.is_constant():
        r = frac_sqrt(p.constant_value())
        return None if r is None else MPoly.const(r, p.vars)
    x = p.present_vars()[0]
    d = p.degree_in(x)
    if d % 2:
        return None
    m = d // 2
    cs = p.coeffs_in(x)
    top = mpoly_sqrt(cs[d])
    if top is None:
        return None
    qc: dict[int, MPoly] = {m: top}
    two_top = 2 * top
    for k in range(m - 1, -1, -1):
        s = cs.get(m + k, MPoly.zero(p.vars))
        for a in range(k + 1, m):
            bidx = m + k - a
            if k < bidx < m:
                s = s - qc[a] * qc[bidx]
        try:
            qc[k] = mpoly_divexact(s, two_top)
        except ValueError:
            return None
    q = MPoly.from_coeffs_in(x, qc)
    if q * q == p:
        return q
    return None
