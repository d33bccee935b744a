"""Dense univariate polynomials over a coefficient field.

Coefficients live in the field described by a `FracField` (plain Fractions
or rational functions in parameters).  The representation is a dense tuple
c[0] + c[1] x + ... with a nonzero trailing entry; the zero polynomial has
an empty tuple and degree -1.

`valuation_at(0, f)` returns the INF sentinel.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from k3lab.exactarith.ratfunc import QQ, FracField

INF = math.inf


class UPoly:
    __slots__ = ("var", "coeffs", "field")

    def __init__(self, var: str, coeffs: Sequence, field: FracField = QQ):
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == field.zero():
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)
        self.field = field

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(var: str, field: FracField = QQ) -> "UPoly":
        return UPoly(var, (), field)

    @staticmethod
    def const(var: str, c, field: FracField = QQ) -> "UPoly":
        return UPoly(var, (c,), field)

    @staticmethod
    def x(var: str, field: FracField = QQ) -> "UPoly":
        return UPoly(var, (0, 1), field)

    @staticmethod
    def from_roots(var: str, roots: Sequence, field: FracField = QQ) -> "UPoly":
        p = UPoly.const(var, 1, field)
        for r in roots:
            p = p * UPoly(var, (-field.coerce(r), 1), field)
        return p

    # -- queries ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading_coefficient(self):
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "UPoly"):
        if self.var != other.var or self.field != other.field:
            raise ValueError("mixed polynomial rings")

    def _coerce(self, other):
        if isinstance(other, UPoly):
            self._check(other)
            return other
        try:
            return UPoly.const(self.var, self.field.coerce(other), self.field)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(
            self.var,
            [self.coefficient(i) + other.coefficient(i) for i in range(n)],
            self.field,
        )

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.var, [-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UPoly.zero(self.var, self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == self.field.zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(self.var, out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = UPoly.const(self.var, 1, self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.field.zero()] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        r = list(self.coeffs)
        lc = other.leading_coefficient()
        d = other.degree
        while len(r) - 1 >= d and r:
            c = r[-1] / lc
            k = len(r) - 1 - d
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] = r[k + i] - c * b
            while r and r[-1] == self.field.zero():
                r.pop()
        return UPoly(self.var, q, self.field), UPoly(self.var, r, self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("not an exact division")
        return q

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        from k3lab.exactarith.parser import format_upoly

        return f"UPoly({format_upoly(self)!r})"

    # -- calculus and structure ----------------------------------------------

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        lc = self.leading_coefficient()
        return UPoly(self.var, [c / lc for c in self.coeffs], self.field)

    def derivative(self) -> "UPoly":
        return UPoly(
            self.var, [i * c for i, c in enumerate(self.coeffs)][1:], self.field
        )

    def eval(self, point):
        point = self.field.coerce(point)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, g: "UPoly") -> "UPoly":
        acc = UPoly.zero(self.var, self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + UPoly.const(self.var, c, self.field)
        return acc

    def shift(self, a) -> "UPoly":
        """p(x + a)."""
        xa = UPoly(self.var, (a, 1), self.field)
        return self.compose(xa)

    def reversed(self, at_degree: int | None = None) -> "UPoly":
        """x^d * p(1/x) with d = at_degree (default deg p)."""
        d = self.degree if at_degree is None else at_degree
        if d < self.degree:
            raise ValueError("reversal degree below the actual degree")
        cs = [self.field.zero()] * (d + 1)
        for i, c in enumerate(self.coeffs):
            cs[d - i] = c
        return UPoly(self.var, cs, self.field)


def poly_gcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    if not isinstance(q, UPoly):
        raise TypeError("poly_gcd expects two UPoly")
    p._check(q)
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """(g, s, t) with s*p + t*q = g, g monic."""
    p._check(q)
    r0, r1 = p, q
    s0, s1 = UPoly.const(p.var, 1, p.field), UPoly.zero(p.var, p.field)
    t0, t1 = UPoly.zero(p.var, p.field), UPoly.const(p.var, 1, p.field)
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.leading_coefficient()
    inv = p.field.one() / lc
    return r0.monic(), s0 * inv, t0 * inv


def squarefree_decomposition(p: UPoly) -> tuple[object, list[tuple[UPoly, int]]]:
    """Yun's algorithm: p = unit * prod f_i^{m_i}.

    The f_i are monic, squarefree, pairwise coprime and listed with strictly
    increasing multiplicities.  Rejects the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    unit = p.leading_coefficient()
    p = p.monic()
    if p.degree == 0:
        return unit, []
    out: list[tuple[UPoly, int]] = []
    g = poly_gcd(p, p.derivative())
    c = p.divexact(g)
    d = p.derivative().divexact(g) - c.derivative()
    i = 1
    while not c.is_constant():
        f = poly_gcd(c, d)
        if f.degree > 0:
            out.append((f, i))
        c = c.divexact(f)
        d = d.divexact(f) - c.derivative()
        i += 1
    out.sort(key=lambda t: t[1])
    return unit, out


def valuation_at(p: UPoly, f: UPoly):
    """Largest k with f^k | p; INF for p = 0.  Rejects constant f."""
    p._check(f)
    if f.is_constant():
        raise ValueError("valuation with respect to a constant")
    if p.is_zero():
        return INF
    k = 0
    while True:
        q, r = divmod(p, f)
        if not r.is_zero():
            return k
        p = q
        k += 1


def split_by_valuation(g: UPoly, f: UPoly) -> dict[int, UPoly]:
    """Refine a squarefree g into parts of constant f-valuation.

    Returns {k: g_k} where g_k collects the factors of g dividing f exactly
    k times; only nonconstant parts are reported.
    """
    if f.is_zero():
        raise ValueError("cannot split by valuation along the zero polynomial")
    parts: dict[int, UPoly] = {}
    g_rem = g.monic()
    f_cur = f
    k = 0
    while g_rem.degree > 0:
        h = poly_gcd(g_rem, f_cur)
        gk = g_rem.divexact(h)
        if gk.degree > 0:
            parts[k] = gk
        g_rem = h
        if g_rem.degree > 0:
            f_cur = f_cur.divexact(g_rem)
        k += 1
    return parts


def upoly_from_fraction_map(var: str, coeffs: dict[int, Fraction]) -> UPoly:
    n = max(coeffs, default=-1)
    return UPoly(var, [coeffs.get(i, Fraction(0)) for i in range(n + 1)], QQ)
