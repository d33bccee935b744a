"""Residue class rings K[x]/(m) for a monic modulus m over a field K.

Elements store a fully reduced representative of degree < deg m.  The only
moduli used in anger are monic quadratics (conjugate-pair bookkeeping), but
the arithmetic is generic.
"""

from __future__ import annotations

from k3lab.exactarith.upoly import UPoly, poly_xgcd


class QuotElem:
    __slots__ = ("rep", "mod")

    def __init__(self, rep: UPoly, mod: UPoly):
        if not mod.is_monic() or mod.degree < 1:
            raise ValueError("modulus must be monic of positive degree")
        rep._check(mod)
        self.mod = mod
        self.rep = rep % mod

    def _check(self, other: "QuotElem"):
        if self.mod != other.mod:
            raise ValueError("modulus mismatch")

    def _coerce(self, other):
        if isinstance(other, QuotElem):
            self._check(other)
            return other
        if isinstance(other, UPoly):
            return QuotElem(other, self.mod)
        try:
            c = self.mod.field.coerce(other)
        except TypeError:
            return NotImplemented
        return QuotElem(UPoly.const(self.mod.var, c, self.mod.field), self.mod)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuotElem(self.rep + other.rep, self.mod)

    __radd__ = __add__

    def __neg__(self):
        return QuotElem(-self.rep, self.mod)

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
        return QuotElem(self.rep * other.rep, self.mod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuotElem(UPoly.const(self.mod.var, 1, self.mod.field), self.mod)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "QuotElem":
        g, s, _ = poly_xgcd(self.rep, self.mod)
        if g.degree != 0:
            raise ZeroDivisionError("element is not invertible modulo the modulus")
        return QuotElem(s, self.mod)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash((self.rep, self.mod))

    def is_scalar(self) -> bool:
        return self.rep.is_constant()

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.rep.coefficient(0)

    def __repr__(self):
        return f"QuotElem({self.rep!r} mod {self.mod!r})"


def quot_mul(x: QuotElem, y: QuotElem) -> QuotElem:
    """Product in the residue ring; raises on modulus mismatch."""
    x._check(y)
    return x * y
