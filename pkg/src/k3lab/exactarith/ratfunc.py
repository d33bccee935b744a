"""Rational functions over Q in named variables, in canonical lowest terms.

Canonical form: gcd(num, den) = 1 and the denominator has graded-lex leading
coefficient 1.  With that normalization equality is structural, and a reduced
fraction is a square in the function field exactly when numerator and
denominator are both polynomial squares.

`FracField` packages the coefficient-field operations (zero, one, coerce,
sqrt) that the generic dense univariate polynomials need; `QQ` is the plain
rational instance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from k3lab.exactarith.mpoly import (
    MPoly,
    frac_sqrt,
    mpoly_divexact,
    mpoly_gcd,
    mpoly_sqrt,
)


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly, _reduced: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = MPoly._aligned(num, den)
        if not _reduced:
            if num.is_zero():
                den = MPoly.one(num.vars)
            else:
                g = mpoly_gcd(num, den)
                if not g.is_constant():
                    num = mpoly_divexact(num, g)
                    den = mpoly_divexact(den, g)
            lc = den.leading_coefficient() if not den.is_zero() else Fraction(1)
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        self.num = num
        self.den = den

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_mpoly(p: MPoly) -> "RatFunc":
        return RatFunc(p, MPoly.one(p.vars), _reduced=True)

    @staticmethod
    def const(value, vars: Iterable[str] = ()) -> "RatFunc":
        return RatFunc.from_mpoly(MPoly.const(value, vars))

    @staticmethod
    def var(name: str, vars: Iterable[str] = ()) -> "RatFunc":
        return RatFunc.from_mpoly(MPoly.var(name, vars))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_mpoly(self) -> MPoly:
        if not self.is_polynomial():
            raise ValueError("rational function has a nontrivial denominator")
        return self.num * (1 / self.den.constant_value())

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def present_vars(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.num.present_vars()) | set(self.den.present_vars())))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc.from_mpoly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return NotImplemented

    def __add__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den**(-n), self.num**(-n))
        return RatFunc(self.num**n, self.den**n, _reduced=(n <= 1))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        from k3lab.exactarith.parser import format_ratfunc

        return f"RatFunc({format_ratfunc(self)!r})"

    # -- substitution and evaluation ------------------------------------------

    def subs(self, bindings: Mapping[str, "RatFunc"]) -> "RatFunc":
        return substitute(self, bindings)

    def evaluate(self, bindings: Mapping[str, Fraction]) -> Fraction:
        d = self.den.evaluate(bindings)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.evaluate(bindings) / d


def _subs_mpoly_ratfunc(p: MPoly, bindings: Mapping[str, RatFunc]) -> RatFunc:
    out = RatFunc.const(0)
    for e, c in p.terms.items():
        m = RatFunc.const(c)
        for v, k in zip(p.vars, e):
            if not k:
                continue
            base = bindings.get(v)
            if base is None:
                base = RatFunc.var(v)
            m = m * base**k
        out = out + m
    return out


def substitute(expr: RatFunc, bindings: Mapping[str, RatFunc]) -> RatFunc:
    """Exact composition expr(vars -> bindings), in lowest terms.

    Variables absent from `bindings` are left alone.  Raises
    ZeroDivisionError when the substituted denominator vanishes identically.
    """
    bindings = {
        v: (b if isinstance(b, RatFunc) else RatFunc.const(b)) for v, b in bindings.items()
    }
    num = _subs_mpoly_ratfunc(expr.num, bindings)
    den = _subs_mpoly_ratfunc(expr.den, bindings)
    if den.is_zero():
        raise ZeroDivisionError("substitution makes the denominator vanish identically")
    return num / den


def ratfunc_sqrt(f: RatFunc) -> RatFunc | None:
    """Exact square root in the rational function field, or None.

    In canonical lowest terms with monic denominator, f is a square exactly
    when numerator and denominator are both polynomial squares.  The sign is
    normalized so the numerator's leading coefficient is positive.
    """
    if f.is_zero():
        return RatFunc.const(0)
    sn = mpoly_sqrt(f.num)
    if sn is None:
        return None
    sd = mpoly_sqrt(f.den)
    if sd is None:
        return None
    g = RatFunc(sn, sd)
    if g.num.leading_coefficient() < 0:
        g = -g
    return g


class FracField:
    """Coefficient-field adapter: plain rationals or Q(vars)."""

    __slots__ = ("vars",)

    def __init__(self, vars: Iterable[str] = ()):
        self.vars = tuple(sorted(set(vars)))

    @property
    def is_rational(self) -> bool:
        return not self.vars

    def zero(self):
        return Fraction(0) if self.is_rational else RatFunc.const(0, self.vars)

    def one(self):
        return Fraction(1) if self.is_rational else RatFunc.const(1, self.vars)

    def coerce(self, x):
        if self.is_rational:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            if isinstance(x, RatFunc) and x.is_constant():
                return x.constant_value()
            if isinstance(x, MPoly) and x.is_constant():
                return x.constant_value()
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MPoly):
            return RatFunc.from_mpoly(x)
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x, self.vars)
        raise TypeError(f"cannot coerce {x!r} into Q({', '.join(self.vars)})")

    def sqrt(self, x):
        if self.is_rational:
            return frac_sqrt(self.coerce(x))
        return ratfunc_sqrt(self.coerce(x))

    def __eq__(self, other):
        return isinstance(other, FracField) and self.vars == other.vars

    def __hash__(self):
        return hash(self.vars)

    def __repr__(self):
        return "QQ" if self.is_rational else f"FracField({self.vars!r})"


QQ = FracField()
