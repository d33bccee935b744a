"""Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

Coefficients are exact rational functions in the base variable of the
fibration plus any number of named parameters.  The standard b/c
invariants, the discriminant and j are computed symbolically; the analysis
pipeline (places, reports) lives in `places`/`report` and needs parameters
specialized away.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping

from k3lab.exactarith import MPoly, RatFunc, parse_expr, substitute
from k3lab.exactarith.parser import format_ratfunc


def _rf(x, vars=()) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, MPoly):
        return RatFunc.from_mpoly(x)
    return RatFunc.const(x, vars)


@dataclass(frozen=True)
class WModel:
    a1: RatFunc
    a2: RatFunc
    a3: RatFunc
    a4: RatFunc
    a6: RatFunc
    base_var: str = "t"
    chi: int | None = None  # declared arithmetic-genus parameter (1 or 2)
    specializations: tuple[tuple[str, Fraction], ...] = ()

    @staticmethod
    def from_coeffs(
        a1=0, a2=0, a3=0, a4=0, a6=0, base_var: str = "t", chi: int | None = None
    ) -> "WModel":
        return WModel(
            _rf(a1), _rf(a2), _rf(a3), _rf(a4), _rf(a6), base_var=base_var, chi=chi
        )

    @staticmethod
    def from_json(obj: Mapping) -> "WModel":
        vars = list(obj.get("vars", ["t"]))
        base = vars[0]
        coeffs = {}
        for key in ("a1", "a2", "a3", "a4", "a6"):
            coeffs[key] = parse_expr(str(obj.get(key, "0")), set(vars))
        chi = obj.get("chi")
        model = WModel(
            coeffs["a1"], coeffs["a2"], coeffs["a3"], coeffs["a4"], coeffs["a6"],
            base_var=base, chi=int(chi) if chi is not None else None,
        )
        spec = obj.get("specialize") or {}
        if spec:
            bindings = {
                k: parse_expr(str(v), set()).constant_value() for k, v in spec.items()
            }
            model = model.specialize(bindings)
        return model

    def to_json(self) -> dict:
        vars = sorted({self.base_var, *self.parameters()})
        # base variable first, per the file convention
        vars = [self.base_var] + [v for v in vars if v != self.base_var]
        out = {"vars": vars}
        for key in ("a1", "a2", "a3", "a4", "a6"):
            val = getattr(self, key)
            if not val.is_zero():
                out[key] = format_ratfunc(val)
        if self.chi is not None:
            out["chi"] = self.chi
        return out

    # -- structure ---------------------------------------------------------

    def coefficients(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc, RatFunc]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def parameters(self) -> tuple[str, ...]:
        vs: set[str] = set()
        for c in self.coefficients():
            vs |= set(c.present_vars())
        vs.discard(self.base_var)
        return tuple(sorted(vs))

    def is_specialized(self) -> bool:
        return not self.parameters()

    def specialize(self, bindings: Mapping[str, Fraction]) -> "WModel":
        rb = {k: RatFunc.const(Fraction(v)) for k, v in bindings.items()}
        new = [substitute(c, rb) for c in self.coefficients()]
        spec = self.specializations + tuple(sorted((k, Fraction(v)) for k, v in bindings.items()))
        return WModel(
            *new, base_var=self.base_var, chi=self.chi, specializations=spec
        )

    def map_coeffs(self, fn) -> "WModel":
        return replace(
            self, a1=fn(self.a1), a2=fn(self.a2), a3=fn(self.a3), a4=fn(self.a4), a6=fn(self.a6)
        )

    # -- invariants -------------------------------------------------------------

    def b_invariants(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        a1, a2, a3, a4, a6 = self.coefficients()
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = (b2 * b6 - b4 * b4) / 4
        return b2, b4, b6, b8

    def c_invariants(self) -> tuple[RatFunc, RatFunc, RatFunc]:
        b2, b4, b6, _ = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        delta = (c4**3 - c6 * c6) / 1728
        return c4, c6, delta

    def invariants(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        """(c4, c6, delta, j); rejects vanishing discriminant."""
        c4, c6, delta = self.c_invariants()
        if delta.is_zero():
            raise ValueError("discriminant vanishes identically; not an elliptic surface")
        return c4, c6, delta, c4**3 / delta

    def j_invariant(self) -> RatFunc:
        return self.invariants()[3]

    def rhs_at(self, x: RatFunc) -> RatFunc:
        """x^3 + a2 x^2 + a4 x + a6 of the completed-square model.

        For models with a1 or a3 this is the right-hand side paired with
        the shifted ordinate y + (a1 x + a3)/2.
        """
        a1, a2, a3, a4, a6 = self.coefficients()
        b2, b4, b6, _ = self.b_invariants()
        return x**3 + (b2 / 4) * x * x + (b4 / 2) * x + b6 / 4


def quadratic_twist(w: WModel, d) -> WModel:
    """Twist by a squarefree polynomial d: c4 -> d^2 c4, c6 -> d^3 c6."""
    d = _rf(d)
    if not d.is_polynomial():
        raise ValueError("twist factor must be a polynomial")
    from k3lab.surfaces.places import poly_in_base, is_squarefree_poly

    if not is_squarefree_poly(d, w.base_var):
        raise ValueError("twist factor must be squarefree")
    c4, c6, _ = w.c_invariants()
    return WModel.from_coeffs(
        a4=-27 * d * d * c4, a6=-54 * d**3 * c6, base_var=w.base_var, chi=w.chi
    )


def base_change(w: WModel, f) -> WModel:
    """Pull back along base_var -> f(base_var)."""
    f = _rf(f)
    if f.is_constant():
        raise ValueError("base change must be non-constant")
    new = w.map_coeffs(lambda c: substitute(c, {w.base_var: f}))
    return replace(new, chi=None)


def two_isogeny(w: WModel) -> WModel:
    """Quotient by the two-torsion section (0, 0) of y^2 = x(x^2 + ax + b).

    The image model is y^2 = x(x^2 - 2ax + (a^2 - 4b)); requires the input
    in the stated shape with b != 0.
    """
    if not (w.a1.is_zero() and w.a3.is_zero() and w.a6.is_zero()):
        raise ValueError("model must have the shape y^2 = x(x^2 + ax + b)")
    a, b = w.a2, w.a4
    if b.is_zero():
        raise ValueError("(0, 0) is singular on this model (b = 0)")
    return WModel.from_coeffs(
        a2=-2 * a, a4=a * a - 4 * b, base_var=w.base_var, chi=w.chi
    )
