"""Sections of a Weierstrass model and their fiber-level bookkeeping.

A section is the zero section O or an affine point (x, y) with exact
rational-function coordinates satisfying the model identically.  The group
law is the standard chord-tangent arithmetic over the coefficient field.

Component identification at a multiplicative place lifts the node of the
fiber by Hensel iteration in a power-series chart and reads the unordered
component index off the contact order; at places of degree > 1 only the
first-order test (identity or not) is needed for the fibers that actually
occur there, and anything deeper raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from k3lab.exactarith import INF, RatFunc, UPoly, substitute
from k3lab.exactarith.upoly import poly_xgcd, valuation_at
from k3lab.surfaces.kodaira import KodairaFiber
from k3lab.surfaces.places import Place, ratfunc_parts, upoly_of, val_ratfunc
from k3lab.surfaces.wmodel import WModel


@dataclass(frozen=True)
class Section:
    x: RatFunc | None = None
    y: RatFunc | None = None

    @property
    def is_zero(self) -> bool:
        return self.x is None

    @staticmethod
    def zero() -> "Section":
        return Section(None, None)

    @staticmethod
    def of(x, y) -> "Section":
        x = x if isinstance(x, RatFunc) else RatFunc.const(x)
        y = y if isinstance(y, RatFunc) else RatFunc.const(y)
        return Section(x, y)

    def on_curve(self, w: WModel) -> bool:
        if self.is_zero:
            return True
        x, y = self.x, self.y
        lhs = y * y + w.a1 * x * y + w.a3 * y
        rhs = x**3 + w.a2 * x * x + w.a4 * x + w.a6
        return lhs == rhs

    def __repr__(self):
        if self.is_zero:
            return "Section(O)"
        return f"Section({self.x!r}, {self.y!r})"


def sec_neg(p: Section, w: WModel) -> Section:
    if p.is_zero:
        return p
    return Section(p.x, -p.y - w.a1 * p.x - w.a3)


def sec_add(p: Section, q: Section, w: WModel) -> Section:
    """Group law; inputs must satisfy the model identically."""
    for s in (p, q):
        if not s.on_curve(w):
            raise ValueError("section does not lie on the model")
    if p.is_zero:
        return q
    if q.is_zero:
        return p
    a1, a2, a3, a4, a6 = w.coefficients()
    x1, y1, x2, y2 = p.x, p.y, q.x, q.y
    if x1 == x2:
        if (y1 + y2 + a1 * x2 + a3).is_zero():
            return Section.zero()
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam * (x3 - x1) + y1) - a1 * x3 - a3
    return Section(x3, y3)


def sec_mul(k: int, p: Section, w: WModel) -> Section:
    if k < 0:
        return sec_mul(-k, sec_neg(p, w), w)
    acc = Section.zero()
    base = p
    while k:
        if k & 1:
            acc = sec_add(acc, base, w)
        base = sec_add(base, base, w)
        k >>= 1
    return acc


def section_order(p: Section, w: WModel, bound: int = 12) -> int | None:
    """Order of a torsion section, or None when it exceeds the bound."""
    acc = p
    for k in range(1, bound + 1):
        if acc.is_zero:
            return k
        acc = sec_add(acc, p, w)
    return None


# -- intersection with the zero section ---------------------------------------


def flip_model(w: WModel, h: int) -> WModel:
    """Chart at infinity: t -> 1/s with the weight-h coordinate change."""
    var = w.base_var
    s = RatFunc.var(var)
    inv = 1 / s
    weights = {"a1": 1, "a2": 2, "a3": 3, "a4": 4, "a6": 6}
    coeffs = {}
    for key, wgt in weights.items():
        c = getattr(w, key)
        coeffs[key] = substitute(c, {var: inv}) * s ** (wgt * h)
        if not coeffs[key].is_polynomial():
            raise ValueError(f"model is not h={h} bounded at infinity ({key})")
    return WModel(
        coeffs["a1"], coeffs["a2"], coeffs["a3"], coeffs["a4"], coeffs["a6"],
        base_var=var, chi=w.chi,
    )


def flip_section(p: Section, w: WModel, h: int) -> Section:
    if p.is_zero:
        return p
    var = w.base_var
    inv = 1 / RatFunc.var(var)
    s = RatFunc.var(var)
    return Section(
        substitute(p.x, {var: inv}) * s ** (2 * h),
        substitute(p.y, {var: inv}) * s ** (3 * h),
    )


def sec_o_intersection(p: Section, w: WModel, h: int) -> int:
    """Intersection number of the section with the zero section.

    Finite places with v(x) = -2m contribute m per geometric point; the
    infinity chart is handled by the weight-h flip.  Odd pole orders would
    mean the input is not a section and raise.
    """
    if p.is_zero:
        raise ValueError("P.O needs P distinct from the zero section")
    var = w.base_var
    total = 0
    _, den = ratfunc_parts(p.x, var)
    if den.degree > 0:
        from k3lab.exactarith.upoly import squarefree_decomposition

        _, parts = squarefree_decomposition(den)
        for g, m in parts:
            if m % 2:
                raise ValueError("odd pole order: input is a multisection, not a section")
            total += (m // 2) * g.degree
    xi = substitute(p.x, {var: 1 / RatFunc.var(var)}) * RatFunc.var(var) ** (2 * h)
    v_inf = val_ratfunc(xi, var, UPoly.x(var))
    if v_inf < 0:
        if int(v_inf) % 2:
            raise ValueError("odd pole order at infinity")
        total += -int(v_inf) // 2
    return total


# -- component identification at multiplicative places -----------------------------


def _depressed_data(w: WModel):
    """(p, q, shift) with Y^2 = X^3 + pX + q and X = x + shift."""
    b2, b4, b6, _ = w.b_invariants()
    shift = b2 / 12
    p = -(b2 * b2) / 48 + b4 / 2
    q = (b2**3) / 864 - b2 * b4 / 24 + b6 / 4
    return p, q, shift


def _reduce_mod(f: RatFunc, place: UPoly) -> UPoly:
    """Class of a place-regular rational function in Q[t]/(place)."""
    num, den = ratfunc_parts(f, place.var)
    if valuation_at(den, place) != 0:
        raise ValueError("denominator vanishes along the place")
    g, s, _ = poly_xgcd(den % place, place)
    if g.degree != 0:
        raise ValueError("denominator is not invertible modulo the place")
    return (num % place) * s % place


def component_at_place(
    p: Section, w: WModel, place: Place, fiber: KodairaFiber, h: int
):
    """Unordered component index met by a section at a fiber.

    Algorithmic for multiplicative fibers; for additive fibers the smooth
    test (0 vs "undetermined") is decided by reduction to the singular
    point, matching the supplied-data design for starred fibers.
    """
    if p.is_zero:
        return 0
    if place.is_infinite:
        wf = flip_model(w, h)
        pf = flip_section(p, w, h)
        return component_at_place(pf, wf, Place(UPoly.x(w.base_var)), fiber, h)
    f = place.poly
    var = w.base_var
    if fiber.symbol == "I0":
        return 0
    vx = val_ratfunc(p.x, var, f)
    if vx < 0:  # INF compares false here
        return 0
    pp, qq, shift = _depressed_data(w)
    xdep = p.x + shift
    b2, _, _, _ = w.b_invariants()
    ydep = p.y + (w.a1 * p.x + w.a3) / 2
    pbar = _reduce_mod(pp, f)
    qbar = _reduce_mod(qq, f)
    if fiber.is_multiplicative:
        # node at X0 = -3q/(2p); p is a unit along multiplicative places
        g, s, _ = poly_xgcd((2 * pbar) % f, f)
        if g.degree != 0:
            raise ValueError("degenerate node data at a multiplicative place")
        x0 = (-3 * qbar * s) % f
        xbar = _reduce_mod(xdep, f)
        ybar = _reduce_mod(ydep, f)
        if (xbar - x0) % f != UPoly.zero(var) or ybar % f != UPoly.zero(var):
            return 0
        n = fiber.n
        if n <= 3:
            return 1
        if f.degree != 1:
            raise NotImplementedError(
                "deep component ladder at a place of degree > 1"
            )
        return _ladder_index(w, xdep, f, n)
    # additive: non-identity iff the section hits the singular point
    # (X0, 0); the singular X0 is the unique multiple root of the cubic
    xbar = _reduce_mod(xdep, f)
    ybar = _reduce_mod(ydep, f)
    if ybar % f != UPoly.zero(var):
        return 0
    cubic_at = (xbar**3 + pbar * xbar + qbar) % f
    deriv_at = (3 * xbar * xbar + pbar) % f
    if cubic_at == UPoly.zero(var) and deriv_at == UPoly.zero(var):
        return "undetermined"
    return 0


def _series_of(f: RatFunc, var: str, shift_c: Fraction, prec: int) -> UPoly:
    """Truncated power-series expansion of f at t = c (local coordinate s)."""
    sub = substitute(f, {var: RatFunc.var(var) + shift_c})
    num, den = ratfunc_parts(sub, var)
    mod = UPoly.x(var) ** prec
    num = num % mod
    den_t = den % mod
    if den_t.coefficient(0) == 0:
        raise ValueError("series expansion at a pole")
    inv = _series_inverse(den_t, prec)
    return (num * inv) % mod


def _series_inverse(d: UPoly, prec: int) -> UPoly:
    var = d.var
    c0 = d.coefficient(0)
    out = UPoly.const(var, 1 / c0)
    mod = UPoly.x(var) ** prec
    k = 1
    while k < prec:
        k *= 2
        out = (out * (2 - (d % mod) * out)) % mod
    return out % mod


def _ladder_index(w: WModel, xdep: RatFunc, f: UPoly, n: int) -> int:
    """Contact order of the section with the lifted node at a linear place."""
    var = w.base_var
    if f.degree != 1:
        raise NotImplementedError
    c = -f.coefficient(0) / f.coefficient(1)
    prec = n + 4
    pp, qq, _ = _depressed_data(w)
    ps = _series_of(pp, var, c, prec)
    qs = _series_of(qq, var, c, prec)
    mod = UPoly.x(var) ** prec
    # simple root r of X^3 + pX + q by Newton from the residue fiber
    p0 = ps.coefficient(0)
    q0 = qs.coefficient(0)
    x0 = -3 * q0 / (2 * p0)
    r = UPoly.const(var, -2 * x0)

    def cubic(xv: UPoly) -> UPoly:
        return (xv**3 + ps * xv + qs) % mod

    def dcubic(xv: UPoly) -> UPoly:
        return (3 * xv * xv + ps) % mod

    for _ in range(prec.bit_length() + 2):
        val = cubic(r)
        if val.is_zero():
            break
        dinv = _series_inverse(dcubic(r), prec)
        r = (r - val * dinv) % mod
    # cubic = (X - r)(X^2 + AX + B) with A = r since the cubic is depressed
    x_c = (-r) * UPoly.const(var, Fraction(1, 2))
    xs = _series_of(xdep, var, c, prec)
    diff = (xs - x_c) % mod
    a = next((i for i, cf in enumerate(diff.coeffs) if cf != 0), prec)
    if 2 * a >= n:
        if n % 2:
            raise ValueError("odd fiber order with deep node contact")
        return n // 2
    return min(a, n - a)
