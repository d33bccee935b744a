"""Place decomposition of a specialized Weierstrass model.

Places are squarefree monic polynomials in the base variable (a degree-d
place bundles d geometric fibers with identical behaviour) plus the place
at infinity.  No irreducible factorization is ever performed: squarefree
decomposition of the discriminant, refined by valuation splitting against
c4 and c6, already separates the Kodaira types.

The chart at infinity uses weighted degree bounds deg c4 <= 4h,
deg c6 <= 6h, deg delta <= 12h with h minimal (h is the arithmetic-genus
parameter chi: 1 for rational elliptic surfaces, 2 for K3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from k3lab.exactarith import INF, RatFunc, UPoly
from k3lab.exactarith.upoly import split_by_valuation, squarefree_decomposition, valuation_at
from k3lab.exactarith.parser import format_upoly
from k3lab.surfaces.kodaira import KodairaFiber, kodaira_type
from k3lab.surfaces.wmodel import WModel


class DegenerateModelError(ValueError):
    """Raised when a specialization collides places or breaks Euler counts."""


def upoly_of(f: RatFunc, var: str) -> UPoly:
    """View a polynomial rational function of one variable as a UPoly."""
    extra = set(f.present_vars()) - {var}
    if extra:
        raise ValueError(f"expression still carries parameters {sorted(extra)}")
    if not f.is_polynomial():
        raise ValueError("expression is not polynomial")
    p = f.as_mpoly().with_vars((var,))
    coeffs = {e[0]: c for e, c in p.terms.items()}
    n = max(coeffs, default=-1)
    return UPoly(var, [coeffs.get(i, Fraction(0)) for i in range(n + 1)])


def ratfunc_parts(f: RatFunc, var: str) -> tuple[UPoly, UPoly]:
    extra = set(f.present_vars()) - {var}
    if extra:
        raise ValueError(f"expression still carries parameters {sorted(extra)}")
    num = f.num.with_vars((var,))
    den = f.den.with_vars((var,))
    def to_up(p):
        coeffs = {e[0]: c for e, c in p.terms.items()}
        n = max(coeffs, default=-1)
        return UPoly(var, [coeffs.get(i, Fraction(0)) for i in range(n + 1)])
    return to_up(num), to_up(den)


def val_ratfunc(f: RatFunc, var: str, place: UPoly):
    """Valuation of a rational function at a finite place."""
    if f.is_zero():
        return INF
    num, den = ratfunc_parts(f, var)
    return valuation_at(num, place) - valuation_at(den, place)


def is_squarefree_poly(f: RatFunc, var: str) -> bool:
    p = upoly_of(f, var)
    if p.is_zero():
        return False
    if p.is_constant():
        return True
    from k3lab.exactarith.upoly import poly_gcd

    return poly_gcd(p, p.derivative()).degree == 0


@dataclass(frozen=True)
class Place:
    poly: UPoly | None  # None encodes the place at infinity

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def label(self) -> str:
        return "inf" if self.poly is None else format_upoly(self.poly)

    def __repr__(self):
        return f"Place({self.label()})"


@dataclass(frozen=True)
class MinimalData:
    """Globally minimal (c4, c6, delta) as polynomials, with the chart bound h."""

    c4: UPoly
    c6: UPoly
    delta: UPoly
    h: int

    def infinity_triple(self):
        v4 = INF if self.c4.is_zero() else 4 * self.h - self.c4.degree
        v6 = INF if self.c6.is_zero() else 6 * self.h - self.c6.degree
        vd = 12 * self.h - self.delta.degree
        return v4, v6, vd


def minimal_c_data(w: WModel) -> MinimalData:
    """Scale (c4, c6, delta) by (u^4, u^6, u^12) into global minimality.

    Every finite place ends up with a triple not >= (4, 6, 12); h is then
    the smallest weight making the infinity chart polynomial, and the
    triple at infinity is automatically minimal.
    """
    var = w.base_var
    c4, c6, delta = w.c_invariants()
    if delta.is_zero():
        raise ValueError("discriminant vanishes identically")
    # candidate places: squarefree factors of every numerator/denominator
    candidates = UPoly.const(var, 1)
    for f in (c4, c6, delta):
        if f.is_zero():
            continue
        num, den = ratfunc_parts(f, var)
        for p in (num, den):
            if p.degree > 0:
                _, parts = squarefree_decomposition(p)
                for g, _m in parts:
                    candidates = candidates * g
    _, cand_parts = squarefree_decomposition(candidates) if candidates.degree > 0 else (None, [])
    shift = RatFunc.const(1)
    tvar = RatFunc.var(var)
    for g, _m in cand_parts:
        # refine g against each invariant so valuations are constant per part
        pieces = {g}
        for f in (c4, c6, delta):
            new_pieces = set()
            for piece in pieces:
                if f.is_zero():
                    new_pieces.add(piece)
                    continue
                num, den = ratfunc_parts(f, var)
                split_n = split_by_valuation(piece, num)
                for _vn, part in split_n.items():
                    split_d = split_by_valuation(part, den)
                    new_pieces.update(split_d.values())
            pieces = new_pieces
        for piece in pieces:
            v4 = val_ratfunc(c4, var, piece)
            v6 = val_ratfunc(c6, var, piece)
            vd = val_ratfunc(delta, var, piece)
            # INF floor-divides to INF, and v(delta) is always finite
            m = int(min(v4 // 4, v6 // 6, vd // 12))
            if m:
                fpoly = RatFunc.from_mpoly(_upoly_to_mpoly(piece))
                shift = shift * fpoly**m
    c4m = c4 / shift**4
    c6m = c6 / shift**6
    dm = delta / shift**12
    c4u = upoly_of(c4m, var)
    c6u = upoly_of(c6m, var)
    du = upoly_of(dm, var)
    h = 0
    for p, wgt in ((c4u, 4), (c6u, 6), (du, 12)):
        if not p.is_zero():
            h = max(h, -(-p.degree // wgt))
    if w.chi is not None:
        if h > w.chi:
            raise ValueError(f"declared chi={w.chi} but the model needs h={h}")
        h = w.chi
    return MinimalData(c4u, c6u, du, h)


def _upoly_to_mpoly(p: UPoly):
    from k3lab.exactarith import MPoly

    return MPoly.from_coeffs_in(p.var, {i: MPoly.const(c, (p.var,)) for i, c in enumerate(p.coeffs)})


def place_decompose(w: WModel) -> list[tuple[Place, object, object, int]]:
    """(place, v(c4), v(c6), v(delta)) over all places of bad reduction.

    Requires a fully specialized model; the result covers every zero of
    the minimal discriminant plus the place at infinity when singular
    there.  Valuations are constant across each place polynomial.
    """
    data = minimal_c_data(w)
    var = w.base_var
    out: list[tuple[Place, object, object, int]] = []
    _, parts = squarefree_decomposition(data.delta)
    for g, mult in parts:
        for v4, piece4 in sorted(
            split_by_valuation(g, data.c4).items() if not data.c4.is_zero() else [(INF, g)],
            key=lambda kv: 0 if kv[0] is INF else kv[0],
        ):
            sub = (
                split_by_valuation(piece4, data.c6).items()
                if not data.c6.is_zero()
                else [(INF, piece4)]
            )
            for v6, piece in sub:
                out.append((Place(piece), v4, v6, mult))
    v4i, v6i, vdi = data.infinity_triple()
    if vdi > 0:
        out.append((Place(None), v4i, v6i, vdi))
    elif vdi < 0:
        raise AssertionError("degree bookkeeping error at infinity")
    out.sort(key=lambda item: (item[0].is_infinite, item[0].degree, item[0].label()))
    return out


def fibers_of(w: WModel) -> list[tuple[Place, KodairaFiber, tuple]]:
    out = []
    for place, v4, v6, vd in place_decompose(w):
        try:
            fib = kodaira_type(v4, v6, vd)
        except ValueError as exc:
            raise DegenerateModelError(
                f"place {place.label()}: {exc}"
            ) from exc
        out.append((place, fib, (v4, v6, vd)))
    return out
