"""Canonical heights of sections on an elliptic surface.

h(P) = 2*chi + 2 (P.O) - sum of local contributions, and the pairing
<P,Q> = chi + (P.O) + (Q.O) - (P.Q) - sum of pair contributions.  Fiber
components enter through the classical contribution tables on the Kodaira
types; components at multiplicative places are detected algorithmically,
starred ones are supplied per scenario.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from k3lab.surfaces.kodaira import KodairaFiber
from k3lab.surfaces.places import Place
from k3lab.surfaces.sections import Section, component_at_place, sec_o_intersection
from k3lab.surfaces.wmodel import WModel


def component_map(
    p: Section,
    w: WModel,
    fibers: list[tuple[Place, KodairaFiber, tuple]],
    h: int,
    supplied: Mapping[str, object] | None = None,
) -> dict[str, object]:
    """Component met by the section at each reducible place.

    Supplied entries (keyed by place label) win; multiplicative places are
    computed; an additive place left undetermined raises.
    """
    supplied = dict(supplied or {})
    out: dict[str, object] = {}
    for place, fiber, _ in fibers:
        if fiber.component_count == 1:
            continue
        label = place.label()
        if label in supplied:
            out[label] = supplied[label]
            continue
        comp = component_at_place(p, w, place, fiber, h)
        if comp == "undetermined":
            raise ValueError(
                f"component at additive place {label} must be supplied"
            )
        out[label] = comp
    return out


def height(
    p: Section,
    w: WModel,
    fibers: list[tuple[Place, KodairaFiber, tuple]],
    h: int,
    components: Mapping[str, object] | None = None,
) -> Fraction:
    """Canonical height of a section (exact)."""
    if p.is_zero:
        return Fraction(0)
    po = sec_o_intersection(p, w, h)
    comps = component_map(p, w, fibers, h, components)
    total = Fraction(2 * h + 2 * po)
    for place, fiber, _ in fibers:
        if fiber.component_count == 1:
            continue
        comp = comps[place.label()]
        total -= place.degree * fiber.contribution(comp)
    return total


def height_pairing(
    p: Section,
    q: Section,
    w: WModel,
    fibers: list[tuple[Place, KodairaFiber, tuple]],
    h: int,
    pq_intersection: int,
    components_p: Mapping[str, object] | None = None,
    components_q: Mapping[str, object] | None = None,
) -> Fraction:
    """Height pairing of two distinct sections.

    The intersection number P.Q is an input (supplied or computed by the
    caller); component data follows the same rules as for heights.  Pair
    contributions at I_n places need orientation-consistent indices, which
    must then be supplied.
    """
    if p.is_zero or q.is_zero:
        return Fraction(0)
    po = sec_o_intersection(p, w, h)
    qo = sec_o_intersection(q, w, h)
    cp = component_map(p, w, fibers, h, components_p)
    cq = component_map(q, w, fibers, h, components_q)
    total = Fraction(h + po + qo - pq_intersection)
    for place, fiber, _ in fibers:
        if fiber.component_count == 1:
            continue
        total -= place.degree * fiber.pair_contribution(
            cp[place.label()], cq[place.label()]
        )
    return total
