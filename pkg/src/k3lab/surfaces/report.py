"""Fibration reports: fibers, Euler number, trivial lattice, torsion.

The Euler total must come out at 12*chi; anything else signals a
mis-specialized or non-minimal model and raises DegenerateModelError so
random-draw harness scenarios can retry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from k3lab.lattices import GramLattice, direct_sum, named
from k3lab.surfaces.kodaira import KodairaFiber
from k3lab.surfaces.places import (
    DegenerateModelError,
    Place,
    fibers_of,
    minimal_c_data,
)
from k3lab.surfaces.sections import Section, sec_add, section_order
from k3lab.surfaces.wmodel import WModel


@dataclass(frozen=True)
class FibrationReport:
    chi: int
    fibers: tuple[tuple[Place, KodairaFiber, tuple], ...]
    euler: int
    trivial_lattice: GramLattice
    torsion: tuple[int, ...]

    def configuration(self) -> dict[str, int]:
        """Multiset of fiber types with geometric multiplicities."""
        out: dict[str, int] = {}
        for place, fiber, _ in self.fibers:
            if fiber.symbol == "I0":
                continue
            out[fiber.name] = out.get(fiber.name, 0) + place.degree
        return out

    def to_json(self) -> dict:
        def enc(v):
            return None if v == float("inf") else int(v)

        return {
            "chi": self.chi,
            "places": [
                {
                    "poly": place.label(),
                    "degree": place.degree,
                    "type": fiber.name,
                    "vtriple": [enc(v) for v in triple],
                }
                for place, fiber, triple in self.fibers
            ],
            "euler": self.euler,
            "trivial_lattice": [list(r) for r in self.trivial_lattice.gram],
            "torsion": list(self.torsion),
        }


def trivial_lattice_of(
    fibers: Sequence[tuple[Place, KodairaFiber, tuple]]
) -> GramLattice:
    parts = [named("U")]
    for place, fiber, _ in fibers:
        root = fiber.root_lattice
        if root is None:
            continue
        kind, rank = root
        for _ in range(place.degree):
            parts.append(named(kind, rank, -1))
    return direct_sum(*parts)


def torsion_group(
    w: WModel, torsion_sections: Sequence[Section], bound: int = 12
) -> tuple[int, ...]:
    """Invariant factors of the group generated by the supplied sections.

    Verifies each section lies on the model and has finite order; the
    closure is computed with the exact group law.
    """
    elems = {(None, None)}  # encoded zero section

    def key(s: Section):
        return (None, None) if s.is_zero else (s.x, s.y)

    frontier = []
    for s in torsion_sections:
        if not s.on_curve(w):
            raise ValueError("claimed torsion section is not on the model")
        if section_order(s, w, bound) is None:
            raise ValueError("claimed torsion section has order beyond the bound")
        if key(s) not in elems:
            elems.add(key(s))
            frontier.append(s)
    gens = list(frontier)
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = sec_add(cur, g, w)
            if key(nxt) not in elems:
                elems.add(key(nxt))
                frontier.append(nxt)
    order = len(elems)
    if order == 1:
        return ()
    max_order = 1
    for s in gens:
        max_order = max(max_order, section_order(s, w, bound) or 1)
    # all torsion groups here have at most two invariant factors
    if order == max_order:
        return (max_order,)
    if order % max_order:
        raise ValueError("inconsistent torsion group data")
    return (order // max_order, max_order)


def analyze(
    w: WModel,
    torsion_sections: Sequence[Section] = (),
    torsion_bound: int = 12,
) -> FibrationReport:
    """Full fibration report of a specialized minimal model."""
    if not w.is_specialized():
        raise ValueError("specialize the parameters before analysis")
    data = minimal_c_data(w)
    fibers = tuple(fibers_of(w))
    euler = sum(place.degree * fiber.euler for place, fiber, _ in fibers)
    if euler != 12 * data.h:
        raise DegenerateModelError(
            f"Euler total {euler} != 12*chi = {12 * data.h}"
        )
    torsion = torsion_group(w, torsion_sections, torsion_bound)
    # primitive-closure bound: |torsion|^2 divides the root-part determinant
    tors_order = 1
    for d in torsion:
        tors_order *= d
    root_det = 1
    for place, fiber, _ in fibers:
        root = fiber.root_lattice
        if root:
            root_det *= abs(named(root[0], root[1], -1).det()) ** place.degree
    if root_det % (tors_order * tors_order):
        raise ValueError("torsion order violates the primitive-closure bound")
    # each torsion order must divide some fiber component group exponent product
    return FibrationReport(
        chi=data.h,
        fibers=fibers,
        euler=euler,
        trivial_lattice=trivial_lattice_of(fibers),
        torsion=torsion,
    )
