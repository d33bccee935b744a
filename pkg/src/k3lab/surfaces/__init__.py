"""Weierstrass models over K(t): invariants, fiber analysis, transforms.

Models carry exact rational-function coefficients (possibly with named
parameters); the fiber analysis path (place decomposition, Kodaira types,
Euler numbers, trivial lattices, torsion) requires the parameters to be
specialized away first, while the structural transforms (twist, base
change, two-isogeny) and the section group law work symbolically.
"""

from k3lab.surfaces.kodaira import KodairaFiber, kodaira_type
from k3lab.surfaces.wmodel import (
    WModel,
    base_change,
    quadratic_twist,
    two_isogeny,
)
from k3lab.surfaces.places import Place, place_decompose
from k3lab.surfaces.report import FibrationReport, analyze
from k3lab.surfaces.sections import Section, sec_add, sec_mul, sec_neg
from k3lab.surfaces.heights import height, height_pairing, sec_o_intersection
from k3lab.surfaces.inose import inose_ab, inose_a3_b2

__all__ = [
    "KodairaFiber",
    "kodaira_type",
    "WModel",
    "base_change",
    "quadratic_twist",
    "two_isogeny",
    "Place",
    "place_decompose",
    "FibrationReport",
    "analyze",
    "Section",
    "sec_add",
    "sec_mul",
    "sec_neg",
    "height",
    "height_pairing",
    "sec_o_intersection",
    "inose_ab",
    "inose_a3_b2",
]
