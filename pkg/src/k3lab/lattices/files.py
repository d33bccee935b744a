"""Lattice literal mini-language.

JSON forms:
    {"name": "U(2)"}                      a named lattice
    {"gram": [[0, 1], [1, 0]]}            explicit Gram matrix
    {"name": "anything", "gram": [...]}   explicit Gram with a label
    {"sum": [expr, expr, ...]}            direct sum; entries are strings
                                          or nested objects

Name strings: "U", "U(2)", "<m>" (rank one), "A2(-1)", "D8(-1)", "E8(-1)"
and friends, "K3".
"""

from __future__ import annotations

import re

from k3lab.lattices.gram import GramLattice, direct_sum, named

_NAME_RE = re.compile(r"^([ADE])(\d+)\((-?\d+)\)$")
_U_RE = re.compile(r"^U(?:\((-?\d+)\))?$")
_SPAN_RE = re.compile(r"^<(-?\d+)>$")


def lattice_from_name(text: str) -> GramLattice:
    text = text.strip()
    if text == "K3":
        return named("K3")
    m = _U_RE.match(text)
    if m:
        k = int(m.group(1)) if m.group(1) else 1
        return named("U", k)
    m = _SPAN_RE.match(text)
    if m:
        return named("span", int(m.group(1)))
    m = _NAME_RE.match(text)
    if m:
        kind, n, scale = m.group(1), int(m.group(2)), int(m.group(3))
        return named(kind, n, scale)
    raise ValueError(f"unknown lattice literal {text!r}")


def lattice_from_json(obj) -> GramLattice:
    if isinstance(obj, str):
        return lattice_from_name(obj)
    if not isinstance(obj, dict):
        raise ValueError("lattice literal must be a string or an object")
    if "sum" in obj:
        parts = [lattice_from_json(p) for p in obj["sum"]]
        if not parts:
            raise ValueError("empty direct sum")
        return direct_sum(*parts)
    if "gram" in obj:
        L = GramLattice(tuple(tuple(int(x) for x in row) for row in obj["gram"]))
        if "name" in obj:
            L = L.with_label(str(obj["name"]))
        return L
    if "name" in obj:
        return lattice_from_name(obj["name"])
    raise ValueError("lattice object needs one of 'name', 'gram', 'sum'")


def lattice_to_json(L: GramLattice) -> dict:
    return {"name": L.label or "", "gram": [list(r) for r in L.gram]}
