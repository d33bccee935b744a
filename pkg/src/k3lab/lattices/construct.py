"""Sublattices, orthogonal complements, saturation, overlattices, enhancement.

Glue vectors live in the ambient lattice basis with rational coordinates;
adjoining them builds a finite-index overlattice whose basis is recovered
from a Hermite reduction over a common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from k3lab.lattices.discform import DiscForm, _mod2, disc_form
from k3lab.lattices.gram import GramLattice
from k3lab.lattices.intmat import hnf_rows, int_kernel, saturate_rows_z


@dataclass(frozen=True)
class Sublat:
    ambient: GramLattice
    basis: tuple[tuple[int, ...], ...]  # rows, in ambient coordinates

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.basis)
        object.__setattr__(self, "basis", rows)
        from k3lab.lattices.intmat import rank as _rank

        if rows and _rank([list(r) for r in rows]) != len(rows):
            raise ValueError("sublattice basis rows are dependent")

    def gram(self) -> GramLattice:
        g = [
            [self.ambient.pair(r1, r2) for r2 in self.basis] for r1 in self.basis
        ]
        return GramLattice(tuple(tuple(row) for row in g))


def saturate_rows(ambient_rank: int, rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the saturation of the span of rows inside Z^ambient_rank."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    return saturate_rows_z(rows)


def orth_complement(sub: Sublat) -> tuple[GramLattice, list[list[int]]]:
    """Orthogonal complement of the sublattice in its ambient lattice.

    Returns the restricted Gram and the (primitive) basis rows in ambient
    coordinates.  The complement arises as the integer kernel of the
    pairing-with-basis map, hence is saturated by construction.
    """
    amb = sub.ambient
    if amb.is_degenerate():
        raise ValueError("ambient lattice must be nondegenerate")
    pairing = [
        [amb.pair(b, [1 if i == j else 0 for j in range(amb.rank)]) for i in range(amb.rank)]
        for b in sub.basis
    ]
    kernel = int_kernel(pairing) if pairing else [[1 if i == j else 0 for j in range(amb.rank)] for i in range(amb.rank)]
    g = [[amb.pair(r1, r2) for r2 in kernel] for r1 in kernel]
    return GramLattice(tuple(tuple(row) for row in g)), kernel


def _common_denominator(vecs: Sequence[Sequence[Fraction]]) -> int:
    d = 1
    for v in vecs:
        for x in v:
            f = Fraction(x)
            d = d * f.denominator // gcd(d, f.denominator)
    return d


def overlattice_from_glue(
    L: GramLattice,
    glues: Sequence[Sequence[Fraction]],
    require_even: bool = True,
) -> tuple[GramLattice, list[list[Fraction]]]:
    """Lattice generated by L and the glue vectors.

    Validates each glue (integral pairing with L, integral and, when
    required, even self-pairing).  Returns the new Gram and the new basis
    rows expressed in the old basis (rational coordinates).
    """
    n = L.rank
    for v in glues:
        pairings = [L.pair(v, [1 if i == j else 0 for j in range(n)]) for i in range(n)]
        if any(Fraction(p).denominator != 1 for p in pairings):
            raise ValueError("glue vector does not pair integrally with the lattice")
        s = Fraction(L.norm(v))
        if s.denominator != 1:
            raise ValueError("glue vector has non-integral self-pairing")
        if require_even and s.numerator % 2:
            raise ValueError("glue vector has odd self-pairing in an even overlattice")
    if not glues:
        return L, [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    vecs = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    vecs += [[Fraction(x) for x in v] for v in glues]
    d = _common_denominator(vecs)
    scaled = [[int(x * d) for x in v] for v in vecs]
    basis_scaled = hnf_rows(scaled)
    if len(basis_scaled) != n:
        raise ValueError("glue vectors do not preserve the rank")
    basis = [[Fraction(x, d) for x in row] for row in basis_scaled]
    g = [[L.pair(r1, r2) for r2 in basis] for r1 in basis]
    gi = [[int(x) for x in row] for row in g]
    return GramLattice(tuple(tuple(r) for r in gi)), basis


def divisibility(L: GramLattice, v: Sequence[int]) -> int:
    """gcd of the pairings of v with the lattice (v divided by this lies
    in the dual)."""
    d = 0
    for i in range(L.rank):
        d = gcd(d, L.pair(v, [1 if j == i else 0 for j in range(L.rank)]))
    return abs(d)


def is_primitive(L: GramLattice, v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


@dataclass(frozen=True)
class EnhanceRecipe:
    """Glue data for rebuilding the divisor side of an enhancement.

    After cutting by v, the complement replaces the ambient lattice on the
    transcendental side; the divisor side must adjoin a glue (m + e)/d1 with
    e the new <v.v> generator and m a dual class of order d1 whose q value
    is opposite to q_target mod 2Z.
    """

    v_square: int
    d1: int
    q_target: Fraction  # q of v/d1 in the ambient discriminant group


def enhance(T: GramLattice, v: Sequence[int]) -> tuple[GramLattice, EnhanceRecipe]:
    """Cut the lattice T by a primitive vector of negative square.

    Returns the orthogonal complement of v (the new transcendental side)
    together with the glue recipe needed on the divisor side.
    """
    if not is_primitive(T, v):
        raise ValueError("enhancement vector must be primitive")
    vv = T.norm(list(v))
    if vv >= 0:
        raise ValueError("enhancement vector must have negative square")
    t_new, _ = orth_complement(Sublat(T, (tuple(v),)))
    d1 = divisibility(T, v)
    q_target = _mod2(Fraction(vv, d1 * d1))
    return t_new, EnhanceRecipe(v_square=vv, d1=d1, q_target=q_target)


def glue_candidates(
    ns_side: GramLattice, recipe: EnhanceRecipe
) -> list[list[Fraction]]:
    """All glue vectors (m + e)/d1 over ns_side + <v.v> compatible with the
    recipe: m runs over dual classes of order d1 with opposite q value."""
    d1 = recipe.d1
    if d1 == 1:
        return []
    df = disc_form(ns_side)
    want = _mod2(-recipe.q_target)
    n = ns_side.rank
    out = []
    for el in df.elements():
        if all(c == 0 for c in el):
            continue
        if df.element_order(el) != d1 or df.q_of(el) != want:
            continue
        m = [Fraction(0)] * n
        for c, gen in zip(el, df.gens):
            if c:
                m = [x + c * y for x, y in zip(m, gen)]
        # glue = m + e/d1 with m already a dual vector (denominators built in)
        out.append([Fraction(x) for x in m] + [Fraction(1, d1)])
    return out
