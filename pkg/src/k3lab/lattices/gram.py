"""Gram-matrix lattices, standard constructors and exact signatures.

ADE lattices use the negative-definite convention: -2 on the diagonal,
+1 on Dynkin adjacency; `rescale(L, -1)` flips to positive definite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from k3lab.lattices.intmat import bareiss_det, mat_fraction


@dataclass(frozen=True)
class GramLattice:
    gram: tuple[tuple[int, ...], ...]
    label: str | None = None

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        for row in g:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return bareiss_det([list(r) for r in self.gram])

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_degenerate(self) -> bool:
        return self.det() == 0

    def pair(self, x: Sequence, y: Sequence):
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return total

    def norm(self, x: Sequence):
        return self.pair(x, x)

    def with_label(self, label: str) -> "GramLattice":
        return GramLattice(self.gram, label)

    def __repr__(self):
        name = self.label or f"rank {self.rank}"
        return f"GramLattice({name}, det={self.det()})"


def direct_sum(*lattices: GramLattice) -> GramLattice:
    total = sum(L.rank for L in lattices)
    g = [[0] * total for _ in range(total)]
    off = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                g[off + i][off + j] = L.gram[i][j]
        off += L.rank
    label = "+".join(L.label or "?" for L in lattices) if lattices else "0"
    return GramLattice(tuple(tuple(r) for r in g), label)


def rescale(L: GramLattice, n: int) -> GramLattice:
    g = tuple(tuple(n * x for x in row) for row in L.gram)
    base = L.label or "?"
    return GramLattice(g, f"{base}({n})")


def _ade_adjacency(kind: str, n: int) -> list[tuple[int, int]]:
    if kind == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        # chain 0..n-2 with the last node attached to chain index 2
        return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    raise ValueError(f"unknown root system {kind!r}")


def _root_lattice(kind: str, n: int, scale: int) -> GramLattice:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for i, j in _ade_adjacency(kind, n):
        g[i][j] = g[j][i] = 1
    L = GramLattice(tuple(tuple(r) for r in g), f"{kind}{n}(-1)")
    if scale == -1:
        return L
    return rescale(L, -scale).with_label(f"{kind}{n}({scale})")


def named(name: str, *args) -> GramLattice:
    """Standard lattices: U, U(k), <m>, A/D/E root lattices and the rank-22
    even unimodular lattice of signature (3, 19)."""
    if name == "U":
        k = args[0] if args else 1
        return GramLattice(((0, k), (k, 0)), f"U({k})" if k != 1 else "U")
    if name == "span":
        (m,) = args
        return GramLattice(((m,),), f"<{m}>")
    if name in ("A", "D", "E"):
        n, scale = args
        return _root_lattice(name, n, scale)
    if name == "K3":
        e8 = _root_lattice("E", 8, -1)
        return direct_sum(e8, e8, named("U"), named("U"), named("U")).with_label("K3")
    raise ValueError(f"unknown lattice name {name!r}")


def signature(L: GramLattice) -> tuple[int, int, int]:
    """(s_plus, s_minus, s_zero) by exact symmetric congruence reduction.

    When every remaining diagonal entry vanishes but an off-diagonal does
    not, a row-plus-column addition manufactures a nonzero diagonal pivot
    (the hyperbolic-plane case), so the reduction never needs eigenvalues.
    """
    n = L.rank
    g = mat_fraction([list(r) for r in L.gram])
    sp = sm = s0 = 0
    i = 0
    while i < n:
        piv = next((j for j in range(i, n) if g[j][j] != 0), None)
        if piv is None:
            off = None
            for j in range(i, n):
                for k in range(j + 1, n):
                    if g[j][k] != 0:
                        off = (j, k)
                        break
                if off:
                    break
            if off is None:
                s0 += n - i
                break
            j, k = off
            for c in range(n):
                g[j][c] += g[k][c]
            for r in range(n):
                g[r][j] += g[r][k]
            piv = j
        if piv != i:
            g[i], g[piv] = g[piv], g[i]
            for r in range(n):
                g[r][i], g[r][piv] = g[r][piv], g[r][i]
        d = g[i][i]
        if d > 0:
            sp += 1
        else:
            sm += 1
        for r in range(i + 1, n):
            if g[r][i] != 0:
                f = g[r][i] / d
                for c in range(n):
                    g[r][c] -= f * g[i][c]
        for c in range(i + 1, n):
            if g[i][c] != 0:
                f = g[i][c] / d
                for r in range(n):
                    g[r][c] -= f * g[r][i]
        i += 1
    return sp, sm, s0


def signature_by_charpoly(L: GramLattice) -> tuple[int, int, int]:
    """Independent signature oracle: Descartes sign changes on the
    characteristic polynomial (all roots real for symmetric matrices)."""
    n = L.rank
    a = mat_fraction([list(r) for r in L.gram])
    # Faddeev-LeVerrier: charpoly coefficients c_0 .. c_n, c_n = 1
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        if k == 1:
            mk = [row[:] for row in ident]
        else:
            prod = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
            mk = [
                [prod[i][j] + (coeffs[0] if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(am[i][i] for i in range(n))
        coeffs.insert(0, -trace / k)
        m = mk
    # coeffs[i] multiplies x^i
    nonzero = [c for c in coeffs if c != 0]
    zeros = 0
    for c in coeffs:
        if c == 0:
            zeros += 1
        else:
            break
    pos = sum(
        1
        for a1, a2 in zip(nonzero, nonzero[1:])
        if (a1 < 0) != (a2 < 0)
    )
    return pos, n - zeros - pos, zeros
