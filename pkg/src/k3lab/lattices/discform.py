"""Discriminant groups and forms of nondegenerate even lattices.

For a lattice L with Gram matrix G the discriminant group is Z^n / G Z^n;
Smith normal form U G V = diag(d_i) identifies it with the product of
Z/d_i, and the generators transport back to rational vectors g_i =
G^{-1} U^{-1} e_i in the lattice basis.  The quadratic form q takes values
in Q/2Z (generators' self-pairings), the bilinear form b in Q/Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from k3lab.lattices.gram import GramLattice
from k3lab.lattices.intmat import (
    diagonal,
    inverse_q,
    inverse_unimodular,
    smith_normal_form,
)


def _mod(x: Fraction, m: int) -> Fraction:
    return x - m * (x / m).__floor__() if isinstance(x, Fraction) else Fraction(x) % m


def _mod2(x: Fraction) -> Fraction:
    f = Fraction(x)
    return f - 2 * (f / 2).__floor__()


def _mod1(x: Fraction) -> Fraction:
    f = Fraction(x)
    return f - f.__floor__()


@dataclass(frozen=True)
class DiscForm:
    factors: tuple[int, ...]  # invariant factors > 1, each dividing the next
    gens: tuple[tuple[Fraction, ...], ...]  # in lattice-basis coordinates
    q: tuple[Fraction, ...]  # values in [0, 2)
    b: tuple[tuple[Fraction, ...], ...]  # values in [0, 1)

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    @property
    def min_generators(self) -> int:
        return len(self.factors)

    def q_of(self, coords: tuple[int, ...]) -> Fraction:
        """q of sum_i coords[i] * gen_i, reduced into [0, 2)."""
        total = Fraction(0)
        k = len(self.factors)
        for i in range(k):
            if coords[i]:
                total += coords[i] * coords[i] * self.q[i]
                for j in range(i + 1, k):
                    if coords[j]:
                        total += 2 * coords[i] * coords[j] * self.b[i][j]
        return _mod2(total)

    def b_of(self, x: tuple[int, ...], y: tuple[int, ...]) -> Fraction:
        total = Fraction(0)
        k = len(self.factors)
        for i in range(k):
            if x[i]:
                for j in range(k):
                    if y[j]:
                        total += x[i] * y[j] * self.b[i][j]
        return _mod1(total)

    def elements(self):
        return product(*(range(d) for d in self.factors))

    def element_order(self, coords: tuple[int, ...]) -> int:
        from math import gcd

        n = 1
        for c, d in zip(coords, self.factors):
            n = n * (d // gcd(c, d)) // gcd(n, d // gcd(c, d))
        return n

    def opposite(self) -> "DiscForm":
        """Same group with q and b negated."""
        return DiscForm(
            self.factors,
            self.gens,
            tuple(_mod2(-x) for x in self.q),
            tuple(tuple(_mod1(-x) for x in row) for row in self.b),
        )


def disc_form(L: GramLattice) -> DiscForm:
    if L.is_degenerate():
        raise ValueError("degenerate lattice has no discriminant form")
    n = L.rank
    g = [list(r) for r in L.gram]
    u, s, _ = smith_normal_form(g)
    d = diagonal(s)
    uinv = inverse_unimodular(u)
    ginv = inverse_q(g)
    gens: list[tuple[Fraction, ...]] = []
    factors: list[int] = []
    for i in range(n):
        if d[i] > 1:
            factors.append(d[i])
            col = [Fraction(uinv[r][i]) for r in range(n)]
            gen = tuple(
                sum(ginv[r][c] * col[c] for c in range(n)) for r in range(n)
            )
            gens.append(gen)
    qs = []
    bs = [[Fraction(0)] * len(gens) for _ in gens]
    for i, gi in enumerate(gens):
        qs.append(_mod2(_pair_q(L, gi, gi)))
        for j, gj in enumerate(gens):
            bs[i][j] = _mod1(_pair_q(L, gi, gj))
    return DiscForm(tuple(factors), tuple(gens), tuple(qs), tuple(tuple(r) for r in bs))


def _pair_q(L: GramLattice, x, y) -> Fraction:
    total = Fraction(0)
    for i, xi in enumerate(x):
        if xi:
            total += xi * sum(L.gram[i][j] * yj for j, yj in enumerate(y) if yj)
    return total


def _q_histogram(f: DiscForm):
    from collections import Counter

    hist: Counter = Counter()
    for el in f.elements():
        hist[(f.element_order(el), f.q_of(el))] += 1
    return hist


def disc_forms_isomorphic(
    A: DiscForm, B: DiscForm, order_bound: int = 10_000, node_budget: int = 2_000_000
) -> bool:
    """Existence of a group isomorphism matching q and b on generators.

    Cheap invariants first (invariant factors, then the histogram of
    (element order, q value) pairs); a backtracking search over generator
    images settles the survivors.
    """
    if A.order != B.order:
        return False
    if A.order > order_bound or B.order > order_bound:
        raise ValueError("discriminant group order exceeds the search bound")
    if A.factors != B.factors:
        return False
    if not A.factors:
        return True
    if _q_histogram(A) != _q_histogram(B):
        return False

    elements_b = list(B.elements())
    by_order_q: dict[tuple[int, Fraction], list[tuple[int, ...]]] = {}
    for el in elements_b:
        by_order_q.setdefault((B.element_order(el), B.q_of(el)), []).append(el)

    k = len(A.factors)
    budget = [node_budget]

    def generates(images: list[tuple[int, ...]]) -> bool:
        seen = {(0,) * k}
        frontier = [(0,) * k]
        while frontier:
            cur = frontier.pop()
            for img in images:
                nxt = tuple((c + i) % d for c, i, d in zip(cur, img, B.factors))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen) == B.order

    def search(i: int, chosen: list[tuple[int, ...]]) -> bool:
        if budget[0] <= 0:
            raise ValueError("isomorphism search budget exhausted")
        budget[0] -= 1
        if i == k:
            return generates(chosen)
        gen_a = tuple(1 if t == i else 0 for t in range(k))
        key = (A.factors[i], A.q_of(gen_a))
        for cand in by_order_q.get(key, ()):  # order must match exactly
            ok = True
            for j, prev in enumerate(chosen):
                prev_a = tuple(1 if t == j else 0 for t in range(k))
                if B.b_of(prev, cand) != A.b_of(prev_a, gen_a):
                    ok = False
                    break
            if ok and search(i + 1, chosen + [cand]):
                return True
        return False

    return search(0, [])


def nikulin_unique(L: GramLattice) -> bool:
    """True when the uniqueness criterion for even indefinite lattices
    applies: s+ > 0, s- > 0 and the discriminant group needs at most
    rank - 2 generators.  False only means the criterion is inapplicable."""
    from k3lab.lattices.gram import signature

    if not L.is_even():
        raise ValueError("criterion applies to even lattices")
    sp, sm, s0 = signature(L)
    if s0:
        return False
    if sp == 0 or sm == 0:
        return False
    return disc_form(L).min_generators <= L.rank - 2


def nikulin_embeds(
    M: GramLattice, ambient_signature: tuple[int, int], ambient_rank: int
) -> bool:
    """Unique-primitive-embedding criterion of M into the even unimodular
    lattice of the given signature."""
    from k3lab.lattices.gram import signature

    if not M.is_even():
        raise ValueError("criterion applies to even lattices")
    sp, sm, s0 = signature(M)
    if s0:
        return False
    tp, tm = ambient_signature
    if tp + tm != ambient_rank:
        raise ValueError("ambient signature does not match ambient rank")
    return (
        sp < tp
        and sm < tm
        and disc_form(M).min_generators <= ambient_rank - M.rank - 2
    )
