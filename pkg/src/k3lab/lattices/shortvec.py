"""Short-vector enumeration and the 2 mod 4 representation test.

Enumeration uses the rational Cholesky (LDL) decomposition of a definite
Gram matrix and the classical recursive bound propagation; everything stays
in Fraction.  For an even lattice x.x mod 4 only depends on x mod 2, so the
mod-4 test enumerates {0,1}^n exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, sqrt
from typing import Iterator

from k3lab.lattices.gram import GramLattice, signature


def _ldl(g: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """g = L^T D L with L unit upper triangular (Fincke-Pohst style q_ij)."""
    n = len(g)
    q = [row[:] for row in g]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] = q[k][l] - q[k][i] * q[i][l]
    d = [q[i][i] for i in range(n)]
    return q, d


def _floor_plus_sqrt(c: Fraction, s2: Fraction) -> int:
    """floor(c + sqrt(s2)) for s2 >= 0, exact."""

    def le(m: int) -> bool:
        # m <= c + sqrt(s2)
        d = Fraction(m) - c
        if d <= 0:
            return True
        return d * d <= s2
    try:
        est = floor(float(c) + sqrt(float(s2)))
    except (OverflowError, ValueError):
        est = 0
    while le(est + 1):
        est += 1
    while not le(est):
        est -= 1
    return est


def short_vectors(L: GramLattice, bound: int) -> list[tuple[int, ...]]:
    """All nonzero x with |x.x| <= bound, one representative per {x, -x}.

    Requires a definite lattice; the representative has a positive first
    nonzero coordinate.
    """
    n = L.rank
    if n == 0:
        return []
    sp, sm, s0 = signature(L)
    if s0 or (sp and sm):
        raise ValueError("short-vector enumeration needs a definite lattice")
    sign = 1 if sm == 0 else -1
    g = [[Fraction(sign * x) for x in row] for row in L.gram]
    q, d = _ldl(g)
    c = Fraction(bound)
    out: list[tuple[int, ...]] = []
    x = [0] * n

    def recurse(i: int, remaining: Fraction):
        if i < 0:
            if any(x):
                v = tuple(x)
                first = next(val for val in v if val)
                out.append(v if first > 0 else tuple(-t for t in v))
            return
        u = sum(q[i][j] * x[j] for j in range(i + 1, n))
        # d[i] * (x_i + u)^2 <= remaining, so x_i in [-u - s, -u + s]
        lim = remaining / d[i]
        hi = _floor_plus_sqrt(-u, lim)
        lo = -_floor_plus_sqrt(u, lim)
        for xi in range(lo, hi + 1):
            x[i] = xi
            recurse(i - 1, remaining - d[i] * (xi + u) * (xi + u))
        x[i] = 0

    recurse(n - 1, c)
    uniq = {}
    for v in out:
        uniq[v] = True
    return sorted(uniq)


def short_vectors_brute(L: GramLattice, bound: int, box: int = 5) -> list[tuple[int, ...]]:
    """Box-enumeration oracle: coordinates in [-box, box]."""
    from itertools import product

    n = L.rank
    out = set()
    for v in product(range(-box, box + 1), repeat=n):
        if any(v) and abs(L.norm(list(v))) <= bound:
            first = next(x for x in v if x)
            out.add(v if first > 0 else tuple(-x for x in v))
    return sorted(out)


def represents_two_mod_four(L: GramLattice) -> bool:
    """Does some integer vector have x.x congruent to 2 mod 4?

    Exact for even lattices: x.x mod 4 only depends on x mod 2, so the
    {0,1}^n sweep is a complete decision procedure.
    """
    if not L.is_even():
        raise ValueError("mod-4 representation test requires an even lattice")
    n = L.rank
    if n == 0:
        return False
    g = L.gram
    # Gray-code sweep keeping the norm and the row sums incremental
    x = [0] * n
    s = [0] * n
    val = 0
    for k in range(1, 1 << n):
        i = (k & -k).bit_length() - 1
        gi = g[i]
        if x[i]:
            val += -2 * s[i] + gi[i]
            x[i] = 0
            for j in range(n):
                s[j] -= gi[j]
        else:
            val += 2 * s[i] + gi[i]
            x[i] = 1
            for j in range(n):
                s[j] += gi[j]
        if val % 4 == 2:
            return True
    return False


def represents_two_mod_four_brute(L: GramLattice, box: int = 3) -> bool:
    from itertools import product

    for v in product(range(-box, box + 1), repeat=L.rank):
        if any(v) and L.norm(list(v)) % 4 == 2:
            return True
    return False
