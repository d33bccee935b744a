"""Exact integer and rational matrix routines.

Matrices are lists of lists; integer algorithms never leave Z, rational ones
use Fraction.  Smith normal form returns unimodular transforms so callers can
transport generators through the normalization.
"""

from __future__ import annotations

from fractions import Fraction

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    oi[j] += x * bk[j]
    return out


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_fraction(a) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in a]


def bareiss_det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free Gaussian elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m) -> int:
    a = mat_fraction(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def solve_q(a, b) -> list[Fraction] | None:
    """One solution of a x = b over Q, or None when inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if m[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][cols]
    return x


def inverse_q(a) -> list[list[Fraction]]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    inv = inverse_q(a)
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(x.numerator)
        out.append(irow)
    return out


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """(U, S, V) with U m V = S diagonal, d_i | d_{i+1}, U and V unimodular."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # find a nonzero pivot of minimal absolute value in the trailing block
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best, piv = x, (i, j)
        if piv is None:
            break
        i, j = piv
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        if a[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                add_row(i, t, -q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                add_col(j, t, -q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue  # remainders became new smaller pivot candidates
        # divisibility: pivot must divide every later entry
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1
    return u, a, v


def diagonal(s: IntMatrix) -> list[int]:
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def int_kernel(m: IntMatrix) -> list[list[int]]:
    """Basis (rows) of {x in Z^cols : m x = 0}; automatically saturated."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return identity(cols)
    _, s, v = smith_normal_form(m)
    r = sum(1 for d in diagonal(s) if d != 0)
    vt = transpose(v)
    return [vt[i] for i in range(r, cols)]


def saturate_rows_z(m: IntMatrix) -> list[list[int]]:
    """Basis of the saturation of the row space of m inside Z^cols."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return []
    _, s, v = smith_normal_form(m)
    r = sum(1 for d in diagonal(s) if d != 0)
    vinv = inverse_unimodular(v)
    return [vinv[i] for i in range(r)]


def hnf_rows(m: IntMatrix) -> list[list[int]]:
    """Row-style Hermite normal form basis of the row lattice of m."""
    pivots: dict[int, list[int]] = {}
    work = [row[:] for row in m if any(row)]
    while work:
        vec = work.pop()
        while any(vec):
            lead = next(i for i, x in enumerate(vec) if x)
            if lead not in pivots:
                if vec[lead] < 0:
                    vec = [-x for x in vec]
                pivots[lead] = vec
                break
            b = pivots[lead]
            if vec[lead] % b[lead] == 0:
                q = vec[lead] // b[lead]
                vec = [x - q * y for x, y in zip(vec, b)]
            else:
                x0, y0 = _ext_gcd(b[lead], vec[lead])
                g = x0 * b[lead] + y0 * vec[lead]
                new_piv = [x0 * x + y0 * y for x, y in zip(b, vec)]
                qb = b[lead] // g
                qv = vec[lead] // g
                rb = [x - qb * y for x, y in zip(b, new_piv)]
                rv = [x - qv * y for x, y in zip(vec, new_piv)]
                pivots[lead] = new_piv
                if any(rb):
                    work.append(rb)
                vec = rv
    basis = [pivots[k] for k in sorted(pivots)]
    for i in range(len(basis) - 1, -1, -1):
        b = basis[i]
        lead = next(j for j, x in enumerate(b) if x)
        for j in range(i):
            q = basis[j][lead] // b[lead]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], b)]
    return basis


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    """(x, y) with x a + y b = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    return old_x, old_y
