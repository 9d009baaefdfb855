"""Exact rational linear algebra.

Everything here works over `fractions.Fraction` and is deterministic:
elimination always picks the leftmost viable column and the smallest row
index, so ranks, kernels and echelon bases are reproducible byte for byte.
The elimination core is fraction-free (Bareiss) over integers obtained by
clearing denominators row by row; row scaling changes neither rank nor
kernel.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Vec = tuple[Fraction, ...]


def vec(values) -> Vec:
    return tuple(Fraction(v) for v in values)


def zeros(n: int) -> Vec:
    return (Fraction(0),) * n


def add_vec(a, b) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def scale_vec(c, a) -> Vec:
    c = Fraction(c)
    return tuple(c * x for x in a)


def dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def mat_vec(m, v) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def transpose(m):
    return [list(col) for col in zip(*m)]


def identity(n):
    return [[Fraction(i == j) for j in range(n)] for i in range(n)]


def _integer_rows(rows):
    """Scale each row to integers with content 1; zero rows are dropped."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        if all(x == 0 for x in fr):
            continue
        mult = lcm(*(x.denominator for x in fr)) if fr else 1
        ints = [int(x * mult) for x in fr]
        g = 0
        for x in ints:
            g = gcd(g, x)
        out.append([x // g for x in ints])
    return out


def _bareiss(rows):
    """Fraction-free row echelon form.

    Returns (echelon_rows, pivot_columns).  Input rows must be integers;
    `_integer_rows` prepares arbitrary rational input.
    """
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        src = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if src is None:
            continue
        if src != r:
            m[r], m[src] = m[src], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c, ncols):
                row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
        pivots.append(c)
        prev = piv
        r += 1
    return m[: len(pivots)], pivots


def primitive_vector(v) -> Vec:
    """Scale to a primitive integer vector with positive leading entry."""
    fr = [Fraction(x) for x in v]
    nz = [x for x in fr if x != 0]
    if not nz:
        return tuple(fr)
    mult = lcm(*(x.denominator for x in fr))
    ints = [int(x * mult) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if nz[0] < 0:
        g = -g
    return tuple(Fraction(x, g) for x in ints)


def rank_and_kernel(rows, ncols=None):
    """Exact rank and kernel basis of the linear map given by `rows`.

    Kernel vectors are primitive integer vectors, one per free column, in
    increasing free-column order.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    work = _integer_rows(rows)
    ech, pivots = _bareiss(work) if work else ([], [])
    rank = len(pivots)
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(rank - 1, -1, -1):
            pc = pivots[r]
            s = sum((Fraction(ech[r][c]) * x[c] for c in range(pc + 1, ncols) if x[c]), Fraction(0))
            x[pc] = -s / ech[r][pc]
        kernel.append(primitive_vector(x))
    return rank, kernel


def rank(rows, ncols=None) -> int:
    r, _ = rank_and_kernel(rows, ncols)
    return r


def rref(rows, ncols=None):
    """Reduced row echelon form: canonical basis of the row space."""
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    work = _integer_rows(rows)
    if not work:
        return []
    ech, pivots = _bareiss(work)
    out = [[Fraction(x) for x in row] for row in ech]
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        piv = out[r][pc]
        out[r] = [x / piv for x in out[r]]
        for i in range(r):
            f = out[i][pc]
            if f:
                out[i] = [a - f * b for a, b in zip(out[i], out[r])]
    return out


def in_row_span(rows, v, ncols=None) -> bool:
    rows = list(rows)
    if ncols is None:
        ncols = len(v)
    base = rank(rows, ncols) if rows else 0
    return rank(rows + [list(v)], ncols) == base


def solve(a_rows, b):
    """One exact solution of A x = b, or None if inconsistent."""
    if not a_rows:
        return None
    ncols = len(a_rows[0])
    aug = [list(row) + [bv] for row, bv in zip(a_rows, b, strict=True)]
    work = _integer_rows(aug)
    ech, pivots = _bareiss(work) if work else ([], [])
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        s = sum((Fraction(ech[r][c]) * x[c] for c in range(pc + 1, ncols) if x[c]), Fraction(0))
        x[pc] = (Fraction(ech[r][ncols]) - s) / ech[r][pc]
    return tuple(x)


def invert(m):
    """Exact inverse; raises ValueError on singular input."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        src = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if src is None:
            raise ValueError("matrix is singular")
        if src != c:
            aug[c], aug[src] = aug[src], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def determinant(m) -> Fraction:
    n = len(m)
    if n == 0:
        return Fraction(1)
    work = [[Fraction(x) for x in row] for row in m]
    sign = 1
    denom = Fraction(1)
    # clear denominators globally so Bareiss stays integral
    mult = lcm(*(x.denominator for row in work for x in row))
    ints = [[int(x * mult) for x in row] for row in work]
    denom = Fraction(mult) ** n
    prev = 1
    for c in range(n):
        src = next((i for i in range(c, n) if ints[i][c] != 0), None)
        if src is None:
            return Fraction(0)
        if src != c:
            ints[c], ints[src] = ints[src], ints[c]
            sign = -sign
        piv = ints[c][c]
        for i in range(c + 1, n):
            mic = ints[i][c]
            for j in range(c, n):
                ints[i][j] = (piv * ints[i][j] - mic * ints[c][j]) // prev
        prev = piv
    return Fraction(sign * prev) / denom


def leading_minors(m):
    n = len(m)
    return [determinant([row[: k + 1] for row in m[: k + 1]]) for k in range(n)]


def is_positive_definite(m) -> bool:
    return all(d > 0 for d in leading_minors(m))


def is_negative_definite(m) -> bool:
    return all((d > 0 if k % 2 else d < 0) for k, d in enumerate(leading_minors(m), start=0)) if len(m) else True


def is_nondegenerate(m) -> bool:
    return determinant(m) != 0
