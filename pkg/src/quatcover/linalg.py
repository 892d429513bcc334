"""Exact integer and rational linear algebra.

Matrices are plain lists of rows. Integer routines work on ``int`` entries,
rational routines on ``fractions.Fraction``; nothing here touches floats.
Row vectors are the default convention: a lattice is generated by the rows
of its basis matrix and ``x @ A`` is written ``vec_mat(x, A)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def transpose(a: Sequence[Sequence]) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if not a:
        return []
    bt = transpose(b)
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vec_mat(x: Sequence, a: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    if not a:
        return []
    n = len(a[0])
    out = [0] * n
    for xi, row in zip(x, a):
        if xi:
            for j in range(n):
                out[j] += xi * row[j]
    return out


def is_zero_matrix(a: Sequence[Sequence]) -> bool:
    return all(x == 0 for row in a for x in row)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


# ---------------------------------------------------------------------------
# Hermite normal form (row style)


def hnf_with_transform(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular (m x m) and ``U @ A == H``. The
    nonzero rows of ``H`` come first, pivots are positive and strictly move
    right, and entries above a pivot lie in ``[0, pivot)``.
    """
    h = [list(map(int, row)) for row in a]
    m = len(h)
    n = len(h[0]) if m else 0
    u = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd-combine every row below r into row r for this column
        for i in range(r + 1, m):
            if h[i][c] == 0:
                continue
            x, y = h[r][c], h[i][c]
            g, s, t = _xgcd(x, y)
            xg, yg = x // g, y // g
            hr, hi = h[r], h[i]
            h[r] = [s * p + t * q for p, q in zip(hr, hi)]
            h[i] = [-yg * p + xg * q for p, q in zip(hr, hi)]
            ur, ui = u[r], u[i]
            u[r] = [s * p + t * q for p, q in zip(ur, ui)]
            u[i] = [-yg * p + xg * q for p, q in zip(ur, ui)]
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-v for v in h[r]]
            u[r] = [-v for v in u[r]]
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                h[i] = [v - q * w for v, w in zip(h[i], h[r])]
                u[i] = [v - q * w for v, w in zip(u[i], u[r])]
        r += 1
    return h, u


def hnf(a: Sequence[Sequence[int]]) -> Matrix:
    """Nonzero rows of the row Hermite normal form of ``a``."""
    if not a:
        return []
    h, _ = hnf_with_transform(a)
    return [row for row in h if any(row)]


def integer_left_kernel(a: Sequence[Sequence[int]]) -> Matrix:
    """HNF basis of ``{x in Z^m : x @ a == 0}``."""
    m = len(a)
    if m == 0:
        return []
    if not a[0]:
        return identity(m)
    h, u = hnf_with_transform(a)
    ker = [u[i] for i in range(m) if not any(h[i])]
    return hnf(ker) if ker else []


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, list[int], Matrix]:
    """Smith normal form of an integer matrix.

    Returns ``(S, diag, T)`` with ``S`` (m x m) and ``T`` (n x n) unimodular,
    ``S @ A @ T`` diagonal, and ``diag`` the nonzero diagonal entries, each
    positive and dividing the next.
    """
    d = [list(map(int, row)) for row in a]
    m = len(d)
    n = len(d[0]) if m else 0
    s = identity(m)
    t = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        s[dst] = [x + k * y for x, y in zip(s[dst], s[src])]

    def add_col(dst, src, k):
        for row in d:
            row[dst] += k * row[src]
        for row in t:
            row[dst] += k * row[src]

    diag = []
    for k in range(min(m, n)):
        while True:
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    v = d[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                return s, diag, t
            _, bi, bj = best
            if bi != k:
                swap_rows(k, bi)
            if bj != k:
                swap_cols(k, bj)
            p = d[k][k]
            dirty = False
            for i in range(k + 1, m):
                if d[i][k]:
                    add_row(i, k, -(d[i][k] // p))
                    dirty = dirty or d[i][k] != 0
            for j in range(k + 1, n):
                if d[k][j]:
                    add_col(j, k, -(d[k][j] // p))
                    dirty = dirty or d[k][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(k + 1, m) for j in range(k + 1, n) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(k, bad, 1)
        if d[k][k] < 0:
            d[k] = [-v for v in d[k]]
            s[k] = [-v for v in s[k]]
        diag.append(d[k][k])
    return s, diag, t


# ---------------------------------------------------------------------------
# Rational elimination


def _frac_rows(a: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in a]


def rref(a: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q; returns (R, pivot columns)."""
    r = _frac_rows(a)
    m = len(r)
    n = len(r[0]) if m else 0
    pivots = []
    row = 0
    for c in range(n):
        piv = next((i for i in range(row, m) if r[i][c] != 0), None)
        if piv is None:
            continue
        r[row], r[piv] = r[piv], r[row]
        inv = 1 / r[row][c]
        r[row] = [x * inv for x in r[row]]
        for i in range(m):
            if i != row and r[i][c] != 0:
                f = r[i][c]
                r[i] = [x - f * y for x, y in zip(r[i], r[row])]
        pivots.append(c)
        row += 1
        if row == m:
            break
    return r, pivots


def rank(a: Sequence[Sequence]) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence]) -> Matrix:
    """Basis (as rows) of the right null space ``{v : a @ v == 0}`` over Q."""
    if not a:
        return []
    n = len(a[0])
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def left_nullspace(a: Sequence[Sequence]) -> Matrix:
    """Basis of ``{x : x @ a == 0}`` over Q."""
    if not a:
        return []
    if not a[0]:
        return [list(map(Fraction, row)) for row in identity(len(a))]
    return nullspace(transpose(a))


def solve_left(a: Sequence[Sequence], b: Sequence) -> list | None:
    """Some rational ``x`` with ``x @ a == b``, or None if inconsistent."""
    m = len(a)
    at = transpose(a)
    aug = [list(row) + [bb] for row, bb in zip(at, b)]
    r, pivots = rref(aug)
    if m in pivots:
        return None
    x = [Fraction(0)] * m
    for i, p in enumerate(pivots):
        x[p] = r[i][m]
    return x


def det(a: Sequence[Sequence]):
    """Determinant by Gaussian elimination over Q (exact)."""
    r = _frac_rows(a)
    n = len(r)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if r[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            r[c], r[piv] = r[piv], r[c]
            out = -out
        out *= r[c][c]
        inv = 1 / r[c][c]
        for i in range(c + 1, n):
            if r[i][c] != 0:
                f = r[i][c] * inv
                r[i] = [x - f * y for x, y in zip(r[i], r[c])]
    return out


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def common_denominator(a: Sequence[Sequence]) -> int:
    out = 1
    for row in a:
        for x in row:
            out = lcm(out, Fraction(x).denominator)
    return out


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


# ---------------------------------------------------------------------------
# GF(2)


def rank_mod2(a: Sequence[Sequence[int]]) -> int:
    return len(_rref_mod2(a)[1])


def _rref_mod2(a):
    r = [[x & 1 for x in row] for row in a]
    m = len(r)
    n = len(r[0]) if m else 0
    pivots = []
    row = 0
    for c in range(n):
        piv = next((i for i in range(row, m) if r[i][c]), None)
        if piv is None:
            continue
        r[row], r[piv] = r[piv], r[row]
        for i in range(m):
            if i != row and r[i][c]:
                r[i] = [x ^ y for x, y in zip(r[i], r[row])]
        pivots.append(c)
        row += 1
        if row == m:
            break
    return r, pivots


def nullspace_mod2(a: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Basis of ``{v in F_2^n : a @ v == 0}``."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return identity(n)
    r, pivots = _rref_mod2(a)
    basis = []
    for f in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = r[i][f]
        basis.append(v)
    return basis
