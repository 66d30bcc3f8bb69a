"""Exact integer and rational linear algebra on small lattices.

Vectors are plain tuples of ``int`` (lattice points) or ``Fraction``
(covectors); matrices are tuples of row tuples. Nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import DimensionMismatch, SingularSystem, ZeroVector

Vector = tuple
Matrix = tuple  # tuple of row tuples


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    rows = tuple(tuple(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionMismatch("ragged matrix")
    return rows


def shape(A: Matrix) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if shape(A)[1] != shape(B)[0]:
        raise DimensionMismatch(f"cannot multiply {shape(A)} by {shape(B)}")
    cols = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def matvec(A: Matrix, v: Sequence) -> Vector:
    if A and len(A[0]) != len(v):
        raise DimensionMismatch(f"matrix with {len(A[0])} columns applied to length {len(v)}")
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries."""
    v = tuple(int(x) for x in v)
    g = gcd(*v)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive generator")
    return tuple(x // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    return gcd(*(int(x) for x in v)) == 1


def _row_reduce(A: Matrix):
    """Reduced row echelon form over Q. Returns (rows, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    nrows, ncols = shape(A)
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return M, pivots


def rank(A: Matrix) -> int:
    if not A:
        return 0
    return len(_row_reduce(A)[1])


def nullspace(A: Matrix) -> list[Vector]:
    """Basis of the right kernel of ``A`` over Q."""
    ncols = shape(A)[1]
    if not A:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    M, pivots = _row_reduce(A)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(M, pivots):
            v[pc] = -row[free]
        basis.append(tuple(v))
    return basis


def determinant(A: Matrix) -> Fraction:
    n, m = shape(A)
    if n != m:
        raise DimensionMismatch("determinant of a non-square matrix")
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return det


def _solve_columns(A: Matrix, columns: Sequence[Sequence]) -> list[Vector]:
    """Solve ``A x = c`` for each column ``c`` (integer ``A``, rational ``c``).

    Fraction-free Bareiss elimination keeps the forward pass in integers.
    """
    n, m = shape(A)
    if n != m:
        raise SingularSystem(f"expected a square system, got {n}x{m}")
    # clear denominators row by row so the elimination stays integral
    row_scale = [lcm(*(Fraction(a).denominator for a in row)) for row in A]
    A = [[int(Fraction(a) * d) for a in row] for row, d in zip(A, row_scale)]
    columns = [[Fraction(x) * d for x, d in zip(c, row_scale)] if len(c) == n else c for c in columns]
    scales = []
    int_cols = []
    for c in columns:
        if len(c) != n:
            raise DimensionMismatch(f"right-hand side has length {len(c)}, expected {n}")
        c = [Fraction(x) for x in c]
        L = lcm(*(x.denominator for x in c)) if c else 1
        scales.append(L)
        int_cols.append([int(x * L) for x in c])
    M = [[int(a) for a in A[i]] + [col[i] for col in int_cols] for i in range(n)]
    width = n + len(int_cols)
    prev = 1
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k]), None)
        if p is None:
            raise SingularSystem("matrix is singular over Q")
        M[k], M[p] = M[p], M[k]
        pivot = M[k][k]
        for i in range(k + 1, n):
            lead = M[i][k]
            row = M[i]
            for j in range(k + 1, width):
                row[j] = (row[j] * pivot - lead * M[k][j]) // prev
            row[k] = 0
        prev = pivot
    out = []
    for c, L in enumerate(scales):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = Fraction(M[i][n + c]) - sum((M[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
            x[i] = acc / M[i][i]
        out.append(tuple(v / L for v in x))
    return out


def solve_rational(A: Matrix, b: Sequence) -> Vector:
    """Unique solution ``x`` of ``A x = b`` over Q.

    Raises SingularSystem when ``A`` is not square or not invertible.
    """
    return _solve_columns(A, [b])[0]


def inverse(A: Matrix) -> Matrix:
    """Inverse over Q (SingularSystem if not invertible)."""
    n = len(A)
    cols = _solve_columns(A, identity(n))
    return transpose(cols)


def smith_normal_form(A: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, S, V)`` with ``S = U A V`` in Smith normal form.

    ``U`` and ``V`` are unimodular. The pivot at each stage is the entry of
    smallest nonzero absolute value in the remaining block, ties broken by
    lowest row index then lowest column index, so the output is
    deterministic.
    """
    A = as_matrix(A)
    m, n = shape(A)
    S = [[int(x) for x in row] for row in A]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        S[dst] = [a + k * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for row in S:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            candidates = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
            if not candidates:
                break
            _, pi, pj = min(candidates)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = S[i][t] // p
                if q:
                    add_row(i, t, -q)
                dirty |= S[i][t] != 0
            for j in range(t + 1, n):
                q = S[t][j] // p
                if q:
                    add_col(j, t, -q)
                dirty |= S[t][j] != 0
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return as_matrix(U), as_matrix(S), as_matrix(V)


def elementary_divisors(A: Matrix) -> tuple[int, ...]:
    _, S, _ = smith_normal_form(A)
    return tuple(S[i][i] for i in range(min(shape(S))) if S[i][i])


def is_unimodular_basis(vectors: Sequence[Sequence[int]]) -> bool:
    """True iff the vectors are independent and extend to a Z-basis."""
    rows = as_matrix(vectors)
    divs = elementary_divisors(rows)
    return len(divs) == len(rows) and all(d == 1 for d in divs)
