"""Exact integer and rational linear algebra on small dense matrices.

Everything here works over Python ints and fractions; no floating point.
Vectors are tuples, matrices are sequences of row tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def vec_dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def vec_content(v) -> int:
    g = 0
    for c in v:
        g = gcd(g, abs(c))
    return g


def primitive(v):
    """Divide out the content, keeping direction; zero stays zero."""
    g = vec_content(v)
    if g in (0, 1):
        return tuple(v)
    return tuple(c // g for c in v)


def rank_int(rows) -> int:
    """Rank of an integer matrix by exact elimination."""
    mat = [[Fraction(c) for c in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [c * inv for c in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def det_int(matrix) -> int:
    """Determinant of a square integer matrix, fraction-free (Bareiss)."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def invert_fraction(matrix):
    """Inverse of a nonsingular square integer matrix, as Fraction rows."""
    n = len(matrix)
    aug = [
        [Fraction(c) for c in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def hnf_rows(rows):
    """Canonical row form under unimodular row operations.

    Pivots are positive, entries above a pivot are reduced into [0, pivot),
    zero rows are dropped.  The result is a deterministic basis of the row
    lattice.
    """
    mat = [list(r) for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return ()
    ncols = len(mat[0])
    top = 0
    for col in range(ncols):
        live = [r for r in range(top, len(mat)) if mat[r][col] != 0]
        if not live:
            continue
        # gcd elimination below the pivot row
        while len(live) > 1:
            live.sort(key=lambda r: abs(mat[r][col]))
            base = live[0]
            for r in live[1:]:
                q = mat[r][col] // mat[base][col]
                mat[r] = [a - q * b for a, b in zip(mat[r], mat[base])]
            live = [r for r in live if mat[r][col] != 0]
        pivot = live[0]
        mat[top], mat[pivot] = mat[pivot], mat[top]
        if mat[top][col] < 0:
            mat[top] = [-c for c in mat[top]]
        p = mat[top][col]
        for r in range(top):
            q = mat[r][col] // p
            if q:
                mat[r] = [a - q * b for a, b in zip(mat[r], mat[top])]
        top += 1
        if top == len(mat):
            break
    return tuple(tuple(r) for r in mat[:top] if any(r))


def kernel_basis_int(rows, ncols):
    """Canonical basis of the integer kernel {x : row . x == 0 for all rows}."""
    mat = [list(r) for r in rows]
    trans = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def combine_cols(dst, src, q):
        for r in mat:
            r[dst] -= q * r[src]
        for r in trans:
            r[dst] -= q * r[src]

    def swap_cols(a, b):
        for r in mat:
            r[a], r[b] = r[b], r[a]
        for r in trans:
            r[a], r[b] = r[b], r[a]

    lead = 0
    for r in range(len(mat)):
        live = [j for j in range(lead, ncols) if mat[r][j] != 0]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda j: abs(mat[r][j]))
            base = live[0]
            for j in live[1:]:
                combine_cols(j, base, mat[r][j] // mat[r][base])
            live = [j for j in live if mat[r][j] != 0]
        if live[0] != lead:
            swap_cols(live[0], lead)
        lead += 1
        if lead == ncols:
            break
    kernel = []
    for j in range(lead, ncols):
        if all(row[j] == 0 for row in mat):
            kernel.append(tuple(tr[j] for tr in trans))
    return hnf_rows(kernel)


def lattice_span_basis(vectors, dim):
    """Basis rows of the saturation of the span: span_Q(vectors) intersect Z^dim."""
    if not vectors:
        return ()
    perp = kernel_basis_int(list(vectors), dim)
    if not perp:
        return tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
    return kernel_basis_int(list(perp), dim)


def snf_with_uinv(matrix):
    """Diagonalize by unimodular row and column operations.

    Returns ``(diag, uinv)`` where U * A * V = diag(d) with d positive and
    ``uinv`` = U^{-1}.  Diagonal divisibility is not enforced; residue
    enumeration only needs some unimodular diagonalization.
    """
    a = [list(r) for r in matrix]
    n = len(a)
    m = len(a[0]) if n else 0
    uinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def row_negate(i):
        a[i] = [-c for c in a[i]]
        for r in uinv:
            r[i] = -r[i]

    def row_addmul(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        for r in uinv:
            r[src] -= q * r[dst]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    def col_addmul(dst, src, q):
        for row in a:
            row[dst] += q * row[src]

    t = 0
    while t < min(n, m):
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            row_swap(best[0], t)
        if best[1] != t:
            col_swap(best[1], t)
        if a[t][t] < 0:
            row_negate(t)
        while True:
            dirty = False
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_addmul(i, t, -q)
                    if a[i][t] != 0:
                        row_swap(i, t)
                        if a[t][t] < 0:
                            row_negate(t)
                        dirty = True
            for j in range(t + 1, m):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_addmul(j, t, -q)
                    if a[t][j] != 0:
                        col_swap(j, t)
                        dirty = True
            if not dirty:
                break
        t += 1
    diag = [a[k][k] for k in range(t)]
    return diag, uinv
