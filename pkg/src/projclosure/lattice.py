"""Integer kernels of integer matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _col_hermite(M: Sequence[Sequence[int]], n: int):
    """Column-reduce M by unimodular U; returns (MU, U, rank)."""
    A = [list(row) for row in M]
    d = len(A)
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(dst, src, q):
        # column dst -= q * column src
        for row in A:
            row[dst] -= q * row[src]
        for row in U:
            row[dst] -= q * row[src]

    def swap(a, b):
        for row in A:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    p = 0
    for r in range(d):
        if p >= n:
            break
        while True:
            nz = [c for c in range(p, n) if A[r][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda c: (abs(A[r][c]), c))
            if piv != p:
                swap(piv, p)
            done = True
            for c in range(p + 1, n):
                if A[r][c]:
                    colop(c, p, A[r][c] // A[r][p])
                    if A[r][c]:
                        done = False
            if done:
                break
        if any(A[r][c] for c in range(p, n)):
            p += 1
    return A, U, p


def _lll(basis: list, delta: Fraction = Fraction(3, 4)) -> list:
    """Exact LLL reduction of linearly independent integer vectors."""
    b = [list(v) for v in basis]
    k = len(b)
    if k <= 1:
        return b

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    def gso():
        bstar: list = []
        mu = [[Fraction(0)] * k for _ in range(k)]
        norms: list = []
        for i in range(k):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = dot(b[i], bstar[j]) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(dot(v, v))
        return mu, norms

    mu, norms = gso()
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
                mu, norms = gso()
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            mu, norms = gso()
            i = max(i - 1, 1)
    return b


def lattice_kernel(M: Sequence[Sequence[int]], n: int | None = None, reduce: bool = True) -> list:
    """A Z-basis of {v in Z^n : M v = 0}.

    ``n`` is only needed when M has no rows.  With ``reduce`` the basis is
    LLL-reduced, which keeps the associated binomials of low degree.
    """
    if n is None:
        if not M:
            raise ValueError("column count needed for an empty matrix")
        n = len(M[0])
    for row in M:
        if len(row) != n:
            raise ValueError("ragged matrix")
    _, U, rank = _col_hermite(M, n)
    basis = [[U[i][c] for i in range(n)] for c in range(rank, n)]
    if reduce:
        basis = _lll(basis)
    out = []
    for v in basis:
        first = next(x for x in v if x)
        out.append(tuple(-x for x in v) if first < 0 else tuple(v))
    return out


def matrix_rank(M: Sequence[Sequence[int]]) -> int:
    """Exact rank over Q (fraction-free elimination)."""
    A = [list(row) for row in M if any(row)]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(rank + 1, rows):
            for cc in range(c + 1, cols):
                A[r][cc] = (A[rank][c] * A[r][cc] - A[r][c] * A[rank][cc]) // prev
            A[r][c] = 0
        prev = A[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank


def solve_rational(cols: Sequence[Sequence[int]], target: Sequence[int]):
    """Solve sum_j x_j cols[j] = target over Q for independent columns; None if inconsistent."""
    k = len(cols)
    d = len(target)
    A = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(d)]
    r = 0
    where = [-1] * k
    for c in range(k):
        piv = next((i for i in range(r, d) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(d):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        where[c] = r
        r += 1
    for i in range(r, d):
        if A[i][k] != 0:
            return None
    return [A[where[c]][k] if where[c] >= 0 else Fraction(0) for c in range(k)]
