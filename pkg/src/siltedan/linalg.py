"""Exact linear algebra over the rationals.

Only what the Hom computations need: row reduction, rank, null space and
span membership.  Matrices are lists of rows of Fractions.
"""
from __future__ import annotations

from fractions import Fraction


def _rref(rows, ncols):
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None) -> int:
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(_rref(rows, ncols)[1])


def nullspace(rows, ncols) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def in_span(vectors, v) -> bool:
    if all(x == 0 for x in v):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [v], len(v)) == rank(list(vectors), len(v))


def matmul(a, b, inner: int | None = None):
    """Product of an (r x k) and a (k x c) matrix given as nested lists.

    ``inner`` is only needed when k = 0, where the shapes cannot be read off.
    """
    if not a:
        return []
    k = len(a[0]) if inner is None else inner
    c = len(b[0]) if b else 0
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(c)]
            for i in range(len(a))]
