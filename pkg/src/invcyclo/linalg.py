"""Exact rank, determinant and nullspace for small dense matrices.

Rank and determinant use fraction-free (Bareiss) elimination on integer
matrices; rational input is scaled row by row to integers first.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm


def _integer_rows(rows):
    """Scale each row to integers; returns (rows, product of the scale factors)."""
    out, scale = [], 1
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
        scale *= den
    return out, scale


def _bareiss(rows):
    """Fraction-free forward elimination.

    Returns (rank, sign, last pivot).  For a square nonsingular matrix the last
    pivot is its determinant up to ``sign`` (row swaps).
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    sign = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if a[i][col]), None)
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
            sign = -sign
        p = a[rank][col]
        prow = a[rank]
        for i in range(rank + 1, nrows):
            row = a[i]
            f = row[col]
            # exact by Sylvester's identity
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank, sign, prev


def rank(rows) -> int:
    rows, _ = _integer_rows(rows)
    return _bareiss(rows)[0]


def determinant(rows):
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    irows, scale = _integer_rows(rows)
    r, sign, last = _bareiss(irows)
    if r < n:
        return 0
    det = Fraction(sign * last, scale)
    return det.numerator if det.denominator == 1 else det


def nullspace(rows, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {y : A y = 0} via reduced row echelon form over the rationals."""
    a = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(a, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def matvec(rows, v):
    return [sum(x * y for x, y in zip(row, v)) for row in rows]
