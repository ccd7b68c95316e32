"""Small dense exact linear algebra: rank and kernels.

Two paths: integer matrices are reduced fraction-free (row operations
followed by division by the row content), anything else is reduced over
the field its entries live in (``Fraction`` or ``QSqrt5``).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence]


def _is_int_matrix(rows: Matrix) -> bool:
    return all(type(x) is int for row in rows for x in row)


def _content(row: list[int]) -> int:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def _int_echelon(rows: Matrix, reduce_above: bool = False):
    """Integer row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        p = prow[col]
        targets = range(nrows) if reduce_above else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            row = m[i]
            a = row[col]
            if not a:
                continue
            new = [p * x - a * y for x, y in zip(row, prow)]
            g = _content(new)
            if g > 1:
                new = [x // g for x in new]
            m[i] = new
        pivots.append(col)
        r += 1
    return m, pivots


def _field_rref(rows: Matrix):
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        prow = m[r]
        for i in range(nrows):
            if i != r and m[i][col]:
                a = m[i][col]
                m[i] = [x - a * y for x, y in zip(m[i], prow)]
        pivots.append(col)
        r += 1
    return m, pivots


def rank(rows: Matrix) -> int:
    """Exact rank of a matrix given as a list of rows.

    >>> rank([[1, 2], [2, 4]])
    1
    >>> rank([[Fraction(1, 2), 0], [0, 3]])
    2
    """
    if not rows or not rows[0]:
        return 0
    if _is_int_matrix(rows):
        return len(_int_echelon(rows)[1])
    return len(_field_rref(rows)[1])


def kernel(rows: Matrix) -> list[list]:
    """Basis of the right kernel ``{v : M v = 0}``.

    Integer input yields primitive integer vectors; other input yields
    vectors over the entries' field.

    >>> kernel([[1, 1, 0], [0, 0, 1]])
    [[-1, 1, 0]]
    """
    ncols = len(rows[0]) if rows else 0
    if _is_int_matrix(rows):
        m, pivots = _int_echelon(rows, reduce_above=True)
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for f in free:
            lcm = 1
            for i, c in enumerate(pivots):
                p = abs(m[i][c])
                lcm = lcm * p // gcd(lcm, p)
            v = [0] * ncols
            v[f] = lcm
            for i, c in enumerate(pivots):
                v[c] = -m[i][f] * lcm // m[i][c]
            g = _content(v)
            basis.append([x // g for x in v])
        return basis
    m, pivots = _field_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    one = _one_like(rows)
    basis = []
    for f in free:
        v = [one * 0 for _ in range(ncols)]
        v[f] = one
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return basis


def _one_like(rows: Matrix):
    for row in rows:
        for x in row:
            if not isinstance(x, int):
                return x * 0 + 1
    return Fraction(1)


def canonical_span(vectors: Sequence[Sequence]) -> tuple:
    """Hashable canonical form (reduced row echelon) of the span of vectors."""
    if not vectors:
        return ()
    rows = [[Fraction(x) if isinstance(x, int) else x for x in v] for v in vectors]
    m, pivots = _field_rref(rows)
    return tuple(tuple(m[i]) for i in range(len(pivots)))


def mat_sub_identity(cols: Sequence[Sequence]) -> list[list]:
    """Rows of ``M - I`` for the matrix whose columns are ``cols``."""
    n = len(cols)
    return [[cols[j][i] - (1 if i == j else 0) for j in range(n)] for i in range(n)]


def solve(rows: Matrix, rhs: Sequence) -> list:
    """Solve the square nonsingular system ``M x = rhs`` over a field."""
    n = len(rows)
    aug = [[Fraction(x) if isinstance(x, int) else x for x in row] + [
        Fraction(b) if isinstance(b, int) else b] for row, b in zip(rows, rhs)]
    m, pivots = _field_rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [m[i][n] for i in range(n)]
