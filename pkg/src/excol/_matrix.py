"""Exact arithmetic on small square matrices.

Matrices are immutable tuples of row tuples.  Integer matrices stay
integer; the few routines that need division go through
``fractions.Fraction`` and convert back once integrality is certain.
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = tuple[tuple[int, ...], ...]


def freeze(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Copy a matrix-like object into nested tuples."""
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def mat_add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a: IntMatrix) -> IntMatrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_pow(a: IntMatrix, k: int) -> IntMatrix:
    """Nonnegative integer power by repeated squaring."""
    if k < 0:
        raise ValueError("use inverse_unimodular first for negative powers")
    acc = identity(len(a))
    base = a
    while k:
        if k & 1:
            acc = mat_mul(acc, base)
        base = mat_mul(base, base)
        k >>= 1
    return acc


def is_zero(a: IntMatrix) -> bool:
    return all(x == 0 for row in a for x in row)


def is_upper_unitriangular(a: IntMatrix) -> bool:
    n = len(a)
    if any(len(row) != n for row in a):
        return False
    return all(
        (a[i][j] == (1 if i == j else 0)) for i in range(n) for j in range(i + 1)
    )


def unitriangular_inverse(a: IntMatrix) -> IntMatrix:
    """Exact inverse of an upper unitriangular integer matrix.

    The inverse is again integer upper unitriangular, computed by back
    substitution column by column.
    """
    n = len(a)
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum(a[i][k] * inv[k][j] for k in range(i + 1, j + 1))
    return freeze(inv)


def determinant(a: IntMatrix) -> int:
    """Exact determinant via fraction-valued Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    assert det.denominator == 1
    return int(det)


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        piv = m[col][col]
        m[col] = [x / piv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    inv = [row[n:] for row in m]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return freeze([[int(x) for x in row] for row in inv])
