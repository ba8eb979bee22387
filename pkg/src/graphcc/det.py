"""Exact integer and prime-field determinants by elimination."""
from __future__ import annotations

import math
from typing import Sequence

from .graph import DiGraph

MAX_DIMENSION = 64
LOVASZ_PRIME = 2**31 - 1


class DeterminantOverflow(ArithmeticError):
    pass


def hadamard_bound(matrix: Sequence[Sequence[int]]) -> int:
    """Upper bound on |det| of every square submatrix, as an integer."""
    bound = 1
    for row in matrix:
        norm = math.isqrt(sum(a * a for a in row))
        if norm * norm < sum(a * a for a in row):
            norm += 1
        bound *= max(norm, 1)
    return bound


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination over the integers.

    Every intermediate entry is a minor of the input, so it is checked
    against the Hadamard bound; exceeding it means the arithmetic is broken.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n > MAX_DIMENSION:
        raise ValueError(f"dimension {n} exceeds {MAX_DIMENSION}")
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in matrix]
    limit = hadamard_bound(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                val = (pivot * row_i[j] - aik * row_k[j]) // prev
                if abs(val) > limit:
                    raise DeterminantOverflow(f"intermediate {val} exceeds Hadamard bound {limit}")
                row_i[j] = val
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_integer(d: DiGraph) -> int:
    """Exact determinant of the 0/1 adjacency matrix (``M[u][v] = 1`` iff arc u->v)."""
    return bareiss_determinant(d.adjacency_matrix())


def det_mod_p(matrix: Sequence[Sequence[int]], p: int = LOVASZ_PRIME) -> int:
    """Determinant over GF(p), returned in ``0..p-1``."""
    n = len(matrix)
    a = [[x % p for x in row] for row in matrix]
    det = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        row_k = a[k]
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                row_i = a[i]
                for j in range(k, n):
                    row_i[j] = (row_i[j] - f * row_k[j]) % p
    return det % p
