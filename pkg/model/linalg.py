# linalg.py: exact elimination over Q and over cyclotomic fields
"""
Small exact linear-algebra helpers.

Entries are Fractions or Cyclotomic values; nothing here ever produces a float.
"""

from fractions import Fraction
from typing import List, Optional, Sequence


def bareiss_determinant(matrix: Sequence[Sequence], zero, one):
    """
    Determinant by Bareiss fraction-free elimination.

    Args:
        matrix: Square matrix (rows of field elements)
        zero: Additive identity of the field
        one: Multiplicative identity of the field

    Returns:
        The exact determinant
    """
    n = len(matrix)
    if n == 0:
        return one
    m = [list(row) for row in matrix]
    sign = 1
    previous = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for i in range(k + 1, n):
                if m[i][k] != zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous
        previous = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def rational_determinant(matrix: Sequence[Sequence]) -> Fraction:
    return bareiss_determinant([[Fraction(v) for v in row] for row in matrix], Fraction(0), Fraction(1))


def _row_reduce(augmented: List[List[Fraction]], columns: int) -> List[int]:
    """Reduce in place to reduced row echelon form on the first `columns` columns; return pivot columns."""
    pivots = []
    row = 0
    for col in range(columns):
        pivot = next((r for r in range(row, len(augmented)) if augmented[r][col]), None)
        if pivot is None:
            continue
        augmented[row], augmented[pivot] = augmented[pivot], augmented[row]
        lead = augmented[row][col]
        augmented[row] = [v / lead for v in augmented[row]]
        for r in range(len(augmented)):
            if r != row and augmented[r][col]:
                factor = augmented[r][col]
                augmented[r] = [a - factor * b for a, b in zip(augmented[r], augmented[row])]
        pivots.append(col)
        row += 1
        if row == len(augmented):
            break
    return pivots


def solve_linear_system(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """
    Solve rows * x = rhs exactly over Q.

    Returns the unique solution, or None when the system is inconsistent or
    underdetermined.
    """
    columns = len(rows[0]) if rows else 0
    augmented = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = _row_reduce(augmented, columns)
    if len(pivots) < columns:
        return None
    for r in range(len(pivots), len(augmented)):
        if augmented[r][columns]:
            return None
    return [augmented[i][columns] for i in range(columns)]
