"""Exact linear algebra over the rationals

Matrices are numpy arrays of `Fraction` objects (dtype=object), so row operations stay
vectorized while every entry stays exact.
"""

from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

from fractions import Fraction

import numpy as np


class ExactSolution(NamedTuple):
    """Outcome of `solve_exact`

    `values` is None when the system is inconsistent. When `rank` is smaller than the number of
    unknowns the free unknowns are set to zero.
    """

    rank: int
    unknowns: int
    values: Optional[List[Fraction]]

    @property
    def consistent(self) -> bool:
        return self.values is not None

    @property
    def unique(self) -> bool:
        return self.values is not None and self.rank == self.unknowns


def as_fraction_array(rows: Sequence[Sequence[Any]]) -> np.ndarray:
    """Copy a nested sequence into an object array of Fractions"""
    arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            arr[i, j] = Fraction(value)
    return arr


def row_reduce(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and the pivot columns"""

    m = matrix.copy()
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = [i for i in range(r, rows) if m[i, c] != 0]
        if not nonzero:
            continue
        p = nonzero[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = m[r] / m[r, c]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1

    return m, pivots


def solve_exact(matrix: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> ExactSolution:
    """Solve matrix @ x = rhs exactly

    Parameters
    ----------
    matrix : `sequence`
        Rows of integer or rational coefficients

    rhs : `sequence`
        Right-hand side, one entry per row

    Returns
    -------
    solution : `ExactSolution`

    Examples
    --------
    >>> s = solve_exact([[1, 1], [1, -1]], [3, 1])
    >>> s.unique, s.values
    (True, [Fraction(2, 1), Fraction(1, 1)])
    >>> solve_exact([[1, 1], [2, 2]], [1, 3]).consistent
    False
    """

    a = as_fraction_array(matrix)
    unknowns = a.shape[1]
    b = np.array([Fraction(v) for v in rhs], dtype=object).reshape(-1, 1)
    reduced, pivots = row_reduce(np.hstack([a, b]))

    if unknowns in pivots:
        return ExactSolution(rank=len(pivots) - 1, unknowns=unknowns, values=None)

    values = [Fraction(0)] * unknowns
    for r, c in enumerate(pivots):
        values[c] = reduced[r, -1]

    return ExactSolution(rank=len(pivots), unknowns=unknowns, values=values)


def inverse_exact(matrix: Sequence[Sequence[Any]]) -> Optional[np.ndarray]:
    """Inverse of a square matrix, or None if it is singular"""

    a = as_fraction_array(matrix)
    n = a.shape[0]
    identity = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            identity[i, j] = Fraction(int(i == j))
    reduced, pivots = row_reduce(np.hstack([a, identity]))
    if pivots[:n] != list(range(n)):
        return None

    return reduced[:, n:]
