"""Small exact linear algebra over Gaussian rationals.

Used for rank / independence checks on families of polynomials (viewed as
coefficient vectors over their monomials) and for exact determinants.
"""

from __future__ import annotations

from .gaussian import GR_ZERO, GaussianRational
from .poly import Polynomial


def polys_to_rows(polys):
    """Coefficient matrix of a polynomial family, one row per polynomial.

    Columns are indexed by the union of monomials, in sorted order for
    reproducibility.
    """
    monomials = sorted({m for p in polys for m in p.terms})
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for p in polys:
        row = [GR_ZERO] * len(monomials)
        for m, c in p.terms.items():
            row[index[m]] = c
        rows.append(row)
    return rows


def independent_subset(polys):
    """Indices of a maximal linearly independent subset, greedy in input order."""
    rows = polys_to_rows(polys)
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []       # reduced pivot rows
    pivots = []      # pivot column per basis row
    chosen = []
    for i, row in enumerate(rows):
        row = list(row)
        for brow, pc in zip(basis, pivots):
            if row[pc]:
                f = row[pc]
                for j in range(ncols):
                    if brow[j]:
                        row[j] = row[j] - f * brow[j]
        pivot = next((j for j in range(ncols) if row[j]), None)
        if pivot is None:
            continue
        inv = row[pivot]
        row = [c / inv for c in row]
        basis.append(row)
        pivots.append(pivot)
        chosen.append(i)
    return chosen


def rank(polys) -> int:
    return len(independent_subset(polys))


def det(matrix) -> GaussianRational:
    """Exact determinant by fraction-full Gaussian elimination with pivoting."""
    n = len(matrix)
    a = [list(row) for row in matrix]
    sign = 1
    result = GaussianRational(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col]), None)
        if pivot_row is None:
            return GR_ZERO
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            sign = -sign
        p = a[col][col]
        result = result * p
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / p
                for c in range(col, n):
                    if a[col][c]:
                        a[r][c] = a[r][c] - f * a[col][c]
    return result * sign
