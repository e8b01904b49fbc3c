"""Exact dense linear algebra over a field (QQ, or any type with /).

Small systems only; plain fraction-free-ish Gaussian elimination with
partial structure checks.  Used by the polynomial fitting code.
"""

from __future__ import annotations

from .ratio import QQ, ZERO


def rref_solve(rows, rhs):
    """Solve rows . x = rhs exactly.

    Returns (status, solution, pivots) where status is one of
    "unique", "underdetermined", "inconsistent"; for "underdetermined" the
    returned solution sets all free variables to zero.
    """
    m = len(rows)
    if m == 0:
        return "underdetermined", [], []
    n = len(rows[0])
    A = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, m):
            if A[r][col]:
                sel = r
                break
        if sel is None:
            continue
        A[row], A[sel] = A[sel], A[row]
        inv = 1 / A[row][col]
        A[row] = [x * inv for x in A[row]]
        for r in range(m):
            if r != row and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if A[r][n]:
            return "inconsistent", None, pivots
    sol = [ZERO] * n
    for r, col in enumerate(pivots):
        sol[col] = A[r][n]
    status = "unique" if len(pivots) == n else "underdetermined"
    return status, sol, pivots


def invert_matrix(M):
    """Inverse of a square matrix over a field; None when singular."""
    n = len(M)
    A = [list(row) + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        sel = None
        for r in range(col, n):
            if A[r][col]:
                sel = r
                break
        if sel is None:
            return None
        A[col], A[sel] = A[sel], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def mat_vec(M, v):
    return [sum((x * y for x, y in zip(row, v)), ZERO) for row in M]


def lagrange_coeffs(points, values):
    """Coefficients (low to high) of the interpolating polynomial."""
    n = len(points)
    coeffs = [ZERO] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        # basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        basis = [QQ(1)]
        denom = QQ(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = [ZERO] + basis
            for t in range(len(basis) - 1):
                basis[t] = basis[t] - xj * basis[t + 1]
            denom *= xi - xj
        scale = yi / denom
        for t, c in enumerate(basis):
            coeffs[t] += c * scale
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs
