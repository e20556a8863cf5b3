"""Dense linear algebra over GF(q) on int64 numpy arrays of field codes."""

from __future__ import annotations

import numpy as np

from .gf import GF


def as_matrix(A, ncols: int | None = None) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, ncols or 0), dtype=np.int64)
    return A


def rref(F: GF, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    M = as_matrix(A).copy()
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = F.vmul(M[r], F.inv(int(M[r, c])))
        col = M[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if others.size:
            # M[o] -= col[o] * M[r]
            scaled = F.vmul(col[others, None], M[r][None, :])
            M[others] = F.vsub(M[others], scaled)
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F: GF, A) -> int:
    A = as_matrix(A)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: GF, A, ncols: int | None = None) -> np.ndarray:
    """Basis N (rows) of {x : A x^T = 0}."""
    A = as_matrix(A, ncols)
    n = A.shape[1] if A.size else (ncols or 0)
    if A.size == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, A)
    free = [c for c in range(n) if c not in set(piv)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for i, fc in enumerate(free):
        N[i, fc] = 1
        for r, pc in enumerate(piv):
            N[i, pc] = F.neg(int(R[r, fc]))
    return N


def matmul(F: GF, A, B) -> np.ndarray:
    A = as_matrix(A)
    B = as_matrix(B)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, k, None], B[k][None, :]))
    return out


def row_space_contains(F: GF, A, B) -> bool:
    """True iff every row of B lies in the row space of A."""
    A, B = as_matrix(A), as_matrix(B)
    if B.size == 0:
        return True
    if A.size == 0:
        return not np.any(B)
    return rank(F, np.vstack([A, B])) == rank(F, A)


def same_row_space(F: GF, A, B) -> bool:
    return row_space_contains(F, A, B) and row_space_contains(F, B, A)


def solve_left(F: GF, A, v) -> np.ndarray | None:
    """Coefficients c with c A = v, or None if v is outside the row space."""
    A = as_matrix(A)
    v = np.asarray(v, dtype=np.int64)
    # c A = v  <=>  A^T c^T = v^T; augment and eliminate
    aug = np.hstack([A.T, v.reshape(-1, 1)])
    R, piv = rref(F, aug)
    k = A.shape[0]
    if piv and piv[-1] == k:
        return None
    c = np.zeros(k, dtype=np.int64)
    for r, pc in enumerate(piv):
        c[pc] = R[r, k]
    return c
