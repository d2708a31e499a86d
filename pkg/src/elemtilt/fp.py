"""Dense linear algebra over the prime field F_p.

Matrices are numpy int64 arrays with entries reduced to [0, p). Elimination
always takes the first row with a nonzero entry in the current column, so the
results are deterministic.
"""
from __future__ import annotations

import numpy as np


def inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def as_fp(A, p: int, ncols: int | None = None) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, ncols or 0), dtype=np.int64)
    return A % p


def rref(A, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p and the list of pivot columns."""
    R = np.array(A, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("rref expects a 2d array")
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(R[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = (R[row] * inv_mod(R[row, col], p)) % p
        factors = R[:, col].copy()
        factors[row] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = (R[hit] - np.outer(factors[hit], R[row])) % p
        pivots.append(col)
        row += 1
    return R, pivots


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def row_basis(A, p: int) -> np.ndarray:
    """Nonzero rows of the rref: a canonical basis of the row space."""
    A = np.asarray(A, dtype=np.int64)
    if A.shape[0] == 0:
        return A.reshape(0, A.shape[1] if A.ndim == 2 else 0)
    R, piv = rref(A, p)
    return R[: len(piv)]


def nullspace(A, p: int) -> np.ndarray:
    """Rows spanning {x : A @ x = 0 mod p}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, pc in enumerate(piv):
            basis[row, pc] = (-R[i, f]) % p
    return basis


def left_nullspace(A, p: int) -> np.ndarray:
    """Rows spanning {y : y @ A = 0 mod p}."""
    return nullspace(np.asarray(A, dtype=np.int64).T, p)


def inverse(A, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64) % p
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    R, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular mod p")
    return R[:, n:]


def extend_basis(B: np.ndarray, Z: np.ndarray, p: int) -> np.ndarray:
    """Rows of Z that extend the row space of B to that of B + Z.

    Rows of Z are scanned in order, a row is kept when it raises the rank, so
    the choice is deterministic.
    """
    ncols = Z.shape[1]
    kept = []
    current = row_basis(B, p) if B.shape[0] else np.zeros((0, ncols), dtype=np.int64)
    r0 = current.shape[0]
    for z in Z:
        trial = np.vstack([current, z[None, :]])
        if rank(trial, p) > r0:
            current = row_basis(trial, p)
            r0 += 1
            kept.append(z)
    if not kept:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(kept, dtype=np.int64) % p


class Coordinates:
    """Express vectors in the row space of a full-rank basis S as coefficient rows.

    A set of columns where S is invertible is found once; afterwards
    coords(v) = v[:, cols] @ inv(S[:, cols]).
    """

    def __init__(self, S: np.ndarray, p: int):
        self.p = p
        self.S = np.asarray(S, dtype=np.int64) % p
        n = self.S.shape[0]
        if n == 0:
            self.cols: list[int] = []
            self.inv = np.zeros((0, 0), dtype=np.int64)
            return
        _, piv = rref(self.S, p)
        if len(piv) != n:
            raise ValueError("basis rows are dependent")
        self.cols = piv
        self.inv = inverse(self.S[:, piv], p)

    def __call__(self, V: np.ndarray) -> np.ndarray:
        V = np.asarray(V, dtype=np.int64)
        single = V.ndim == 1
        V = V.reshape(-1, self.S.shape[1]) if V.size or single else V
        if not self.cols:
            out = np.zeros((V.shape[0], 0), dtype=np.int64)
        else:
            out = (V[:, self.cols] % self.p) @ self.inv % self.p
        return out[0] if single else out

    def contains(self, V: np.ndarray) -> np.ndarray:
        V = np.asarray(V, dtype=np.int64).reshape(-1, self.S.shape[1]) % self.p
        back = self(V) @ self.S % self.p if self.cols else np.zeros_like(V)
        return np.all(back == V, axis=1)
