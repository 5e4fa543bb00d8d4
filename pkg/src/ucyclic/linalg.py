"""Exact dense linear algebra over F_p on integer numpy matrices."""

from __future__ import annotations

import itertools

import numpy as np


class BudgetError(ValueError):
    """An exhaustive enumeration would exceed the caller's codeword budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration budget exceeded: {required} codewords required, budget is {budget}"
        )
        self.required = required
        self.budget = budget


def as_matrix(rows, ncols: int, p: int) -> np.ndarray:
    """Stack row vectors into an (m, ncols) int64 matrix reduced mod p."""
    if len(rows) == 0:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(len(rows), ncols) % p


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    Returns (R, pivots): zero rows dropped, pivot entries scaled to 1, pivot
    columns cleared above and below.  R is the canonical form of the row space.
    """
    M = np.array(mat, dtype=np.int64) % p
    if M.ndim == 1:
        M = M.reshape(1, -1)
    nrows, ncols = M.shape
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = (M[r] * pow(int(M[r, c]), -1, p)) % p
        col = M[:, c].copy()
        col[r] = 0
        M = (M - np.outer(col, M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def reduce_vector(R: np.ndarray, pivots, v, p: int) -> np.ndarray:
    """Residual of v after elimination against RREF rows; zero iff v lies in the row space."""
    v = np.asarray(v, dtype=np.int64) % p
    if len(pivots) == 0:
        return v
    return (v - v[list(pivots)] @ R) % p


def in_rowspace(R: np.ndarray, pivots, v, p: int) -> bool:
    return not reduce_vector(R, pivots, v, p).any()


def nullspace(mat, p: int) -> np.ndarray:
    """Basis, as rows, of {x : mat @ x = 0} over F_p.

    A matrix with no rows constrains nothing, so the basis is the identity.
    """
    M = np.array(mat, dtype=np.int64) % p
    if M.ndim == 1:
        M = M.reshape(1, -1)
    nrows, ncols = M.shape
    if nrows == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref(M, p)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for i, c in enumerate(pivots):
            basis[idx, c] = (-int(R[i, f])) % p
    return basis


def solve(mat, rhs, p: int) -> np.ndarray | None:
    """One solution x of mat @ x = rhs over F_p, or None if the system is inconsistent."""
    M = np.array(mat, dtype=np.int64) % p
    if M.ndim == 1:
        M = M.reshape(1, -1)
    b = np.asarray(rhs, dtype=np.int64).reshape(-1, 1) % p
    R, pivots = rref(np.hstack([M, b]), p)
    ncols = M.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R[i, ncols]
    return x


def min_nonzero_weight(basis, p: int, group: int = 1, budget: int = 1 << 24,
                       block: int = 1 << 14) -> int:
    """Minimum number of nonzero column groups over all nonzero F_p-combinations
    of the basis rows.

    Groups are consecutive runs of `group` columns; a group counts as nonzero
    when any of its entries is.  Enumeration is exhaustive over all p^rank
    combinations, blocked so that a table of at most `block` partial
    combinations is kept in memory; combinations are visited in odometer order
    over the coefficient vectors, so the scan is deterministic.
    """
    B = np.array(basis, dtype=np.int64) % p
    if B.ndim == 1:
        B = B.reshape(1, -1)
    d, ncols = B.shape
    if d == 0:
        raise ValueError("empty basis has no nonzero combinations")
    if ncols % group:
        raise ValueError("column count not divisible by group size")
    required = p ** d
    if required > budget:
        raise BudgetError(required, budget)
    if p <= 63:
        dt = np.int8
    elif p <= (1 << 14):
        dt = np.int16
    else:
        dt = np.int32
    dlo = 0
    while dlo < d and p ** (dlo + 1) <= block:
        dlo += 1
    base = np.zeros((1, ncols), dtype=dt)
    for i in range(dlo):
        mults = [((c * B[i]) % p).astype(dt) for c in range(p)]
        base = np.concatenate([(base + m) % p for m in mults], axis=0)
    ngroups = ncols // group
    best = ngroups + 1
    hi = B[dlo:]
    for combo in itertools.product(range(p), repeat=d - dlo):
        if combo:
            offset = ((np.array(combo, dtype=np.int64) @ hi) % p).astype(dt)
            W = (base + offset) % p
        else:
            W = base
        nz = (W.reshape(-1, ngroups, group) != 0).any(axis=2)
        w = nz.sum(axis=1)
        w = w[w > 0]
        if w.size:
            m = int(w.min())
            if m < best:
                best = m
                if best == 1:
                    return 1
    return best
