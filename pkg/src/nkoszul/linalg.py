"""Exact dense linear algebra over a prime field F_p.

Everything downstream reduces to the handful of primitives in this module:
reduced row echelon form, null spaces, linear solves and canonical subspace
arithmetic.  Matrices are numpy int64 arrays with entries in [0, p); the
reduction is Gauss-Jordan with lowest-index pivoting, so every derived basis
is deterministic and two equal subspaces have bit-identical bases.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class LinAlgError(ValueError):
    pass


def as_matrix(m, p: int) -> np.ndarray:
    """Coerce to an int64 matrix with entries reduced mod p."""
    a = np.asarray(m, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise LinAlgError("expected a matrix")
    return a % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p, guarding against int64 overflow by chunked reduction."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    # entries < p <= ~2**31 would overflow; p is small (default 101) so the
    # inner dimension can reach ~9e14 / p^2 before overflow.  Desk scale is
    # far below that, but keep the guard for safety.
    if a.shape[1] * (p - 1) * (p - 1) >= np.iinfo(np.int64).max:
        out = zeros(a.shape[0], b.shape[1])
        step = max(1, int(np.iinfo(np.int64).max // max(1, (p - 1) * (p - 1))) - 1)
        for k in range(0, a.shape[1], step):
            out = (out + a[:, k:k + step] @ b[k:k + step, :]) % p
        return out
    return (a @ b) % p


def rref(m, p: int):
    """Reduced row echelon form.

    Returns (reduced, pivots, rank).  The RREF over a field is unique, which
    makes it usable as a canonical form.
    """
    a = as_matrix(m, p).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        f = a[:, c].copy()
        f[r] = 0
        nzr = np.nonzero(f)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(f[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots, r


def rank(m, p: int) -> int:
    return rref(m, p)[2]


def solve(a, b, p: int):
    """Some x with a @ x = b (mod p), or None if inconsistent.

    Free variables are set to 0 under canonical pivoting, so the choice is
    deterministic.
    """
    a = as_matrix(a, p)
    bv = np.asarray(b, dtype=np.int64).reshape(-1) % p
    if bv.shape[0] != a.shape[0]:
        raise LinAlgError("incompatible shapes in solve")
    aug = np.concatenate([a, bv.reshape(-1, 1)], axis=1)
    red, pivots, _ = rref(aug, p)
    n = a.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = red[i, n]
    return x


def solve_matrix(a, b, p: int):
    """Some X with a @ X = b for matrix right-hand side, or None."""
    a = as_matrix(a, p)
    b = as_matrix(b, p)
    aug = np.concatenate([a, b], axis=1)
    red, pivots, _ = rref(aug, p)
    n = a.shape[1]
    if any(c >= n for c in pivots):
        return None
    x = zeros(n, b.shape[1])
    for i, c in enumerate(pivots):
        x[c] = red[i, n:]
    return x


def null_space(m, p: int) -> "Subspace":
    """Canonical basis of {x : m @ x = 0} as a Subspace of F_p^cols."""
    a = as_matrix(m, p)
    rows, cols = a.shape
    red, pivots, r = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(len(free), cols)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-red[i, fc]) % p
    return Subspace.from_rows(cols, basis, p)


def left_null_space(m, p: int) -> "Subspace":
    """Canonical basis of {x : x @ m = 0} (row vectors)."""
    return null_space(as_matrix(m, p).T, p)


def inverse(m, p: int):
    """Inverse of a square matrix, or None if singular."""
    a = as_matrix(m, p)
    n = a.shape[0]
    if a.shape[1] != n:
        raise LinAlgError("inverse of non-square matrix")
    x = solve_matrix(a, eye(n), p)
    return x


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^ambient_dim in canonical RREF row form."""

    ambient_dim: int
    p: int
    basis: np.ndarray = field(compare=False)

    @staticmethod
    def from_rows(ambient_dim: int, rows, p: int) -> "Subspace":
        a = as_matrix(rows, p) if np.size(rows) else zeros(0, ambient_dim)
        if a.shape[1] != ambient_dim:
            raise LinAlgError("ambient dimension mismatch")
        red, _, r = rref(a, p)
        return Subspace(ambient_dim, p, red[:r])

    @staticmethod
    def zero(ambient_dim: int, p: int) -> "Subspace":
        return Subspace(ambient_dim, p, zeros(0, ambient_dim))

    @staticmethod
    def full(ambient_dim: int, p: int) -> "Subspace":
        return Subspace(ambient_dim, p, eye(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains_vector(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(-1) % self.p
        if v.shape[0] != self.ambient_dim:
            raise LinAlgError("ambient dimension mismatch")
        return solve(self.basis.T, v, self.p) is not None

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise LinAlgError("ambient dimension mismatch")
        return all(self.contains_vector(row) for row in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise LinAlgError("ambient dimension mismatch")
        stacked = np.concatenate([self.basis, other.basis], axis=0)
        return Subspace.from_rows(self.ambient_dim, stacked, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise LinAlgError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.p)
        # x = u @ A = v @ B;  solve [A^T | -B^T] (u,v)^T = 0
        stacked = np.concatenate([self.basis.T, (-other.basis.T) % self.p], axis=1)
        ker = null_space(stacked, self.p)
        rows = mat_mul(ker.basis[:, : self.dim], self.basis, self.p)
        return Subspace.from_rows(self.ambient_dim, rows, self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.p == other.p
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.p, self.basis.tobytes()))
