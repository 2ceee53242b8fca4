"""Dense matrices over GF(q): row reduction, rank, kernels and intersections."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .field import FieldContext


class Matrix:
    """Immutable rows x cols grid of canonical field integers."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldContext, entries, cols: int | None = None):
        a = np.array(entries, dtype=np.int64)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, cols if cols is not None else 0)
        if a.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if cols is not None and a.shape[1] != cols:
            raise ValueError(f"expected {cols} columns, got {a.shape[1]}")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise ValueError(f"entries outside {field}")
        a.setflags(write=False)
        self.field = field
        self.a = a

    @classmethod
    def zeros(cls, field: FieldContext, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldContext, k: int) -> "Matrix":
        return cls(field, np.eye(k, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.a.T, cols=self.rows)

    def __getitem__(self, idx):
        return self.a[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.a.shape == other.a.shape and bool(
            np.array_equal(self.a, other.a)
        )

    def __hash__(self):
        return hash((self.field, self.a.shape, self.a.tobytes()))

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.a.tolist()

    def is_zero(self) -> bool:
        return not self.a.any()

    def _check(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise ValueError("matrices over different fields")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.field, matmul(self.field, self.a, other.a), cols=other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, self.field.add_arr(self.a, other.a), cols=self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, self.field.sub_arr(self.a, other.a), cols=self.cols)

    def columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, self.a[:, list(idx)], cols=len(idx))


def matmul(field: FieldContext, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of integer-encoded arrays over ``field``; ``a`` may be (..., k)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros(a.shape[:-1] + (b.shape[1],), dtype=np.int64)
    if field.m == 1:
        p = field.p
        # Chunk the contraction so int64 never overflows: each term < p^2.
        step = max(1, (2**62) // (p * p))
        for s in range(0, a.shape[-1], step):
            out = (out + a[..., s : s + step] @ b[s : s + step]) % p
        return out
    for j in range(a.shape[-1]):
        out = field.add_arr(out, field.mul_arr(a[..., j, None], b[j]))
    return out


def vstack(*ms: Matrix) -> Matrix:
    field = ms[0].field
    cols = ms[0].cols
    for m in ms:
        if m.field != field or m.cols != cols:
            raise ValueError("cannot stack matrices of different fields or widths")
    return Matrix(field, np.vstack([m.a for m in ms]).reshape(-1, cols), cols=cols)


def hstack(*ms: Matrix) -> Matrix:
    field = ms[0].field
    return Matrix(field, np.hstack([m.a for m in ms]))


def _rref_array(field: FieldContext, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = np.array(a, dtype=np.int64)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        inv = field.inv(int(a[r, c]))
        if inv != 1:
            a[r] = field.mul_arr(a[r], inv)
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = a[others, c][:, None]
            a[others] = field.sub_arr(a[others], field.mul_arr(factors, a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Pivots are the first nonzero entry at or below the current row.
    """
    a, pivots = _rref_array(M.field, M.a)
    return Matrix(M.field, a, cols=M.cols), len(pivots), pivots


def rank(M: Matrix) -> int:
    return len(_rref_array(M.field, M.a)[1])


def row_basis(M: Matrix) -> Matrix:
    """Nonzero rows of the RREF: a canonical basis of the row space."""
    R, r, _ = rref(M)
    return Matrix(M.field, R.a[:r], cols=M.cols)


def kernel(M: Matrix) -> Matrix:
    """Basis (as rows) of the right null space ``{x : M x^T = 0}``."""
    F = M.field
    R, r, pivots = rref(M)
    n = M.cols
    free = [c for c in range(n) if c not in set(pivots)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, pc in enumerate(pivots):
            out[t, pc] = F.neg(int(R.a[i, f]))
    return Matrix(F, out, cols=n)


def in_rowspace(M: Matrix, vectors) -> np.ndarray:
    """Boolean mask: which rows of ``vectors`` lie in the row space of M."""
    v = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    H = kernel(M)
    if H.rows == 0:
        return np.ones(v.shape[0], dtype=bool)
    syn = matmul(M.field, v, H.a.T)
    return ~syn.any(axis=1)


def stack_rank_intersection(G1: Matrix, G2: Matrix) -> int:
    """dim(rowspace G1 ∩ rowspace G2) = k1 + k2 - rank([G1; G2]) for full-rank inputs."""
    G1._check(G2)
    if G1.cols != G2.cols:
        raise ValueError("generator matrices must have the same length")
    k1, k2 = G1.rows, G2.rows
    if rank(G1) != k1 or rank(G2) != k2:
        raise ValueError("stack_rank_intersection needs full row rank inputs")
    return k1 + k2 - rank(vstack(G1, G2))


def intersection_basis(G1: Matrix, G2: Matrix) -> Matrix:
    """RREF basis of rowspace(G1) ∩ rowspace(G2).

    Solves x G1 = y G2 through the left kernel of the stacked generators.
    """
    F = G1.field
    S = vstack(G1, G2)
    left = kernel(S.T)  # rows (x | y) with x G1 + y G2 = 0
    if left.rows == 0:
        return Matrix(F, np.zeros((0, G1.cols), dtype=np.int64), cols=G1.cols)
    X = left.a[:, : G1.rows]
    W = Matrix(F, matmul(F, X, G1.a), cols=G1.cols)
    return row_basis(W)


def batch_full_rank(field: FieldContext, mats: np.ndarray) -> np.ndarray:
    """For a stack of square matrices (B, k, k), a boolean mask of the nonsingular ones.

    Gaussian elimination runs over the whole batch at once.
    """
    a = np.array(mats, dtype=np.int64)
    B, k, _ = a.shape
    ok = np.ones(B, dtype=bool)
    idx = np.arange(B)
    for c in range(k):
        col = a[:, c:, c]
        has = col != 0
        ok &= has.any(axis=1)
        piv = c + np.argmax(has, axis=1)
        # swap pivot row into position c
        row_c = a[idx, c].copy()
        a[idx, c] = a[idx, piv]
        a[idx, piv] = row_c
        pv = a[:, c, c]
        safe = np.where(pv == 0, 1, pv)
        a[:, c] = field.mul_arr(a[:, c], field.inv_arr(safe)[:, None])
        if c + 1 < k:
            factors = a[:, c + 1 :, c][:, :, None]
            a[:, c + 1 :] = field.sub_arr(a[:, c + 1 :], field.mul_arr(factors, a[:, c][:, None, :]))
    return ok
