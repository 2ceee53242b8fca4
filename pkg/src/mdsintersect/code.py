"""Linear codes as row spaces, GRS encoders and exact weight computations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from .field import FieldContext
from .matrix import (
    Matrix,
    batch_full_rank,
    kernel,
    matmul,
    rank,
    row_basis,
)
from .poly import Polynomial

DEFAULT_ENUM_BOUND = 2**20
MDS_SUBSET_LIMIT = 10**6
_CHUNK = 1 << 15


class EnumerationBoundExceeded(RuntimeError):
    pass


class EmptyDifference(ValueError):
    """The set difference C \\ D is empty (C is contained in D)."""


class NoFullWeightCodeword(LookupError):
    pass


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Point = Union[int, _Infinity]


class LinearCode:
    """A k-dimensional subspace of GF(q)^n given by a generator matrix.

    The generator is kept as constructed (not reduced) so exported matrices
    match the displayed constructions.  ``H`` is computed from the kernel of
    ``G`` unless a parity-check matrix is supplied.
    """

    def __init__(
        self,
        G: Matrix,
        H: Optional[Matrix] = None,
        d: Optional[int] = None,
        tag: str = "",
    ):
        self.field: FieldContext = G.field
        self.G = G
        self.n = G.cols
        self.k = G.rows
        if rank(G) != self.k:
            raise ValueError("generator matrix must have full row rank")
        if H is None:
            H = kernel(G)
        elif H.cols != self.n or rank(H) != self.n - self.k:
            raise ValueError("parity-check matrix has the wrong shape or rank")
        if not (G @ H.T).is_zero():
            raise ValueError("G H^T != 0")
        self.H = H
        self.d = d
        self.tag = tag

    @classmethod
    def from_parity_check(cls, H: Matrix, tag: str = "") -> "LinearCode":
        return cls(kernel(H), H=H, tag=tag)

    @classmethod
    def zero(cls, field: FieldContext, n: int, tag: str = "zero") -> "LinearCode":
        return cls(Matrix(field, np.zeros((0, n), dtype=np.int64), cols=n), tag=tag)

    def __repr__(self) -> str:
        d = f",{self.d}" if self.d is not None else ""
        return f"LinearCode([{self.n},{self.k}{d}]_{self.field.q}{' ' + self.tag if self.tag else ''})"

    @property
    def q(self) -> int:
        return self.field.q

    def contains(self, vectors) -> np.ndarray:
        """Boolean mask of which vectors are codewords (zero syndrome)."""
        v = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
        if self.H.rows == 0:
            return np.ones(v.shape[0], dtype=bool)
        return ~matmul(self.field, v, self.H.a.T).any(axis=1)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return bool(other.contains(self.G.a).all()) if self.k else True

    def same_space(self, other: "LinearCode") -> bool:
        return self.k == other.k and self.is_subcode_of(other)

    def rref_generator(self) -> Matrix:
        return row_basis(self.G)

    def encode(self, messages) -> np.ndarray:
        return matmul(self.field, np.atleast_2d(messages), self.G.a)

    def codeword_chunks(self, bound: int = DEFAULT_ENUM_BOUND) -> Iterator[np.ndarray]:
        """Every codeword exactly once, in chunks; raises if q^k > bound."""
        total = self.q**self.k
        if total > bound:
            raise EnumerationBoundExceeded(f"{self.q}^{self.k} codewords exceed bound {bound}")
        yield from _chunks(self.field, self.G.a, 0, total)


def _messages(q: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, k), dtype=np.int64)
    for j in range(k):
        out[:, j] = idx % q
        idx = idx // q
    return out


def _chunks(field: FieldContext, G: np.ndarray, start: int, stop: int) -> Iterator[np.ndarray]:
    k, n = G.shape
    if k == 0:
        yield np.zeros((1, n), dtype=np.int64)
        return
    for s in range(start, stop, _CHUNK):
        msgs = _messages(field.q, k, s, min(stop, s + _CHUNK))
        yield matmul(field, msgs, G)


def weights(words: np.ndarray) -> np.ndarray:
    return np.count_nonzero(words, axis=1)


# -- generalized Reed-Solomon encoders -------------------------------------


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation data for a (generalised, possibly extended) RS code.

    ``points`` may contain the point ``INF`` at most once.  With a
    ``denominator`` P the code is the rational-function form GRS_inf(A, P, v)
    and INF must be the last point.
    """

    field: FieldContext
    points: tuple
    multipliers: tuple
    k: int
    denominator: Optional[Polynomial] = None

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "multipliers", tuple(int(v) for v in self.multipliers))
        n = len(pts)
        if len(self.multipliers) != n:
            raise ValueError("need one multiplier per point")
        if any(v == 0 or not 0 < v < self.field.q for v in self.multipliers):
            raise ValueError("multipliers must be nonzero field elements")
        finite = [a for a in pts if a is not INF]
        if n - len(finite) > 1:
            raise ValueError("at most one point at infinity")
        if len(set(finite)) != len(finite):
            raise ValueError("evaluation points must be distinct")
        if any(not 0 <= a < self.field.q for a in finite):
            raise ValueError("evaluation point outside the field")
        if not 0 <= self.k <= n:
            raise ValueError("need 0 <= k <= n")
        P = self.denominator
        if P is not None:
            if pts[-1] is not INF:
                raise ValueError("the denominator form needs INF as the last point")
            if P.is_zero() or P.degree > n:
                raise ValueError("denominator must be nonzero with degree <= n")
            if any(P(a) == 0 for a in finite):
                raise ValueError("denominator vanishes at an evaluation point")

    @property
    def n(self) -> int:
        return len(self.points)


def grs_encode(spec: GrsSpec, tag: str = "grs") -> LinearCode:
    """Rows are the encodings of 1, x, ..., x^{k-1}.

    A finite point a with multiplier v contributes v*a^j; the point INF
    contributes v exactly when j = k - 1 (the coefficient of x^{k-1}).
    """
    if spec.denominator is not None:
        raise ValueError("use grs_infty_encode for the denominator form")
    F, k = spec.field, spec.k
    G = np.zeros((k, spec.n), dtype=np.int64)
    for i, (a, v) in enumerate(zip(spec.points, spec.multipliers)):
        for j in range(k):
            if a is INF:
                G[j, i] = v if j == k - 1 else 0
            else:
                G[j, i] = F.mul(v, F.pow(a, j))
    return LinearCode(Matrix(F, G, cols=spec.n), d=spec.n - k + 1 if k else None, tag=tag)


def eval_at_infinity(num: Polynomial, den: Polynomial) -> int:
    """r(INF) for r = num/den: the ratio of the degree-t coefficients, t = deg den.

    Zero exactly when deg num < deg den; a pole (deg num > deg den) is an error.
    """
    if num.degree > den.degree:
        raise ValueError("rational function has a pole at infinity")
    F = num.field
    t = den.degree
    return F.div(num.coeff(t), den.coeff(t))


def grs_infty_encode(spec: GrsSpec, tag: str = "grs_inf") -> LinearCode:
    """Rows for f = x^j, 0 <= j < deg P: finite entries v_i a_i^j / P(a_i), last
    entry v_n (x f / P)(INF)."""
    P = spec.denominator
    if P is None:
        raise ValueError("grs_infty_encode needs a denominator polynomial")
    if P.degree != spec.k:
        raise ValueError("denominator degree must equal the dimension")
    F, k, n = spec.field, spec.k, spec.n
    finite = spec.points[:-1]
    G = np.zeros((k, n), dtype=np.int64)
    pinv = [F.inv(P(a)) for a in finite]
    for j in range(k):
        for i, a in enumerate(finite):
            G[j, i] = F.mul(spec.multipliers[i], F.mul(F.pow(a, j), pinv[i]))
        xf = Polynomial.monomial(F, j + 1)
        G[j, n - 1] = F.mul(spec.multipliers[-1], eval_at_infinity(xf, P))
    return LinearCode(Matrix(F, G, cols=n), d=n - k + 1 if k else None, tag=tag)


def dual(C: LinearCode) -> LinearCode:
    """The Euclidean dual; its generator is the parity-check matrix of C."""
    return LinearCode(C.H, H=C.G, tag=f"dual({C.tag})" if C.tag else "dual")


# -- weights -----------------------------------------------------------------


def weight_census(C: LinearCode, bound: int = DEFAULT_ENUM_BOUND) -> np.ndarray:
    """A_0..A_n by exhaustive enumeration of all q^k codewords."""
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for words in C.codeword_chunks(bound):
        counts += np.bincount(weights(words), minlength=C.n + 1)
    return counts


def min_distance(C: LinearCode, bound: int = DEFAULT_ENUM_BOUND) -> int:
    """Exact minimum nonzero weight by exhaustive message enumeration."""
    if C.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    best = C.n + 1
    for words in C.codeword_chunks(bound):
        w = weights(words)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def _subcode_on_support(C: LinearCode, support: Sequence[int]) -> np.ndarray:
    """Basis rows of the codewords of C vanishing outside ``support``."""
    outside = [i for i in range(C.n) if i not in set(support)]
    if not outside:
        return C.G.a
    msgs = kernel(Matrix(C.field, C.G.a[:, outside].T, cols=C.k))
    if msgs.rows == 0:
        return np.zeros((0, C.n), dtype=np.int64)
    return matmul(C.field, msgs.a, C.G.a)


def min_weight_outside_by_supports(C: LinearCode, D: Optional[LinearCode] = None) -> int:
    """Minimum weight of C \\ D by scanning supports in order of size.

    For each support S (smallest first) the codewords of C inside S form a
    subspace; the first S whose subspace escapes D fixes the answer.  Exact and
    independent of q^k, so it complements message enumeration.
    """
    if C.k == 0 or (D is not None and C.is_subcode_of(D)):
        raise EmptyDifference("C \\ D is empty")
    for w in range(1, C.n + 1):
        for S in itertools.combinations(range(C.n), w):
            basis = _subcode_on_support(C, S)
            if basis.shape[0] == 0:
                continue
            if D is None or not D.contains(basis).all():
                return w
    raise AssertionError("unreachable: C has a nonzero codeword")


def min_weight_outside(
    C: LinearCode,
    D: Optional[LinearCode],
    bound: int = DEFAULT_ENUM_BOUND,
    method: str = "auto",
) -> int:
    """wt(C \\ D): the minimum weight of codewords of C not in D.

    ``D=None`` means the zero code.  ``method`` is "enumerate" (all q^k
    codewords, bounded), "supports" or "auto" (enumerate when within bound).
    Raises EmptyDifference when C is contained in D.
    """
    if D is not None and (D.n != C.n or D.field != C.field):
        raise ValueError("codes must share length and field")
    if method == "auto":
        method = "enumerate" if C.q**C.k <= bound else "supports"
    if method == "supports":
        return min_weight_outside_by_supports(C, D)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    best = None
    for words in C.codeword_chunks(bound):
        w = weights(words)
        keep = w > 0
        if D is not None:
            keep &= ~D.contains(words)
        if keep.any():
            m = int(w[keep].min())
            best = m if best is None else min(best, m)
    if best is None:
        raise EmptyDifference("C \\ D is empty")
    return best


def is_mds(C: LinearCode, bound: int = DEFAULT_ENUM_BOUND) -> bool:
    """Every k columns of G independent (equivalently d = n - k + 1).

    Uses batched k x k rank checks when C(n, k) <= 10^6, else the exact
    minimum distance.
    """
    n, k = C.n, C.k
    if k == 0 or k == n:
        return True
    if comb(n, k) <= MDS_SUBSET_LIMIT:
        G = C.G.a
        subsets = np.array(list(itertools.combinations(range(n), k)), dtype=np.int64)
        for s in range(0, len(subsets), 4096):
            block = G[:, subsets[s : s + 4096]]  # (k, B, k)
            mats = np.transpose(block, (1, 0, 2))
            if not batch_full_rank(C.field, mats).all():
                return False
        return True
    if C.q**k <= bound:
        return min_distance(C, bound) == n - k + 1
    raise EnumerationBoundExceeded("neither the subset check nor enumeration is feasible")


def mds_weight_distribution(n: int, k: int, q: int) -> list[int]:
    """Weight distribution A_0..A_n of any [n, k, n-k+1]_q MDS code."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    d = n - k + 1
    A = [0] * (n + 1)
    A[0] = 1
    for i in range(d, n + 1):
        s = sum((-1) ** j * comb(i - 1, j) * q ** (i - d - j) for j in range(i - d + 1))
        A[i] = comb(n, i) * (q - 1) * s
    return A


def full_weight_codeword(C: LinearCode, bound: int = DEFAULT_ENUM_BOUND, seed: int = 0) -> np.ndarray:
    """Some codeword with no zero coordinate.

    Scans all messages when q^k <= bound (so a miss proves none exists);
    otherwise tries ``bound`` messages drawn from a seeded generator.
    """
    total = C.q**C.k
    if total <= bound:
        chunks = _chunks(C.field, C.G.a, 0, total)
    else:
        rng = np.random.default_rng(seed)
        chunks = (
            matmul(C.field, rng.integers(0, C.q, size=(min(_CHUNK, bound - s), C.k)), C.G.a)
            for s in range(0, bound, _CHUNK)
        )
    for words in chunks:
        hit = np.nonzero(weights(words) == C.n)[0]
        if hit.size:
            return words[hit[0]].copy()
    if total > bound:
        raise EnumerationBoundExceeded("no full-weight codeword among the sampled messages")
    raise NoFullWeightCodeword(f"{C} has no codeword of weight {C.n}")
