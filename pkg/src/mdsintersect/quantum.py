"""Asymmetric entanglement-assisted code parameters from classical code pairs.

For codes C1 = [n, k1] and C2 = [n, k2] the CSS-style construction gives

    [[n, n - k1 - k2 + c, dz/dx, c]]_q,   c = rank(G1 G2^T) = k1 - dim(C1 ∩ C2^⊥),
    dz = wt(C1^⊥ \\ C2),   dx = wt(C2^⊥ \\ C1).

Distances are always computed from the codes (by enumeration or support
scan), never filled in from the closed-form expectation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .code import (
    DEFAULT_ENUM_BOUND,
    EmptyDifference,
    LinearCode,
    dual,
    min_weight_outside,
)
from .construct import (
    ConstructionDefect,
    IntersectionPair,
    PairRequest,
    _is_even_q,
    construct_pair,
)
from .matrix import intersection_basis, rank

EMPTY = "empty"
Distance = Union[int, str]


@dataclass(frozen=True)
class AeaqeccParams:
    q: int
    n: int
    k: int
    dz: Distance
    dx: Distance
    c: int
    pure: bool
    mds: bool

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.dz}/{self.dx},{self.c}]]_{self.q}"


def _outside(C: LinearCode, D: LinearCode, bound: int, method: str) -> Distance:
    try:
        return min_weight_outside(C, D, bound=bound, method=method)
    except EmptyDifference:
        return EMPTY


def derive_params(
    C1: LinearCode,
    C2: LinearCode,
    bound: int = DEFAULT_ENUM_BOUND,
    method: str = "auto",
) -> AeaqeccParams:
    """Parameters of the AEAQECC built from C1 and C2.

    ``dz`` or ``dx`` is ``EMPTY`` when the corresponding set difference has no
    elements (e.g. C2^⊥ ⊆ C1); such codes are reported as neither pure nor MDS.
    """
    if C1.n != C2.n or C1.field != C2.field:
        raise ValueError("codes must share length and field")
    n = C1.n
    c_rank = rank(C1.G @ C2.G.T)
    C1d, C2d = dual(C1), dual(C2)
    if C1.k and C2d.k:
        meet = intersection_basis(C1.G, C2d.G).rows
    else:
        meet = 0
    c_dim = C1.k - meet
    if c_rank != c_dim:
        raise ConstructionDefect(f"entanglement count disagrees: rank {c_rank} vs dimension {c_dim}")
    c = c_rank
    k = n - C1.k - C2.k + c
    dz = _outside(C1d, C2, bound, method)
    dx = _outside(C2d, C1, bound, method)
    wz = _outside(C1d, None, bound, method)
    wx = _outside(C2d, None, bound, method)
    pure = EMPTY not in (dz, dx) and dz == wz and dx == wx
    mds = EMPTY not in (dz, dx) and dx + dz == n - k + c + 2
    return AeaqeccParams(q=C1.q, n=n, k=k, dz=dz, dx=dx, c=c, pure=pure, mds=mds)


def pure_mds_regime(q: int, n: int, k1: int, k2: int, l: int) -> Optional[str]:
    """Which of the three parameter regimes applies, or None."""
    if n <= q + 1 and max(k1, k2) <= n - 1 and max(k1 + k2 - n, 0) <= l < min(k1, k2):
        return "i"
    if _is_even_q(q) and q >= 4 and n == q + 2:
        if (k1, k2) in ((3, q - 1), (q - 1, 3), (3, 3)) and 0 <= l <= 2:
            return "ii"
        if (k1, k2) == (q - 1, q - 1) and q - 4 <= l <= q - 2:
            return "iii"
    return None


def claimed_params(q: int, n: int, k1: int, k2: int, l: int) -> AeaqeccParams:
    return AeaqeccParams(q=q, n=n, k=k2 - l, dz=k1 + 1, dx=n - k2 + 1, c=k1 - l, pure=True, mds=True)


def build_pure_mds_aeaqecc(
    q: int,
    n: int,
    k1: int,
    k2: int,
    l: int,
    bound: int = DEFAULT_ENUM_BOUND,
    method: str = "auto",
) -> tuple[IntersectionPair, AeaqeccParams]:
    """Pure MDS [[n, k2-l, (k1+1)/(n-k2+1), k1-l]]_q code from an l-intersection pair.

    The pair is (C1, D) with dim(C1 ∩ D) = l; the second code fed to
    derive_params is C2 = D^⊥, so that C2^⊥ = D.
    """
    if pure_mds_regime(q, n, k1, k2, l) is None:
        if l == min(k1, k2):
            raise ValueError(
                f"l = min(k1, k2) = {l} is degenerate: either no entanglement is needed "
                "or the set difference defining dx is empty"
            )
        raise ValueError(f"(q,n,k1,k2,l) = {(q, n, k1, k2, l)} is outside every pure MDS regime")
    pair = construct_pair(PairRequest(q, n, k1, k2, l))
    C1, D = pair.C1, pair.C2
    C2 = dual(D)
    params = derive_params(C1, C2, bound=bound, method=method)
    expected = claimed_params(q, n, k1, k2, l)
    if params != expected:
        raise ConstructionDefect(f"computed {params} ({params.pure=}, {params.mds=}) but expected {expected}")
    return pair, params


def lemma4_check(C: LinearCode, D: Optional[LinearCode], bound: int = DEFAULT_ENUM_BOUND, method: str = "auto") -> bool:
    """wt(C \\ D) == n - dim C + 1 for MDS C not contained in D."""
    if D is not None and C.is_subcode_of(D):
        raise EmptyDifference("C is contained in D")
    return min_weight_outside(C, D, bound=bound, method=method) == C.n - C.k + 1
