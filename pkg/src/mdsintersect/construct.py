"""Linear l-intersection pairs of MDS codes for every feasible (q, n, k1, k2, l).

Routes:

* ``generic`` -- n <= q+1, two GRS_inf codes whose denominators share a
  degree-l factor.
* ``theorem3`` -- n = q, k1 = k2 = l+1.
* ``theorem4`` -- n = q+1 with 1 in {l, k1-l, k2-l}.
* ``theorem5`` / ``theorem6`` / ``theorem7`` -- n = q+2 over GF(2^m), dimensions
  in {3, q-1}.

Every builder self-verifies before returning: both codes are checked MDS and
the intersection dimension is computed twice (rank of G1 H2^T and the rank of
the stacked generators).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .code import (
    INF,
    GrsSpec,
    LinearCode,
    dual,
    full_weight_codeword,
    grs_encode,
    grs_infty_encode,
    is_mds,
)
from .field import FieldContext, field_of_order, prime_power
from .matrix import Matrix, intersection_basis, kernel, matmul, rank, stack_rank_intersection
from .poly import NoSuchPolynomial, pick_irreducible


class ConstructionError(RuntimeError):
    """A builder could not produce a verified pair."""


class ConstructionDefect(ConstructionError):
    """A construction failed its own verification."""

    def __init__(self, message: str, C1: Optional[LinearCode] = None, C2: Optional[LinearCode] = None):
        if C1 is not None and C2 is not None:
            message += f"\nG1 = {C1.G.tolist()}\nG2 = {C2.G.tolist()}"
        super().__init__(message)


class ConstructionGap(ConstructionError):
    """The tuple is listed as feasible but no construction for it is known.

    Raised for n = q+1, {k1, k2} = {l, l+1}, l >= 2, when no MDS code nested
    with codimension one in another MDS code of length q+1 is found.
    """


class InfeasibleTuple(ValueError):
    """The request has no MDS intersection pair (or lies outside every route)."""


@dataclass(frozen=True)
class PairRequest:
    q: int
    n: int
    k1: int
    k2: int
    l: int

    def swapped(self) -> "PairRequest":
        return PairRequest(self.q, self.n, self.k2, self.k1, self.l)

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.q, self.n, self.k1, self.k2, self.l)


class Status(str, enum.Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE_PROVEN = "InfeasibleProven"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: Status
    route: Optional[str] = None
    reason: str = ""

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE

    def __str__(self) -> str:
        inner = self.route if self.feasible else self.reason
        return f"{self.status.value}({inner})"


@dataclass
class IntersectionPair:
    C1: LinearCode
    C2: LinearCode
    l_claimed: int
    l_verified: int
    route: str
    intersection_basis: Matrix
    oracles: dict = dc_field(default_factory=dict)

    @property
    def field(self) -> FieldContext:
        return self.C1.field


# -- feasibility ---------------------------------------------------------------


def _is_even_q(q: int) -> bool:
    pm = prime_power(q)
    return pm is not None and pm[0] == 2


def generic_blocked_case(req: PairRequest) -> Optional[int]:
    """1 or 2 when the denominator-polynomial route cannot pick its factors."""
    q, n, k1, k2, l = req.astuple()
    if n == q and k1 - l == 1 and k2 - l == 1:
        return 1
    if n == q + 1 and 1 in (l, k1 - l, k2 - l):
        return 2
    return None


def feasibility(req: PairRequest) -> FeasibilityVerdict:
    q, n, k1, k2, l = req.astuple()
    if prime_power(q) is None:
        return FeasibilityVerdict(Status.OUT_OF_SCOPE, reason=f"q={q} is not a prime power")
    if q < 3:
        return FeasibilityVerdict(Status.OUT_OF_SCOPE, reason="only q >= 3 is covered")
    if min(n, k1, k2, l) < 0 or n < 1:
        return FeasibilityVerdict(Status.OUT_OF_SCOPE, reason="parameters must be non-negative, n >= 1")
    if k1 > n or k2 > n:
        return FeasibilityVerdict(Status.INFEASIBLE_PROVEN, reason="dimension exceeds length")
    lo, hi = max(k1 + k2 - n, 0), min(k1, k2)
    if not lo <= l <= hi:
        return FeasibilityVerdict(
            Status.INFEASIBLE_PROVEN, reason=f"intersection dimension must lie in [{lo}, {hi}]"
        )
    if k1 == n or k2 == n:
        return FeasibilityVerdict(Status.OUT_OF_SCOPE, reason="a code equal to the whole space is excluded")
    if n <= q + 1:
        if n == q + 1 and (k1, k2, l) in ((2, 1, 1), (1, 2, 1)):
            return FeasibilityVerdict(
                Status.INFEASIBLE_PROVEN,
                reason="a [q+1,2,q] MDS code has no codeword of weight q+1 (A_{q+1} = 0)",
            )
        if n == q + 1 and {k1, k2} == {q - 1, q} and l == q - 1:
            return FeasibilityVerdict(
                Status.INFEASIBLE_PROVEN,
                reason="the duals would be a 1-dim MDS subcode of a [q+1,2,q] MDS code, "
                "which needs a weight-(q+1) codeword (A_{q+1} = 0)",
            )
        return FeasibilityVerdict(Status.FEASIBLE, route=_route_for(req))
    if n == q + 2:
        if not _is_even_q(q):
            return FeasibilityVerdict(Status.OUT_OF_SCOPE, reason="length q+2 needs q even (MDS conjecture)")
        dims = {3, q - 1}
        if k1 in dims and k2 in dims:
            if (k1, k2) == (q - 1, q - 1):
                ok = q - 4 <= l <= q - 1
            else:
                ok = 0 <= l <= 3
            if ok:
                return FeasibilityVerdict(Status.FEASIBLE, route=_route_for(req))
        return FeasibilityVerdict(
            Status.OUT_OF_SCOPE, reason="length q+2 only for dimensions 3 and q-1 (MDS conjecture)"
        )
    return FeasibilityVerdict(Status.OUT_OF_SCOPE, reason="length exceeds q+2 (MDS conjecture)")


# -- shared helpers --------------------------------------------------------------


def _matrix(F: FieldContext, rows) -> Matrix:
    rows = [list(map(int, r)) for r in rows]
    return Matrix(F, rows) if rows else Matrix(F, np.zeros((0, 0), dtype=np.int64))


def _powers_row(F: FieldContext, e: int, tail) -> list[int]:
    """(a_1^e, ..., a_{q-1}^e) followed by ``tail``."""
    return [F.pow(a, e) for a in F.nonzero] + list(tail)


def verify_pair(C1: LinearCode, C2: LinearCode, l: int, route: str) -> IntersectionPair:
    """Certify MDS-ness and dim(C1 ∩ C2) = l through two independent computations."""
    if not is_mds(C1) or not is_mds(C2):
        raise ConstructionDefect(f"{route}: a constructed code is not MDS", C1, C2)
    via_product = C1.k - rank(C1.G @ C2.H.T)
    if C1.k and C2.k:
        stacked = stack_rank_intersection(C1.G, C2.G)
    else:
        stacked = 0
    basis = intersection_basis(C1.G, C2.G) if C1.k and C2.k else Matrix(
        C1.field, np.zeros((0, C1.n), dtype=np.int64), cols=C1.n
    )
    in_both = (not basis.rows) or (C1.contains(basis.a).all() and C2.contains(basis.a).all())
    if not (via_product == stacked == basis.rows == l and in_both):
        raise ConstructionDefect(
            f"{route}: intersection dimension via_product={via_product} stacked={stacked} "
            f"basis={basis.rows}, expected {l}",
            C1,
            C2,
        )
    return IntersectionPair(
        C1=C1,
        C2=C2,
        l_claimed=l,
        l_verified=via_product,
        route=route,
        intersection_basis=basis,
        oracles={"product_rank": via_product, "stacked_rank": stacked, "basis_rank": basis.rows},
    )


def _swap(pair: IntersectionPair) -> IntersectionPair:
    basis = intersection_basis(pair.C2.G, pair.C1.G) if pair.C1.k and pair.C2.k else pair.intersection_basis
    return IntersectionPair(
        C1=pair.C2,
        C2=pair.C1,
        l_claimed=pair.l_claimed,
        l_verified=pair.C2.k - rank(pair.C2.G @ pair.C1.H.T),
        route=pair.route,
        intersection_basis=basis,
        oracles=dict(pair.oracles),
    )


# -- n <= q+1: two GRS_inf codes sharing a denominator factor -------------------


def accepts_generic(req: PairRequest) -> bool:
    q, n, k1, k2, l = req.astuple()
    return (
        1 <= n <= q + 1
        and max(k1, k2) <= n - 1
        and max(k1 + k2 - n, 0) <= l <= min(k1, k2)
        and generic_blocked_case(req) is None
    )


def build_generic(req: PairRequest) -> IntersectionPair:
    if not accepts_generic(req):
        raise InfeasibleTuple(f"generic route does not apply to {req}")
    q, n, k1, k2, l = req.astuple()
    F = field_of_order(q)
    points = F.element_order[: n - 1]
    try:
        f = pick_irreducible(F, k1 - l, forbidden_roots=points)
        h = pick_irreducible(F, k2 - l, forbidden_roots=points, excluded=(f,) if k2 - l == k1 - l else ())
        L = pick_irreducible(F, l, forbidden_roots=points)
    except NoSuchPolynomial as exc:  # excluded by accepts_generic
        raise ConstructionDefect(f"generic: {exc}") from exc
    P, Q = f * L, h * L
    ones = (1,) * n
    pts = tuple(points) + (INF,)
    C1 = grs_infty_encode(GrsSpec(F, pts, ones, k1, denominator=P), tag=f"GRS_inf(P={P})")
    C2 = grs_infty_encode(GrsSpec(F, pts, ones, k2, denominator=Q), tag=f"GRS_inf(Q={Q})")
    pair = verify_pair(C1, C2, l, "generic")
    pair.oracles["polynomials"] = {"f": f.to_list(), "h": h.to_list(), "L": L.to_list()}
    return pair


# -- n = q, k1 = k2 = l+1 ----------------------------------------------------------


def accepts_theorem3(req: PairRequest) -> bool:
    q, n, k1, k2, l = req.astuple()
    return n == q and k1 == k2 == l + 1 and 0 <= l <= q - 2


def build_theorem3(req: PairRequest) -> IntersectionPair:
    if not accepts_theorem3(req):
        raise InfeasibleTuple(f"theorem3 route does not apply to {req}")
    q, l = req.q, req.l
    F = field_of_order(q)
    ones = (1,) * q
    if l > 0:
        C1 = grs_encode(GrsSpec(F, F.element_order, ones, l + 1), tag="GRS(F_q)")
        C2 = grs_encode(GrsSpec(F, F.nonzero + (INF,), ones, l + 1), tag="GRS(F_q^* + INF)")
        route = "theorem3.case1"
    else:
        C1 = LinearCode(_matrix(F, [[1] * q]), tag="repetition")
        C2 = LinearCode(_matrix(F, [list(F.nonzero) + [1]]), tag="span(a_1..a_{q-1},1)")
        route = "theorem3.case2"
    return verify_pair(C1, C2, l, route)


# -- n = q+1 with 1 in {l, k1-l, k2-l} -------------------------------------------


def accepts_theorem4(req: PairRequest) -> bool:
    q, n, k1, k2, l = req.astuple()
    return (
        n == q + 1
        and max(k1, k2) <= q
        and max(k1 + k2 - q - 1, 0) <= l <= min(k1, k2)
        and 1 in (l, k1 - l, k2 - l)
    )


def build_theorem4(req: PairRequest) -> IntersectionPair:
    if not accepts_theorem4(req):
        raise InfeasibleTuple(f"theorem4 route does not apply to {req}")
    if req.k1 > req.k2:
        return _swap(build_theorem4(req.swapped()))
    q, n, k1, k2, l = req.astuple()
    if (k1, k2, l) == (1, 2, 1):
        raise InfeasibleTuple("no [q+1,1,q+1] code lies inside a [q+1,2,q] MDS code (A_{q+1} = 0)")
    F = field_of_order(q)
    a = F.nonzero
    pts = a + (0, INF)
    pts_swapped = a + (INF, 0)
    ones = (1,) * n

    def grs(points, k, v=ones, tag=""):
        return grs_encode(GrsSpec(F, points, v, k), tag=tag)

    if l == 0:
        # k1 - l = 1 (or k1 = 0 with k2 = 1); the subcases below all have l >= 1.
        C2 = grs(pts, k2, tag="GRS_k2(F*,0,INF)")
        if k1 == 0:
            C1 = LinearCode.zero(F, n)
        elif k2 >= 2:
            C1 = LinearCode(_matrix(F, [[1] * n]), tag="all-ones")
        else:
            C1 = LinearCode(_matrix(F, [list(a) + [1, 1]]), tag="span(a_1..a_{q-1},1,1)")
        return verify_pair(C1, C2, 0, "theorem4.l0")

    if l == 1:
        if k1 == 1 and k2 == 1:
            C = grs(pts, 1, tag="repetition")
            return verify_pair(C, C, 1, "theorem4.case1(i)")
        if k1 == 1:
            C2 = grs(pts, k2, tag="GRS_k2(F*,0,INF)")
            c = full_weight_codeword(C2)
            C1 = LinearCode(Matrix(F, c[None, :]), tag="span(full-weight codeword)")
            return verify_pair(C1, C2, 1, "theorem4.case1(iii)")
        s = k1 + k2
        C1 = grs(pts, k1, tag="GRS_k1(F*,0,INF)")
        if s <= q:
            v = tuple(F.pow(x, k1 - 1) for x in a) + (1, 1)
            C2 = grs(pts_swapped, k2, v, tag="GRS_k2(F*,INF,0; v)")
            sub = "iv"
        elif s == q + 1:
            v = tuple(F.pow(x, k1 - 1) for x in a) + (1, 1)
            C2 = grs(pts, k2, v, tag="GRS_k2(F*,0,INF; v)")
            sub = "v"
        else:
            v = tuple(F.pow(x, k1 - 2) for x in a) + (1, 1)
            C2 = grs(pts, k2, v, tag="GRS_k2(F*,0,INF; v)")
            sub = "vi"
        return verify_pair(C1, C2, 1, f"theorem4.case1({sub})")

    if k1 - l == 1:
        if k1 < k2:
            C1 = grs(pts, k1, tag="GRS_k1(F*,0,INF)")
            C2 = grs(pts, k2, tag="GRS_k2(F*,0,INF)")
            sub = "i"
        elif k1 <= q - 1:
            C1 = grs(pts, l + 1, tag="GRS_{l+1}(F*,0,INF)")
            C2 = grs(pts_swapped, l + 1, tag="GRS_{l+1}(F*,INF,0)")
            sub = "ii"
        else:
            v = tuple(a) + (1, 1)
            C1 = grs(pts, q, tag="GRS_q(F*,0,INF)")
            C2 = grs(pts, q, v, tag="GRS_q(F*,0,INF; v)")
            sub = "iii"
        return verify_pair(C1, C2, l, f"theorem4.case2({sub})")

    # k1 = l, k2 = l + 1, l >= 2: C1 must be an MDS subcode of codimension one.
    return _build_nested(F, l)


NESTED_SEARCH_BOUND = 2**20


class SearchTooLarge(ConstructionGap):
    """The nested-subcode search space exceeds NESTED_SEARCH_BOUND."""


def free_points(C: LinearCode, bound: int = NESTED_SEARCH_BOUND) -> tuple[tuple[int, ...], ...]:
    """Normalized u in F^k on no hyperplane spanned by k-1 columns of G.

    For MDS C, the subcode {mG : u.m = 0} is MDS exactly when u is such a point.
    """
    F, k, n = C.field, C.k, C.n
    if k < 2:
        return ()
    if F.q**k > bound:
        raise SearchTooLarge(f"search over {F.q}^{k} vectors exceeds the bound {bound}")
    normals = []
    for S in itertools.combinations(range(n), k - 1):
        K = kernel(C.G.columns(S).T)
        normals.append(K.a[0])
    grid = np.array(list(itertools.product(range(F.q), repeat=k)), dtype=np.int64)
    nz = grid != 0
    first = np.argmax(nz, axis=1)
    lead = grid[np.arange(len(grid)), first]
    U = grid[nz.any(axis=1) & (lead == 1)]
    hits = matmul(F, U, np.array(normals).T)
    return tuple(tuple(int(x) for x in u) for u in U[np.all(hits != 0, axis=1)])


def _hyperplane_subcode(C: LinearCode, u, tag: str) -> LinearCode:
    K = kernel(Matrix(C.field, [list(u)]))
    return LinearCode(K @ C.G, tag=tag)


def extended_rs(F: FieldContext, k: int) -> LinearCode:
    points = F.nonzero + (0, INF)
    return grs_encode(GrsSpec(F, points, (1,) * (F.q + 1), k), tag=f"GRS_{k}(F*,0,INF)")


@lru_cache(maxsize=None)
def _extended_rs_free_points(q: int, k: int) -> tuple[tuple[int, ...], ...]:
    return free_points(extended_rs(field_of_order(q), k))


def _build_nested(F: FieldContext, l: int) -> IntersectionPair:
    q, n = F.q, F.q + 1
    k_small = min(l + 1, n - l)
    ambient = extended_rs(F, k_small)
    try:
        found = _extended_rs_free_points(q, k_small)
    except SearchTooLarge as exc:
        raise ConstructionGap(
            f"(n,k1,k2,l) = ({n},{l},{l + 1},{l}) over GF({q}) needs an MDS codimension-one "
            f"subcode of a [{n},{k_small}] MDS code; {exc}"
        ) from exc
    if not found:
        raise ConstructionGap(
            f"no construction for (n,k1,k2,l) = ({n},{l},{l + 1},{l}) over GF({q}): it needs "
            f"an MDS codimension-one subcode of a [{n},{k_small}] MDS code, and exhaustive search "
            "finds none inside any length-(q+1) GRS code (all are monomially equivalent)"
        )
    sub = _hyperplane_subcode(ambient, found[0], tag=f"subcode u={list(found[0])}")
    if k_small == l + 1:
        C1, C2 = sub, ambient
    else:
        C1, C2 = dual(ambient), dual(sub)
    pair = verify_pair(C1, C2, l, "theorem4.nested")
    pair.oracles["free_point"] = list(found[0])
    pair.oracles["free_point_count"] = len(found)
    return pair


# -- n = q+2 over GF(2^m) --------------------------------------------------------


def _even_q_plus_2(req: PairRequest) -> bool:
    return _is_even_q(req.q) and req.q >= 4 and req.n == req.q + 2


def accepts_theorem5(req: PairRequest) -> bool:
    q = req.q
    return (
        _even_q_plus_2(req)
        and req.k1 == req.k2 == q - 1
        and q - 4 <= req.l <= q - 1
    )


def build_theorem5(req: PairRequest) -> IntersectionPair:
    """G1 = (U | I), G2 = (U | V') with V' = diag(1,..,1, g,..,g); the number of
    g entries is q-1-l, which is the rank of G1 H2^T."""
    if not accepts_theorem5(req):
        raise InfeasibleTuple(f"theorem5 route does not apply to {req}")
    q, n, _, _, l = req.astuple()
    F = field_of_order(q)
    a = F.nonzero
    U = np.array([[1, x, F.mul(x, x)] for x in a], dtype=np.int64)
    vprime = [1 if i <= l + 3 else F.generator for i in range(4, q + 3)]

    def code(diag, tag):
        V = np.diag(np.array(diag, dtype=np.int64))
        G = Matrix(F, np.hstack([U, V]))
        # H = (I | -U^T V^{-1})
        Vinv = np.array([F.inv(int(d)) for d in diag], dtype=np.int64)
        right = F.neg_arr(F.mul_arr(U.T, Vinv[None, :]))
        H = Matrix(F, np.hstack([np.eye(3, dtype=np.int64), right]))
        return LinearCode(G, H=H, tag=tag)

    C1 = code([1] * (q - 1), "(U|V)")
    C2 = code(vprime, "(U|V')")
    pair = verify_pair(C1, C2, l, "theorem5")
    pair.oracles["nonzero_b"] = sum(1 for v in vprime if v != 1)
    return pair


def accepts_theorem6(req: PairRequest) -> bool:
    return _even_q_plus_2(req) and req.q > 4 and req.k1 == req.k2 == 3 and 0 <= req.l <= 3


def build_theorem6(req: PairRequest) -> IntersectionPair:
    if not accepts_theorem6(req):
        raise InfeasibleTuple(f"theorem6 route does not apply to {req}")
    F = field_of_order(req.q)
    l = req.l
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    G1 = _matrix(F, [_powers_row(F, 0, e1), _powers_row(F, 1, e2), _powers_row(F, 2, e3)])
    if l == 0:
        rows = [_powers_row(F, 3, e1), _powers_row(F, 4, e2), _powers_row(F, 5, e3)]
    elif l == 1:
        rows = [_powers_row(F, 2, e3), _powers_row(F, 3, e2), _powers_row(F, 4, e1)]
    elif l == 2:
        rows = [_powers_row(F, 0, e3), _powers_row(F, 1, e2), _powers_row(F, 2, e1)]
    else:
        rows = G1.tolist()
    C1 = LinearCode(G1, tag="hyperoval")
    C2 = LinearCode(_matrix(F, rows), tag=f"theorem6.G2(l={l})")
    return verify_pair(C1, C2, l, f"theorem6.l{l}")


def accepts_theorem7(req: PairRequest) -> bool:
    q = req.q
    return (
        _even_q_plus_2(req)
        and q > 4
        and {req.k1, req.k2} == {3, q - 1}
        and 0 <= req.l <= 3
    )


def build_theorem7(req: PairRequest) -> IntersectionPair:
    """C1 = [q+2, 3, q] from G1 and C2 = [q+2, q-1, 4] from its parity check H2."""
    if not accepts_theorem7(req):
        raise InfeasibleTuple(f"theorem7 route does not apply to {req}")
    if req.k1 != 3:
        return _swap(build_theorem7(req.swapped()))
    F = field_of_order(req.q)
    l = req.l
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    standard = [_powers_row(F, 0, e1), _powers_row(F, 1, e2), _powers_row(F, 2, e3)]
    if l == 0:
        g1 = [_powers_row(F, 1, e1), _powers_row(F, 2, e2), _powers_row(F, 3, e3)]
        h2 = standard
    elif l == 1:
        g1, h2 = standard, standard
    elif l == 2:
        g1 = standard
        h2 = [_powers_row(F, 0, e1), _powers_row(F, -1, e2), _powers_row(F, 1, e3)]
    else:
        g1 = standard
        h2 = [_powers_row(F, 0, e1), _powers_row(F, -1, e2), _powers_row(F, -2, e3)]
    C1 = LinearCode(_matrix(F, g1), tag=f"theorem7.G1(l={l})")
    C2 = LinearCode.from_parity_check(_matrix(F, h2), tag=f"theorem7.ker(H2)(l={l})")
    pair = verify_pair(C1, C2, l, f"theorem7.l{l}")
    pair.oracles["G1H2T"] = (C1.G @ C2.H.T).tolist()
    return pair


# -- dispatch ------------------------------------------------------------------------


@dataclass(frozen=True)
class Route:
    name: str
    accepts: Callable[[PairRequest], bool]
    build: Callable[[PairRequest], IntersectionPair]


ROUTES = (
    Route("generic", accepts_generic, build_generic),
    Route("theorem3", accepts_theorem3, build_theorem3),
    Route("theorem4", accepts_theorem4, build_theorem4),
    Route("theorem5", accepts_theorem5, build_theorem5),
    Route("theorem6", accepts_theorem6, build_theorem6),
    Route("theorem7", accepts_theorem7, build_theorem7),
)


def accepting_routes(req: PairRequest) -> list[str]:
    return [r.name for r in ROUTES if r.accepts(req)]


def _route_for(req: PairRequest) -> str:
    names = accepting_routes(req)
    if len(names) != 1:
        raise ConstructionDefect(f"{req} is accepted by routes {names}")
    return names[0]


def construct_pair(req: PairRequest) -> IntersectionPair:
    """Build and verify a pair for any Feasible request."""
    verdict = feasibility(req)
    if not verdict.feasible:
        raise InfeasibleTuple(str(verdict))
    route = next(r for r in ROUTES if r.name == verdict.route)
    return route.build(req)
