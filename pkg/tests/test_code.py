import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_Q, random_full_rank, rng_for
from mdsintersect.code import (
    INF,
    EmptyDifference,
    EnumerationBoundExceeded,
    GrsSpec,
    LinearCode,
    NoFullWeightCodeword,
    dual,
    full_weight_codeword,
    grs_encode,
    grs_infty_encode,
    is_mds,
    mds_weight_distribution,
    min_distance,
    min_weight_outside,
    weight_census,
)
from mdsintersect.construct import build_theorem3, PairRequest
from mdsintersect.field import field_of_order
from mdsintersect.matrix import Matrix
from mdsintersect.oracles import exhaustive_mds, has_full_weight_codeword
from mdsintersect.poly import Polynomial, pick_irreducible


def grs(q, points, k, v=None):
    F = field_of_order(q)
    return grs_encode(GrsSpec(F, tuple(points), v or (1,) * len(points), k))


@st.composite
def random_grs(draw, max_q=9, max_messages=2**14):
    """A GRS code on random distinct points (possibly with INF anywhere) and random multipliers."""
    q = draw(st.sampled_from([x for x in SMALL_Q if 3 <= x <= max_q]))
    F = field_of_order(q)
    pool = list(range(q)) + [INF]
    n = draw(st.integers(2, q + 1))
    points = draw(st.permutations(pool))[:n]
    k = draw(st.integers(1, n - 1))
    while q**k > max_messages:
        k -= 1
    v = tuple(draw(st.integers(1, q - 1)) for _ in range(n))
    return grs_encode(GrsSpec(F, tuple(points), v, k))


# -- encoders ------------------------------------------------------------------------


def test_repetition_code():
    C = grs(5, range(5), 1)
    assert C.G.tolist() == [[1] * 5]
    assert min_distance(C) == 5


def test_grs_5_3_is_mds_by_enumeration():
    C = grs(5, field_of_order(5).element_order, 3)
    assert (C.n, C.k) == (5, 3)
    assert min_distance(C) == 3 and is_mds(C) and exhaustive_mds(C)


def test_extended_grs_matches_displayed_generator():
    F = field_of_order(5)
    l = 2
    C = grs(5, F.nonzero + (INF,), l + 1)
    a = F.nonzero
    expect = [[1, 1, 1, 1, 0], list(a) + [0], [F.pow(x, 2) for x in a] + [1]]
    assert C.G.tolist() == expect
    assert build_theorem3(PairRequest(5, 5, 3, 3, 2)).C2.G == C.G


def test_infinity_may_sit_anywhere():
    C = grs(7, (INF, 1, 2, 3, 0), 3)
    assert C.G.a[:, 0].tolist() == [0, 0, 1]
    assert is_mds(C)


def test_spec_validation():
    F = field_of_order(5)
    with pytest.raises(ValueError):
        GrsSpec(F, (1, 1, 2), (1, 1, 1), 2)
    with pytest.raises(ValueError):
        GrsSpec(F, (1, 2, 3), (1, 0, 1), 2)
    with pytest.raises(ValueError):
        GrsSpec(F, (INF, 1, INF), (1, 1, 1), 2)
    with pytest.raises(ValueError):
        GrsSpec(F, (1, 2, 3), (1, 1, 1), 4)
    P = Polynomial(F, (1, 1))  # root 4
    with pytest.raises(ValueError):
        GrsSpec(F, (1, 4, INF), (1, 1, 1), 1, denominator=P)
    with pytest.raises(ValueError):
        GrsSpec(F, (1, INF, 2), (1, 1, 1), 1, denominator=P)


def test_grs_infty_infinity_coordinate():
    F = field_of_order(7)
    P = pick_irreducible(F, 3, forbidden_roots=F.element_order[:5])
    pts = F.element_order[:5] + (INF,)
    C = grs_infty_encode(GrsSpec(F, pts, (1,) * 6, 3, denominator=P))
    assert C.G.a[:, -1].tolist() == [0, 0, 1]  # monic P: only x^{k-1} reaches INF
    v = (2, 3, 4, 5, 6, 3)
    C = grs_infty_encode(GrsSpec(F, pts, v, 3, denominator=P))
    assert C.G.a[:, -1].tolist() == [0, 0, 3]
    assert is_mds(C)
    with pytest.raises(ValueError):
        grs_infty_encode(GrsSpec(F, pts, v, 2, denominator=P))


def test_grs_infty_small_example():
    F = field_of_order(5)
    alpha = F.element_order[4]  # 0, outside the first four points
    P = Polynomial.linear(F, alpha)
    C = grs_infty_encode(GrsSpec(F, F.nonzero + (INF,), (1,) * 5, 1, denominator=P))
    assert (C.n, C.k) == (5, 1)
    assert weight_census(C).tolist() == [1, 0, 0, 0, 0, 4]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 9]), st.data())
def test_grs_infty_is_mds(q, data):
    F = field_of_order(q)
    n = data.draw(st.integers(2, q))
    k = data.draw(st.integers(1, n - 1))
    pts = F.element_order[: n - 1]
    P = pick_irreducible(F, k, forbidden_roots=pts)
    v = tuple(data.draw(st.integers(1, q - 1)) for _ in range(n))
    C = grs_infty_encode(GrsSpec(F, pts + (INF,), v, k, denominator=P))
    assert is_mds(C)
    if q**k <= 2**14:
        assert min_distance(C) == n - k + 1


# -- duals ----------------------------------------------------------------------------


def test_dual_of_repetition():
    C = grs(7, range(6), 1)
    D = dual(C)
    assert (D.n, D.k) == (6, 5)
    assert min_distance(D) == 2


def test_self_dual_code():
    F = field_of_order(2)
    C = LinearCode(Matrix(F, [[1, 1, 0, 0], [0, 0, 1, 1]]))
    assert dual(C).same_space(C)


@settings(max_examples=100, deadline=None)
@given(random_grs())
def test_dual_of_mds_is_mds(C):
    D = dual(C)
    assert D.k == C.n - C.k
    assert (C.G @ D.G.T).is_zero()
    assert dual(D).same_space(C)
    assert is_mds(D)
    if C.q**D.k <= 2**14:
        assert min_distance(D) == C.k + 1


# -- distances and MDS -------------------------------------------------------------


def test_is_mds_negative_examples():
    F = field_of_order(5)
    G = Matrix(F, [[1, 1, 1, 0], [1, 1, 2, 1]])  # columns 0 and 1 equal
    assert not is_mds(LinearCode(G))
    F2 = field_of_order(2)
    C = LinearCode(Matrix(F2, [[1, 1, 0, 0], [0, 0, 1, 1]]))
    assert min_distance(C) == 2 and not is_mds(C)


def test_min_distance_bounds():
    F = field_of_order(9)
    C = grs(9, F.element_order, 7)
    with pytest.raises(EnumerationBoundExceeded):
        min_distance(C, bound=9**6)
    with pytest.raises(ValueError):
        min_distance(LinearCode.zero(F, 3))


@settings(max_examples=100, deadline=None)
@given(random_grs())
def test_mds_check_agrees_with_enumeration(C):
    assert is_mds(C) and exhaustive_mds(C)
    assert min_distance(C) == C.n - C.k + 1


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(0, 2**32 - 1), st.integers(2, 6), st.data())
def test_is_mds_matches_distance_on_random_codes(q, seed, n, data):
    F = field_of_order(q)
    k = data.draw(st.integers(1, n - 1))
    C = LinearCode(random_full_rank(F, k, n, rng_for(seed)))
    d = min_distance(C)
    assert d <= n - k + 1  # Singleton
    assert is_mds(C) == (d == n - k + 1)


# -- weight distribution -------------------------------------------------------------


def test_weight_distribution_examples():
    assert mds_weight_distribution(5, 3, 5)[3:] == [40, 40, 44]
    for q in (3, 4, 5, 7, 8, 9):
        A = mds_weight_distribution(q + 1, 2, q)
        assert A[q + 1] == 0
        assert A[q] == (q + 1) * (q - 1)  # A_d = C(n, d)(q - 1)
    with pytest.raises(ValueError):
        mds_weight_distribution(4, 0, 3)


@settings(max_examples=100, deadline=None)
@given(random_grs())
def test_weight_census_matches_formula(C):
    census = weight_census(C).tolist()
    assert census == mds_weight_distribution(C.n, C.k, C.q)
    assert sum(census) == C.q**C.k


# -- full-weight codewords ------------------------------------------------------------


def test_full_weight_codeword_examples():
    C = grs(5, range(5), 1)
    c = full_weight_codeword(C)
    assert (c != 0).all()
    F = field_of_order(5)
    C2 = grs(5, F.nonzero + (0, INF), 2)
    with pytest.raises(NoFullWeightCodeword):
        full_weight_codeword(C2)
    C3 = grs(5, F.nonzero + (0, INF), 3)
    c = full_weight_codeword(C3)
    assert (c != 0).sum() == 6 and C3.contains(c).all()


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_no_full_weight_in_q_plus_1_two_dim(q):
    F = field_of_order(q)
    C = grs(q, F.nonzero + (0, INF), 2)
    assert not has_full_weight_codeword(C)


# -- set-difference weights -----------------------------------------------------------


def test_min_weight_outside_examples():
    F = field_of_order(7)
    C = grs(7, F.element_order, 3)
    assert min_weight_outside(C, None) == 5
    assert min_weight_outside(C, LinearCode.zero(F, 7)) == 5
    with pytest.raises(EmptyDifference):
        min_weight_outside(C, C)
    D = grs(7, F.element_order, 5)
    with pytest.raises(EmptyDifference):
        min_weight_outside(C, D, method="supports")
    with pytest.raises(ValueError):
        min_weight_outside(C, None, method="nope")


@settings(max_examples=100, deadline=None)
@given(random_grs(max_q=8, max_messages=2**12), st.data())
def test_enumeration_and_support_scan_agree(C, data):
    F = C.field
    pts = list(range(F.q)) + [INF]
    perm = data.draw(st.permutations(pts))[: C.n]
    kd = data.draw(st.integers(0, C.n - 1))
    D = grs_encode(GrsSpec(F, tuple(perm), (1,) * C.n, kd)) if kd else None
    try:
        a = min_weight_outside(C, D, method="enumerate")
    except EmptyDifference:
        with pytest.raises(EmptyDifference):
            min_weight_outside(C, D, method="supports")
        return
    assert a == min_weight_outside(C, D, method="supports")
    assert a == C.n - C.k + 1  # MDS C outside any subspace
