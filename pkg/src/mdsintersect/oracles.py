"""Brute-force oracles kept independent of the production algorithms.

Nothing here uses the Rabin test, the Mobius formula or rank computations;
these are the slow, obviously-correct counterparts used by the test suite.
"""

from __future__ import annotations

import itertools

import numpy as np

from .code import DEFAULT_ENUM_BOUND, EnumerationBoundExceeded, LinearCode
from .field import FieldContext
from .poly import Polynomial, monic_polynomials


def irreducible_by_trial_division(f: Polynomial) -> bool:
    """No monic divisor of degree 1..deg(f)//2 divides f."""
    if not f.is_monic() or f.degree < 1:
        raise ValueError("expects a monic polynomial of degree >= 1")
    zero = Polynomial.zero(f.field)
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polynomials(f.field, d):
            if f % g == zero:
                return False
    return True


def _all_monic(field: FieldContext, d: int) -> np.ndarray:
    """Coefficient arrays (q^d, d+1), constant first, row index = base-q value of the low part."""
    q = field.q
    idx = np.arange(q**d, dtype=np.int64)
    low = np.stack([(idx // q**t) % q for t in range(d)], axis=1) if d else np.zeros((1, 0), dtype=np.int64)
    return np.hstack([low, np.ones((len(idx), 1), dtype=np.int64)])


def _product_index(field: FieldContext, a: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Base-q index of the low coefficients of a * b for each row b of B."""
    da, db = len(a) - 1, B.shape[1] - 1
    n = da + db
    out = np.zeros((B.shape[0], n + 1), dtype=np.int64)
    for i, ai in enumerate(a):
        if ai:
            out[:, i : i + db + 1] = field.add_arr(out[:, i : i + db + 1], field.mul_arr(B, int(ai)))
    weights = field.q ** np.arange(n, dtype=np.int64)
    return out[:, :n] @ weights


def irreducible_count_by_sieve(field: FieldContext, n: int) -> int:
    """Count monic irreducibles of degree n by striking out every product of two
    monic polynomials of positive degree."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    q = field.q
    reducible = np.zeros(q**n, dtype=bool)
    for i in range(1, n // 2 + 1):
        A, B = _all_monic(field, i), _all_monic(field, n - i)
        for a in A:
            reducible[_product_index(field, a, B)] = True
    return int(q**n - reducible.sum())


def _all_codewords(C: LinearCode, bound: int) -> np.ndarray:
    words = [w for w in C.codeword_chunks(bound)]
    return np.vstack(words) if words else np.zeros((1, C.n), dtype=np.int64)


def common_codeword_count(C1: LinearCode, C2: LinearCode, bound: int = DEFAULT_ENUM_BOUND) -> int:
    """|C1 ∩ C2| by listing both codes and intersecting the sets of words."""
    if C1.n != C2.n:
        raise ValueError("codes must have the same length")
    q, n = C1.q, C1.n
    if q**n >= 2**62:
        raise EnumerationBoundExceeded("words do not fit a 64-bit key")
    weights = q ** np.arange(n, dtype=np.int64)
    keys1 = _all_codewords(C1, bound) @ weights
    keys2 = _all_codewords(C2, bound) @ weights
    return int(np.intersect1d(keys1, keys2).size)


def intersection_dim_by_enumeration(C1: LinearCode, C2: LinearCode, bound: int = DEFAULT_ENUM_BOUND) -> int:
    """log_q |C1 ∩ C2|; the count must be an exact power of q."""
    count = common_codeword_count(C1, C2, bound)
    l = 0
    while C1.q ** (l + 1) <= count:
        l += 1
    if C1.q**l != count:
        raise AssertionError(f"intersection of two subspaces has {count} elements")
    return l


def has_full_weight_codeword(C: LinearCode, bound: int = DEFAULT_ENUM_BOUND) -> bool:
    """Exhaustive scan (no early exit) for a codeword with every coordinate nonzero."""
    return any(bool((w != 0).all(axis=1).any()) for w in C.codeword_chunks(bound))


def exhaustive_mds(C: LinearCode) -> bool:
    """d = n - k + 1, read off from the full list of codewords."""
    if C.k == 0:
        return True
    best = C.n
    for w in C.codeword_chunks():
        wt = (w != 0).sum(axis=1)
        wt = wt[wt > 0]
        if wt.size:
            best = min(best, int(wt.min()))
    return best == C.n - C.k + 1


def lex_first_primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic degree-m polynomial (high coefficients compared first) for which
    the powers of x run through all p^m - 1 nonzero residues, found by listing powers."""
    target = p**m - 1
    for low in itertools.product(range(p), repeat=m):
        coeffs = tuple(reversed(low))  # constant first
        if coeffs[0] == 0:
            continue
        seen = set()
        cur = [1] + [0] * (m - 1)
        for _ in range(target):
            key = tuple(cur)
            if key in seen:
                break
            seen.add(key)
            top = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(c - top * coeffs[i]) % p for i, c in enumerate(cur)]
        if len(seen) == target:
            return coeffs + (1,)
    raise AssertionError("no primitive polynomial found")
