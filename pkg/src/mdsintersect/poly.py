"""Univariate polynomials over a :class:`FieldContext`.

Coefficients are canonical field integers, constant term first, with no
trailing zeros; the zero polynomial has an empty coefficient tuple and degree
``-1`` (our stand-in for minus infinity).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator

from .field import FieldContext, prime_factors


class NoSuchPolynomial(LookupError):
    """No monic irreducible polynomial meets the requested constraints."""


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldContext, coeffs: Iterable[int] = ()):
        self.field = field
        self.coeffs = _trim(coeffs)
        for c in self.coeffs:
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} not in {field}")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldContext) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldContext) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldContext) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldContext, degree: int, coeff: int = 1) -> "Polynomial":
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def linear(cls, field: FieldContext, root: int) -> "Polynomial":
        """The monic polynomial ``x - root``."""
        return cls(field, (field.neg(root), 1))

    # -- basic properties -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def sort_key(self) -> tuple:
        """Degree first, then coefficients from the top term down."""
        return (self.degree, tuple(reversed(self.coeffs)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __lt__(self, other: "Polynomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        F = self.field
        if isinstance(other, int):
            return Polynomial(F, [F.mul(c, other) for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = F.inv(other.lead)
        quot = [0] * max(len(rem) - dd, 0)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            f = F.mul(c, inv_lead)
            quot[top - dd] = f
            for i, b in enumerate(other.coeffs):
                rem[top - dd + i] = F.sub(rem[top - dd + i], F.mul(f, b))
        return Polynomial(F, quot), Polynomial(F, rem[:dd] if dd > 0 else [])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * self.field.inv(self.lead)

    def __call__(self, x: int) -> int:
        """Horner evaluation at a field element."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def roots(self) -> list[int]:
        """All roots in the base field, by evaluation at every element."""
        return [a for a in self.field.element_order if self(a) == 0]

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def powmod(base: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    result = Polynomial.one(base.field) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def is_irreducible(f: Polynomial) -> bool:
    """Rabin's test: f | x^{q^n} - x and gcd(f, x^{q^{n/t}} - x) = 1 for primes t | n."""
    if not f.is_monic():
        raise ValueError("is_irreducible expects a monic polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n == 1:
        return True
    F = f.field
    x = Polynomial.x(F)

    def frob(k: int) -> Polynomial:
        # x^{q^k} mod f by k successive q-th powers
        r = x
        for _ in range(k):
            r = powmod(r, F.q, f)
        return r

    for t in prime_factors(n):
        h = frob(n // t) - x
        if gcd(f, h).degree != 0:
            return False
    return (frob(n) - x) % f == Polynomial.zero(F)


def monic_polynomials(field: FieldContext, degree: int) -> Iterator[Polynomial]:
    """All monic polynomials of the given degree, in increasing sort_key order."""
    q = field.q
    for low in itertools.product(range(q), repeat=degree):
        # product() varies the last slot fastest; that slot is the constant term
        yield Polynomial(field, tuple(reversed(low)) + (1,))


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    r = 0
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            r += 1
        f += 1
    if n > 1:
        r += 1
    return -1 if r % 2 else 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def count_irreducibles(q: int | FieldContext, n: int) -> int:
    """Number of monic irreducibles of degree n over GF(q), via the Mobius sum."""
    if isinstance(q, FieldContext):
        q = q.q
    if n < 1:
        raise ValueError("degree must be at least 1")
    total = sum(mobius(d) * q ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


@lru_cache(maxsize=4096)
def _pick(field, degree, forbidden, excluded):
    for f in monic_polynomials(field, degree):
        if f in excluded:
            continue
        if degree == 1:
            if f.roots()[0] in forbidden:
                continue
        elif not is_irreducible(f):
            continue
        return f
    raise NoSuchPolynomial(
        f"no monic irreducible of degree {degree} over {field} avoiding "
        f"{len(forbidden)} roots and {len(excluded)} excluded polynomials"
    )


def pick_irreducible(
    field: FieldContext,
    degree: int,
    forbidden_roots: Iterable[int] = (),
    excluded: Iterable[Polynomial] = (),
) -> Polynomial:
    """First monic irreducible of ``degree`` (sort_key order) with no root in
    ``forbidden_roots`` and not in ``excluded``.  Degree 0 gives the constant 1.

    Raises NoSuchPolynomial when nothing qualifies.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree == 0:
        return Polynomial.one(field)
    return _pick(field, degree, frozenset(forbidden_roots), frozenset(excluded))
