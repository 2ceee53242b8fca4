"""Finite fields GF(p^m) with a fixed, reproducible element enumeration.

Elements are plain integers in ``[0, q)``: the base-p encoding of the residue
polynomial's coefficients, constant term least significant.  Scalar helpers
work on Python ints; the ``*_arr`` helpers are vectorised over numpy arrays
and are what the matrix and code modules use.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

DEFAULT_MAX_SIZE = 2**16

# Build a full addition table for odd-characteristic extension fields up to
# this size; above it, addition falls back to digit-wise arithmetic.
_ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m``, or None if q is not a prime power."""
    if q < 2:
        return None
    factors = prime_factors(q)
    if len(factors) != 1:
        return None
    p = factors[0]
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return p, m


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _undigits(digits, p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _times_x(digits: list[int], modulus: list[int], p: int) -> list[int]:
    """Multiply a residue by x modulo the monic ``modulus`` (coefficient lists)."""
    m = len(digits)
    top = digits[-1]
    shifted = [0] + digits[:-1]
    if top:
        # x^m == -(modulus[0] + ... + modulus[m-1] x^{m-1})
        shifted = [(s - top * c) % p for s, c in zip(shifted, modulus[:m])]
    return shifted


def _order_of_x(modulus: list[int], p: int, limit: int) -> int | None:
    """Multiplicative order of x modulo ``modulus``, or None if it exceeds limit
    or x is not a unit."""
    m = len(modulus) - 1
    if modulus[0] == 0:
        return None
    one = [1] + [0] * (m - 1)
    cur = _times_x(one, modulus, p)
    k = 1
    while cur != one:
        if k >= limit:
            return None
        cur = _times_x(cur, modulus, p)
        k += 1
    return k


def smallest_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree m over GF(p).

    Coefficients are compared from the x^{m-1} term down, which coincides with
    integer order of the base-p encoding of the lower coefficients.  Returned
    constant term first, length m + 1, leading 1.
    """
    q = p**m
    for low in range(q):
        coeffs = _digits(low, p, m) + [1]
        # x has order q - 1 modulo f only if the quotient ring's unit group has
        # q - 1 elements, i.e. f is irreducible; so this also certifies f.
        if _order_of_x(coeffs, p, q - 1) == q - 1:
            return tuple(coeffs)
    raise ArithmeticError(f"no primitive polynomial of degree {m} over GF({p})")


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


class FieldContext:
    """A concrete GF(p^m).

    Attributes
    ----------
    p, m, q : int
        Characteristic, degree and order.
    modulus : tuple[int, ...]
        Monic primitive polynomial over GF(p), constant term first.
    generator : int
        The fixed primitive element ``g``.
    element_order : tuple[int, ...]
        ``(g^0, g^1, ..., g^{q-2}, 0)``; this is the enumeration
        ``a_1, ..., a_{q-1}, 0`` used by every construction.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], generator: int):
        self.p = p
        self.m = m
        self.q = q = p**m
        self.modulus = tuple(modulus)
        self.generator = generator

        exp = [0] * (2 * (q - 1))
        if m == 1:
            val = 1
            for i in range(q - 1):
                exp[i] = val
                val = val * generator % p
        else:
            cur = [1] + [0] * (m - 1)
            for i in range(q - 1):
                exp[i] = _undigits(cur, p)
                cur = _times_x(cur, list(self.modulus), p)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        log = [0] * q
        for i in range(q - 1):
            log[exp[i]] = i
        if len(set(exp[: q - 1])) != q - 1 or 0 in exp[: q - 1]:
            raise ArithmeticError("generator is not primitive")

        self._exp = exp
        self._log = log
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)
        self.element_order = tuple(exp[: q - 1]) + (0,)

        self._add_table = None
        self._neg_table = None
        if m > 1 and p != 2:
            digits = np.array([_digits(v, p, m) for v in range(q)], dtype=np.int64)
            self._digit_table = digits
            self._powers = p ** np.arange(m, dtype=np.int64)
            neg = ((-digits) % p) @ self._powers
            self._neg_table = neg.astype(np.int64)
            if q <= _ADD_TABLE_LIMIT:
                s = (digits[:, None, :] + digits[None, :, :]) % p
                self._add_table = (s @ self._powers).astype(np.int64)

        for arr in (self.exp_table, self.log_table):
            arr.setflags(write=False)

    # -- identity -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    @property
    def nonzero(self) -> tuple[int, ...]:
        """``a_1, ..., a_{q-1}`` (the powers of the generator)."""
        return self.element_order[:-1]

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return int(self._add_table[a, b])
        da = _digits(a, self.p, self.m)
        db = _digits(b, self.p, self.m)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return int(self._neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0")
        return self._log[a]

    def mul_residue(self, a: int, b: int) -> int:
        """Schoolbook multiply-then-reduce; independent of the log tables."""
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da, db = _digits(a, p, m), _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for i in range(m):
                    prod[top - m + i] = (prod[top - m + i] - c * self.modulus[i]) % p
        return _undigits(prod[:m], p)

    # -- vectorised arithmetic ------------------------------------------------

    def add_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        s = (self._digit_table[a] + self._digit_table[b]) % self.p
        return s @ self._powers

    def neg_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.m == 1:
            return (-a) % self.p
        return self._neg_table[a]

    def sub_arr(self, a, b) -> np.ndarray:
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        prod = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def inv_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("0 has no inverse")
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]


class FieldElement:
    """An element bound to its field; mainly for interactive use and tests."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldContext, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise ValueError(f"{value} is not a canonical element of {field}")
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return FieldElement(self.field, other).value
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field}({self.value})"


@lru_cache(maxsize=None)
def _make_field(p: int, m: int) -> FieldContext:
    modulus = smallest_primitive_polynomial(p, m)
    if m == 1:
        generator = smallest_primitive_root(p)
    else:
        generator = p  # the residue class of x encodes as base-p "10"
    return FieldContext(p, m, modulus, generator)


def make_field(p: int, m: int = 1, max_size: int = DEFAULT_MAX_SIZE) -> FieldContext:
    """Construct GF(p^m).

    The modulus is the lexicographically smallest monic primitive polynomial of
    degree m; the generator is x (m >= 2) or the smallest primitive root (m == 1).
    Contexts are cached, so equal arguments return the same object.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > max_size:
        raise ValueError(f"field size {p}^{m} exceeds the bound {max_size}")
    return _make_field(p, m)


def field_of_order(q: int, max_size: int = DEFAULT_MAX_SIZE) -> FieldContext:
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pm, max_size=max_size)
