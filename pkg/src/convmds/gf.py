"""Exact arithmetic in F_p and F_{p^m}.

Elements are stored by their canonical index: for F_p the residue itself,
for F_{p^m} the integer ``sum(c_i * p**i)`` of the coefficient tuple
``(c_0, ..., c_{m-1})`` in the polynomial basis modulo the field's modulus.
Ordering of elements (witness tie-breaks, ``primitive_elements``) follows
this index.

Multiplication and inversion go through exp/log tables built once per
field; addition is digit-wise mod p.  ``make_field`` caches instances, so
a given (p, m) always yields the same object.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    BadParametersError,
    DivisionByZeroError,
    FieldMismatchError,
    FieldOverflowError,
    NotPrimeError,
    ZeroElementError,
)

MAX_FIELD_SIZE = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    result = n
    for r in prime_factors(n):
        result -= result // r
    return result


# -- integer-coefficient polynomials over F_p (ascending lists) -----------
# Only used to pick and validate the modulus of an extension field.

def _zp_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _zp_rem(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f = _zp_trim([c % p for c in f])
    g = _zp_trim([c % p for c in g])
    inv_lead = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = f[-1] * inv_lead % p
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _zp_trim(f)
    return f


def _monic_polys(p: int, degree: int) -> Iterable[list[int]]:
    """Monic polynomials of a degree, constant term varying fastest."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(reversed(low)) + [1]


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _zp_trim([c % p for c in coeffs])
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _zp_rem(f, g, p):
                return False
    return True


def first_irreducible(p: int, m: int) -> tuple[int, ...]:
    for f in _monic_polys(p, m):
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


class FieldSpec:
    """A finite field F_q, q = p**m.

    Construct through :func:`make_field`.  Calling the field converts
    integers (embedded through the prime subfield) or length-m coefficient
    tuples into :class:`Felt` values.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus) if modulus is not None else None
        self._pw = np.array([p**i for i in range(m)], dtype=np.int64)
        idx = np.arange(self.q, dtype=np.int64)
        self._digits = np.stack([(idx // p**i) % p for i in range(m)], axis=1)
        self._neg = ((p - self._digits) % p) @ self._pw
        self._build_tables()

    # -- table construction ------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        p, m = self.p, self.m
        da = [int(x) for x in self._digits[a]]
        db = [int(x) for x in self._digits[b]]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _zp_rem(prod, self.modulus, p)
        return sum(c * p**i for i, c in enumerate(rem))

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        factors = prime_factors(order) if order > 1 else []
        gen = next(
            g for g in range(1, q)
            if all(self._slow_pow(g, order // r) != 1 for r in factors)
        )
        exp = np.empty(2 * order, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        exp[order:] = exp[:order]
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        self._neg_list = self._neg.tolist()

    # -- index-level scalar arithmetic -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return int(((self._digits[a] + self._digits[b]) % self.p) @ self._pw)

    def neg(self, a: int) -> int:
        return self._neg_list[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_list[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError("inverse of zero")
        order = self.q - 1
        return self._exp_list[(order - self._log_list[a]) % order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        order = self.q - 1
        return self._exp_list[self._log_list[a] * e % order]

    # -- vectorised arithmetic on index arrays -----------------------------

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (a + b) % self.p
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pw

    def mul_array(self, a: np.ndarray, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return a * b % self.p
        res = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, res)

    def digits(self, a: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._digits[a])

    # -- element construction ----------------------------------------------

    def __call__(self, x: Union[int, Sequence[int], "Felt"]) -> "Felt":
        if isinstance(x, Felt):
            if x.field is not self:
                raise FieldMismatchError(f"{x!r} is not an element of {self}")
            return x
        if isinstance(x, (int, np.integer)):
            return Felt(self, int(x) % self.p)
        coeffs = tuple(int(c) for c in x)
        if len(coeffs) != self.m:
            raise BadParametersError(f"{self} elements need {self.m} coefficients, got {len(coeffs)}")
        return Felt(self, sum((c % self.p) * self.p**i for i, c in enumerate(coeffs)))

    def from_index(self, i: int) -> "Felt":
        if not 0 <= i < self.q:
            raise BadParametersError(f"index {i} out of range for {self}")
        return Felt(self, int(i))

    def elements(self) -> list["Felt"]:
        return [Felt(self, i) for i in range(self.q)]

    @property
    def zero(self) -> "Felt":
        return Felt(self, 0)

    @property
    def one(self) -> "Felt":
        return Felt(self, 1)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (make_field, (self.p, self.m, self.modulus))


class Felt:
    """An element of a :class:`FieldSpec`, held in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    @property
    def rep(self) -> Union[int, tuple[int, ...]]:
        if self.field.m == 1:
            return self.value
        return self.field.digits(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, Felt):
            if other.field is not self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Felt(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Felt(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Felt(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Felt(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Felt(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return Felt(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return Felt(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return Felt(self.field, self.field.power(self.value, int(e)))

    def inverse(self) -> "Felt":
        return Felt(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Felt):
            return NotImplemented
        return self.field is other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.m, self.value))

    def __lt__(self, other: "Felt") -> bool:
        if other.field is not self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        return self.value < other.value

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        if self.field.m == 1:
            return f"F{self.field.p}({self.value})"
        return f"F{self.field.q}{self.rep}"


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Return F_{p^m}.

    When ``modulus`` is omitted for m > 1, the first monic irreducible of
    degree m is used, enumerating lower coefficients with the constant
    term varying fastest (F_9 gets x^2 + 1).

    >>> make_field(3, 2).modulus
    (1, 0, 1)
    """
    if p < 2 or m < 1:
        raise BadParametersError(f"need p >= 2 and m >= 1, got p={p}, m={m}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p**m > MAX_FIELD_SIZE:
        raise FieldOverflowError(f"{p}^{m} exceeds the field size limit {MAX_FIELD_SIZE}")
    if m == 1:
        if modulus is not None:
            raise BadParametersError("prime fields take no modulus")
        return _make_field_cached(p, 1, None)
    if modulus is None:
        modulus = first_irreducible(p, m)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise BadParametersError(f"modulus must be monic of degree {m} with entries in [0, {p})")
        if not is_irreducible(modulus, p):
            raise BadParametersError(f"modulus {list(modulus)} is reducible over F_{p}")
    return _make_field_cached(p, m, modulus)


def field_arith(op: str, a: Felt, b=None) -> Felt:
    """Dispatch one of add, sub, mul, div, neg, inv, pow."""
    if op == "add":
        return a + _same_field(a, b)
    if op == "sub":
        return a - _same_field(a, b)
    if op == "mul":
        return a * _same_field(a, b)
    if op == "div":
        return a / _same_field(a, b)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise BadParametersError(f"unknown field operation {op!r}")


def _same_field(a: Felt, b) -> Felt:
    if isinstance(b, Felt) and b.field is not a.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    return a.field(b)


def element_order(a: Felt) -> int:
    """Multiplicative order, found by stripping prime factors from q - 1."""
    if a.value == 0:
        raise ZeroElementError("zero has no multiplicative order")
    field = a.field
    order = field.q - 1
    for r in prime_factors(order):
        while order % r == 0 and field._slow_pow(a.value, order // r) == 1:
            order //= r
    return order


def primitive_elements(field: FieldSpec) -> list[Felt]:
    return [x for x in field.elements()[1:] if element_order(x) == field.q - 1]


def is_primitive(a: Felt) -> bool:
    return a.value != 0 and element_order(a) == a.field.q - 1
