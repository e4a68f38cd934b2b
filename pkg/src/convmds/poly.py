"""Dense univariate polynomials over a FieldSpec.

Coefficients are ascending: ``coeffs[i]`` multiplies D**i.  Values are
immutable and always normalised (no trailing zero coefficients); the zero
polynomial has degree ``NEG_INF``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import (
    BadParametersError,
    BothZeroError,
    DivisionByZeroError,
    FieldMismatchError,
    ZeroScaleError,
)
from .gf import Felt, FieldSpec

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "_c")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        self.field = field
        c = [field(x).value for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, field: FieldSpec, values: Sequence[int]) -> "Poly":
        # values must already be canonical indices
        f = object.__new__(cls)
        f.field = field
        c = list(values)
        while c and c[-1] == 0:
            c.pop()
        f._c = tuple(c)
        return f

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls._raw(field, ())

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, coeff=1) -> "Poly":
        return cls(field, [0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[Felt, ...]:
        return tuple(Felt(self.field, v) for v in self._c)

    @property
    def values(self) -> tuple[int, ...]:
        """Canonical indices of the coefficients."""
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> Felt:
        return Felt(self.field, self._c[-1]) if self._c else self.field.zero

    def coeff(self, i: int) -> Felt:
        return Felt(self.field, self._c[i] if 0 <= i < len(self._c) else 0)

    def weight(self) -> int:
        return sum(1 for v in self._c if v)

    def monic(self) -> "Poly":
        if not self._c:
            return self
        inv = self.field.inv(self._c[-1])
        return Poly._raw(self.field, [self.field.mul(v, inv) for v in self._c])

    def reverse(self, degree: int | None = None) -> "Poly":
        """``D**degree * f(1/D)``; degree defaults to deg f."""
        if degree is None:
            degree = len(self._c) - 1
        if len(self._c) - 1 > degree:
            raise BadParametersError("reversal degree below polynomial degree")
        padded = list(self._c) + [0] * (degree + 1 - len(self._c))
        return Poly._raw(self.field, padded[::-1])

    # -- arithmetic -------------------------------------------------------

    def _other(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (Felt, int)):
            return Poly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        F = self.field
        return Poly._raw(F, [F.add(a, b) for a, b in itertools.zip_longest(self._c, g._c, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [self.field.neg(a) for a in self._c])

    def __sub__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        return self + (-g)

    def __rsub__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        return g - self

    def __mul__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        if not self._c or not g._c:
            return Poly.zero(self.field)
        F = self.field
        out = [0] * (len(self._c) + len(g._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(g._c):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly._raw(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        g = self._other(other)
        if g is NotImplemented:
            return g
        return poly_divmod(self, g)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x) -> Felt:
        return poly_eval(self, x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.field.q, self._c))

    def __repr__(self) -> str:
        if not self._c:
            return "Poly(0)"
        terms = []
        for i, v in enumerate(self._c):
            if not v:
                continue
            c = repr(Felt(self.field, v).rep)
            terms.append(c if i == 0 else f"{c}*D^{i}" if i > 1 else f"{c}*D")
        return "Poly(" + " + ".join(terms) + ")"

    def to_list(self) -> list:
        """Ascending coefficient reps (ints, or m-tuples as lists)."""
        reps = [Felt(self.field, v).rep for v in self._c]
        return [list(r) if isinstance(r, tuple) else r for r in reps]


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if f.field is not g.field:
        raise FieldMismatchError(f"{f.field} vs {g.field}")
    if g.is_zero:
        raise DivisionByZeroError("polynomial division by zero")
    F = f.field
    rem = list(f._c)
    dg = len(g._c) - 1
    inv_lead = F.inv(g._c[-1])
    quot = [0] * max(len(rem) - dg, 0)
    while len(rem) - 1 >= dg and rem:
        c = F.mul(rem[-1], inv_lead)
        shift = len(rem) - 1 - dg
        quot[shift] = c
        for i, b in enumerate(g._c):
            rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b))
        while rem and rem[-1] == 0:
            rem.pop()
    return Poly._raw(F, quot), Poly._raw(F, rem)


def poly_arith(op: str, f: Poly, g: Poly) -> Poly:
    if f.field is not g.field:
        raise FieldMismatchError(f"{f.field} vs {g.field}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise BadParametersError(f"unknown polynomial operation {op!r}")


def poly_eval(f: Poly, x) -> Felt:
    x = f.field(x)
    F = f.field
    acc = 0
    for v in reversed(f._c):
        acc = F.add(F.mul(acc, x.value), v)
    return Felt(F, acc)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm."""
    if f.field is not g.field:
        raise FieldMismatchError(f"{f.field} vs {g.field}")
    if f.is_zero and g.is_zero:
        raise BothZeroError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_scale_arg(f: Poly, beta) -> Poly:
    """``f(beta * x)``: coefficient i times beta**i."""
    beta = f.field(beta)
    if not beta:
        raise ZeroScaleError("scaling the argument by zero collapses the polynomial")
    F = f.field
    out, b = [], 1
    for v in f._c:
        out.append(F.mul(v, b))
        b = F.mul(b, beta.value)
    return Poly._raw(F, out)


def poly_from_roots(roots: Sequence[Felt], field: FieldSpec | None = None) -> Poly:
    """Monic ``prod (x - r)``; the empty product is 1 (needs ``field``)."""
    if field is None:
        if not roots:
            raise BadParametersError("field required for an empty root list")
        field = roots[0].field
    out = Poly(field, [1])
    for r in roots:
        if not isinstance(r, Felt):
            r = field(r)
        elif r.field is not field:
            raise FieldMismatchError(f"root {r!r} not in {field}")
        out = out * Poly._raw(field, [field.neg(r.value), 1])
    return out


def roots(f: Poly) -> list[Felt]:
    """All roots of f in its field, ascending (exhaustive evaluation)."""
    return [x for x in f.field.elements() if not poly_eval(f, x)]


def monic_polys(field: FieldSpec, degree: int) -> Iterable[Poly]:
    for low in itertools.product(range(field.q), repeat=degree):
        yield Poly._raw(field, list(reversed(low)) + [1])


def irreducible_factor(f: Poly) -> Poly:
    """A monic irreducible divisor of a non-constant f.

    Linear factors come first (root search), then trial division by monic
    polynomials of increasing degree up to deg/2; failing both, f itself
    is irreducible.
    """
    if f.is_zero or f.degree < 1:
        raise BadParametersError("need a non-constant polynomial")
    F = f.field
    for r in roots(f):
        return Poly._raw(F, [F.neg(r.value), 1])
    for d in range(2, int(f.degree) // 2 + 1):
        for g in monic_polys(F, d):
            if poly_divmod(f, g)[1].is_zero:
                return g
    return f.monic()
