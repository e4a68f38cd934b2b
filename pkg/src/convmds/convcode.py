"""Convolutional codes given by a k x n polynomial generator matrix."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    BadCoefficientError,
    BadDimensionsError,
    BadParametersError,
    FieldMismatchError,
    RankDeficientError,
    UnsupportedKError,
)
from .gf import Felt, FieldSpec
from .poly import Poly, irreducible_factor, poly_gcd

MAX_MINOR_K = 4


class GeneratorMatrix:
    """k x n grid of :class:`Poly` entries over one field."""

    def __init__(self, field: FieldSpec, entries: Sequence[Sequence[Poly]]):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise BadDimensionsError("generator needs at least one row and one column")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise BadDimensionsError("generator rows have different lengths")
        if len(rows) > n:
            raise BadDimensionsError(f"k={len(rows)} exceeds n={n}")
        for r in rows:
            for g in r:
                if g.field is not field:
                    raise FieldMismatchError(f"entry {g!r} not over {field}")
        self.field = field
        self.entries = rows
        self.k = len(rows)
        self.n = n

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        return self.field is other.field and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"GeneratorMatrix({self.field}, {[list(r) for r in self.entries]})"

    @property
    def memory(self) -> int:
        """Largest entry degree (0 for an all-constant matrix)."""
        return max((int(g.degree) for r in self.entries for g in r if not g.is_zero), default=0)

    def coefficient_matrices(self) -> list[tuple[tuple[Felt, ...], ...]]:
        """[G_0, ..., G_m] with G(D) = sum G_i D^i, each k x n."""
        return [
            tuple(tuple(g.coeff(i) for g in row) for row in self.entries)
            for i in range(self.memory + 1)
        ]

    def scaled(self, c) -> "GeneratorMatrix":
        c = self.field(c)
        return GeneratorMatrix(self.field, [[g * c for g in r] for r in self.entries])

    def full_size_minors(self) -> list[Poly]:
        """All k x k minors, columns taken in lexicographic order."""
        if self.k > MAX_MINOR_K:
            raise UnsupportedKError(f"minors limited to k <= {MAX_MINOR_K}, got k={self.k}")
        return [
            _det([[row[j] for j in cols] for row in self.entries])
            for cols in itertools.combinations(range(self.n), self.k)
        ]


def _det(m: list[list[Poly]]) -> Poly:
    # Laplace expansion along the first row
    if len(m) == 1:
        return m[0][0]
    total = Poly.zero(m[0][0].field)
    for j, a in enumerate(m[0]):
        if a.is_zero:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * _det(sub)
        total = total - term if j % 2 else total + term
    return total


class ConvCode:
    """An (n, k, delta) convolutional code, the row span of its generator."""

    def __init__(self, generator: GeneratorMatrix, name: str = ""):
        self.generator = generator
        self.field = generator.field
        self.n = generator.n
        self.k = generator.k
        minors = generator.full_size_minors()
        if all(m.is_zero for m in minors):
            raise RankDeficientError("generator does not have full row rank")
        self._minors = minors
        self.degree = max(int(m.degree) for m in minors if not m.is_zero)
        self.name = name

    @classmethod
    def from_polys(cls, rows: Sequence[Sequence[Poly]], name: str = "") -> "ConvCode":
        field = rows[0][0].field
        return cls(GeneratorMatrix(field, rows), name=name)

    @property
    def delta(self) -> int:
        return self.degree

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.degree)

    @property
    def minors(self) -> list[Poly]:
        return list(self._minors)

    def entries(self) -> tuple[tuple[Poly, ...], ...]:
        return self.generator.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConvCode):
            return NotImplemented
        return self.generator == other.generator

    def __hash__(self) -> int:
        return hash(self.generator)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<ConvCode{label} ({self.n},{self.k},{self.degree}) over {self.field}>"


def make_code(field: FieldSpec, k: int, n: int, entries, name: str = "") -> ConvCode:
    """Build a code from a k x n grid of ascending coefficient lists.

    Coefficients are ints in [0, p) for prime fields; for F_{p^m} each one
    is a length-m list of ints in [0, p).
    """
    if k < 1 or n < 1 or k > n:
        raise BadDimensionsError(f"need 1 <= k <= n, got k={k}, n={n}")
    if len(entries) != k or any(len(row) != n for row in entries):
        raise BadDimensionsError(f"generator grid is not {k} x {n}")
    rows = []
    for row in entries:
        rows.append([Poly(field, [_check_coeff(field, c) for c in coeffs]) for coeffs in row])
    return ConvCode(GeneratorMatrix(field, rows), name=name)


def _check_coeff(field: FieldSpec, c):
    if isinstance(c, Felt):
        return field(c)
    if field.m == 1:
        if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < field.p:
            raise BadCoefficientError(f"coefficient {c!r} is not an integer in [0, {field.p})")
        return c
    if (
        not isinstance(c, (list, tuple))
        or len(c) != field.m
        or any(isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < field.p for x in c)
    ):
        raise BadCoefficientError(
            f"coefficient {c!r} is not a list of {field.m} integers in [0, {field.p})"
        )
    return tuple(c)


def code_degree(code: ConvCode) -> int:
    return code.degree


def singleton_bound(n: int, k: int, delta: int) -> int:
    """(n - k)(floor(delta / k) + 1) + delta + 1."""
    if not (1 <= k <= n) or delta < 0:
        raise BadParametersError(f"need 1 <= k <= n and delta >= 0, got ({n}, {k}, {delta})")
    return (n - k) * (delta // k + 1) + delta + 1


def encode(code: ConvCode, u) -> tuple[Poly, ...]:
    """v(D) = u(D) G(D) for a length-k vector u (a bare Poly when k = 1)."""
    if isinstance(u, Poly):
        u = (u,)
    u = tuple(u)
    if len(u) != code.k:
        raise BadDimensionsError(f"input has {len(u)} entries, code has k={code.k}")
    for x in u:
        if x.field is not code.field:
            raise FieldMismatchError(f"input {x!r} not over {code.field}")
    G = code.generator.entries
    out = []
    for j in range(code.n):
        acc = Poly.zero(code.field)
        for i in range(code.k):
            acc = acc + u[i] * G[i][j]
        out.append(acc)
    return tuple(out)


def codeword_weight(v: Sequence[Poly]) -> int:
    """Nonzero coefficients summed over all entries and all powers of D."""
    return sum(g.weight() for g in v)


@dataclass(frozen=True)
class CapabilityReport:
    d_free: int
    detect_s: int
    correct_t: int


def error_capabilities(d_free: int) -> CapabilityReport:
    if d_free < 1:
        raise BadParametersError(f"free distance must be positive, got {d_free}")
    return CapabilityReport(d_free, d_free - 1, (d_free - 1) // 2)


@dataclass(frozen=True)
class CatastrophicityReport:
    minor_gcd: Poly
    is_catastrophic: bool
    witness_factor: Optional[Poly] = None


def is_catastrophic(code: ConvCode) -> CatastrophicityReport:
    """Catastrophic iff the gcd of the full-size minors is not a constant."""
    g = Poly.zero(code.field)
    for m in code.minors:
        if not m.is_zero:
            g = poly_gcd(g, m)
    if g.degree >= 1:
        return CatastrophicityReport(g, True, irreducible_factor(g))
    return CatastrophicityReport(g, False, None)
