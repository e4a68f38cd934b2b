"""Named rate-1/2 constructions over small fields.

* ``justesen_rate_half``: degree-2 Justesen code ``[g(D), g(D beta)]`` with
  ``g = (x - alpha)(x - alpha^2)`` and ``beta = alpha^(-s2)``.
* ``palindrome_lift``: the degree-5 generator with coefficient rows
  ``G0, G1, G2, G2, G1, G0``.
* ``theorem3_code``: the lift of ``G0 = [8 8], G1 = [5 6], G2 = [1 1]``
  over F_11.
* ``ab_family``: the same rows with the top two replaced by ``a G1, b G0``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .convcode import ConvCode, GeneratorMatrix
from .errors import (
    BadDimensionsError,
    BadFieldError,
    NotPrimitiveError,
    UnsupportedFieldSizeError,
    ZeroLeadRowError,
)
from .gf import Felt, FieldSpec, is_primitive, make_field
from .poly import Poly, poly_from_roots, poly_scale_arg

THEOREM3_ROWS = ((8, 8), (5, 6), (1, 1))


class CatastrophicCornerWarning(UserWarning):
    """ab_family(1, 1) reproduces the catastrophic palindrome code."""


@dataclass(frozen=True)
class ConstructionParams:
    field: FieldSpec
    alpha: Felt
    s2: int
    delta: int
    a: Optional[Felt] = None
    b: Optional[Felt] = None


def construction_params(field: FieldSpec, alpha, a=None, b=None) -> ConstructionParams:
    alpha = field(alpha)
    if not is_primitive(alpha):
        raise NotPrimitiveError(f"{alpha!r} is not a primitive element of {field}")
    return ConstructionParams(
        field=field,
        alpha=alpha,
        s2=math.ceil((field.q - 1) / 2),
        delta=(2 * field.q) // 9,
        a=None if a is None else field(a),
        b=None if b is None else field(b),
    )


def justesen_rate_half(field: FieldSpec, alpha) -> ConvCode:
    params = construction_params(field, alpha)
    if params.delta != 2:
        raise UnsupportedFieldSizeError(
            f"floor(2q/9) = {params.delta} for q = {field.q}; only the degree-2 case is built"
        )
    a = params.alpha
    g1 = poly_from_roots([a, a**2])
    g2 = poly_scale_arg(g1, a ** (-params.s2))
    return ConvCode(GeneratorMatrix(field, [[g1, g2]]), name=f"justesen(q={field.q}, alpha={a.rep})")


def _row(field: FieldSpec, row) -> tuple[Felt, ...]:
    return tuple(field(x) for x in row)


def palindrome_lift(G0: Sequence, G1: Sequence, G2: Sequence, field: FieldSpec | None = None) -> ConvCode:
    """(n, 1, 5) code with entry j equal to G0_j + G1_j D + G2_j D^2 + G2_j D^3 + G1_j D^4 + G0_j D^5.

    Rows are sequences of :class:`Felt`; plain ints need ``field``.
    """
    if field is None:
        first = next((x for x in (*G0, *G1, *G2) if isinstance(x, Felt)), None)
        if first is None:
            raise BadFieldError("pass field= when rows are plain integers")
        field = first.field
    r0, r1, r2 = (_row(field, r) for r in (G0, G1, G2))
    if not (len(r0) == len(r1) == len(r2)) or not r0:
        raise BadDimensionsError("coefficient rows must be nonempty and of equal length")
    if not any(r0):
        raise ZeroLeadRowError("G0 must be nonzero for the lift to have degree 5")
    entries = [Poly(field, [r0[j], r1[j], r2[j], r2[j], r1[j], r0[j]]) for j in range(len(r0))]
    return ConvCode(GeneratorMatrix(field, [entries]), name="palindrome")


def justesen_rows(code: ConvCode) -> tuple[tuple[Felt, ...], ...]:
    """(G0, G1, G2) of a degree-2 rate-1/n code."""
    mats = code.generator.coefficient_matrices()
    return tuple(mats[i][0] for i in range(3))


def lifted_justesen(field: FieldSpec, alpha) -> ConvCode:
    """Palindrome lift of the degree-2 Justesen code's coefficient rows."""
    code = palindrome_lift(*justesen_rows(justesen_rate_half(field, alpha)), field=field)
    code.name = f"lifted-justesen(q={field.q}, alpha={field(alpha).rep})"
    return code


def theorem3_code() -> ConvCode:
    F11 = make_field(11)
    code = palindrome_lift(*THEOREM3_ROWS, field=F11)
    code.name = "theorem3"
    return code


def ab_family(a, b) -> ConvCode:
    """G0 + G1 D + G2 D^2 + G2 D^3 + a G1 D^4 + b G0 D^5 over F_11.

    b = 0 drops the degree to 4 (or lower when a = 0 as well); the code's
    ``degree`` reflects that.  (1, 1) is the palindrome code itself and
    triggers :class:`CatastrophicCornerWarning`.
    """
    F11 = make_field(11)
    a, b = (_f11(x) for x in (a, b))
    G0, G1, G2 = (tuple(F11(x) for x in r) for r in THEOREM3_ROWS)
    rows = [G0, G1, G2, G2, tuple(a * x for x in G1), tuple(b * x for x in G0)]
    entries = [Poly(F11, [r[j] for r in rows]) for j in range(2)]
    if a.value == 1 and b.value == 1:
        warnings.warn(
            "ab_family(1, 1) is the catastrophic palindrome code", CatastrophicCornerWarning, stacklevel=2
        )
    return ConvCode(GeneratorMatrix(F11, [entries]), name=f"ab({a.value},{b.value})")


def _f11(x) -> Felt:
    F11 = make_field(11)
    if isinstance(x, Felt):
        if x.field is not F11:
            raise BadFieldError(f"{x!r} is not an element of F_11")
        return x
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < 11:
        raise BadFieldError(f"{x!r} is not an element of F_11")
    return F11(x)
