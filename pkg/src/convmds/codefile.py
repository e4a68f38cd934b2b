"""JSON code-description files.

::

    {
      "field": {"p": 11, "m": 1},
      "k": 1,
      "n": 2,
      "generator": [[[8, 5, 1, 1, 5, 8], [8, 6, 1, 1, 6, 8]]]
    }

Coefficient lists are ascending in D.  Over F_{p^m} (m > 1) the field
object also carries ``"modulus"`` (ascending, monic, degree m) and every
coefficient is a list of m integers in [0, p).
"""

from __future__ import annotations

import json
from pathlib import Path

from .convcode import ConvCode, make_code
from .errors import ConvMDSError, InvalidCodeFileError
from .gf import make_field


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def code_from_dict(doc) -> ConvCode:
    if not isinstance(doc, dict):
        raise InvalidCodeFileError("top level must be an object")
    missing = {"field", "k", "n", "generator"} - set(doc)
    if missing:
        raise InvalidCodeFileError(f"missing keys: {sorted(missing)}")
    fd = doc["field"]
    if not isinstance(fd, dict) or not _is_int(fd.get("p")):
        raise InvalidCodeFileError("field.p must be an integer")
    m = fd.get("m", 1)
    if not _is_int(m) or m < 1:
        raise InvalidCodeFileError("field.m must be a positive integer")
    modulus = fd.get("modulus")
    if m == 1 and modulus is not None:
        raise InvalidCodeFileError("field.modulus is only allowed when m > 1")
    if m > 1 and (not isinstance(modulus, list) or not all(_is_int(c) for c in modulus)):
        raise InvalidCodeFileError("field.modulus (list of integers) is required when m > 1")
    k, n, grid = doc["k"], doc["n"], doc["generator"]
    if not (_is_int(k) and _is_int(n)):
        raise InvalidCodeFileError("k and n must be integers")
    if not isinstance(grid, list) or len(grid) != k or any(
        not isinstance(row, list) or len(row) != n for row in grid
    ):
        raise InvalidCodeFileError(f"generator grid dimensions do not match k={k}, n={n}")
    for row in grid:
        for entry in row:
            if not isinstance(entry, list):
                raise InvalidCodeFileError("each generator entry must be a coefficient list")
    try:
        field = make_field(fd["p"], m, modulus)
        return make_code(field, k, n, grid)
    except ConvMDSError as exc:
        raise InvalidCodeFileError(str(exc)) from exc


def code_to_dict(code: ConvCode) -> dict:
    F = code.field
    field = {"p": F.p, "m": F.m}
    if F.m > 1:
        field["modulus"] = list(F.modulus)
    return {
        "field": field,
        "k": code.k,
        "n": code.n,
        "generator": [[g.to_list() for g in row] for row in code.generator.entries],
    }


def dumps_code(code: ConvCode) -> str:
    return json.dumps(code_to_dict(code), indent=2, sort_keys=True) + "\n"


def loads_code(text: str) -> ConvCode:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidCodeFileError(f"not valid JSON: {exc}") from exc
    return code_from_dict(doc)


def load_code(path) -> ConvCode:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidCodeFileError(f"cannot read {path}: {exc}") from exc
    return loads_code(text)


def save_code(code: ConvCode, path) -> None:
    Path(path).write_text(dumps_code(code))
