"""JSON document formats for matrices and parameter tuples.

MatrixDocument: {"kind": "unitary"|"hermitian"|"general", "re": [[...]x3],
"im": [[...]x3]} with row-major 3x3 float arrays.  ParamsDocument: the nine
named angle fields in radians; core-only documents omit phi/theta/varphi.
Floats are emitted with 17 significant digits so serialize -> parse is
bit-exact and a second serialize reproduces identical text.
"""
from __future__ import annotations

import json

import numpy as np

from .parametrization import UnitaryParams
from .rotations import RotationAngles

MATRIX_KINDS = ("unitary", "hermitian", "general")
PARAM_FIELDS = ("phi", "theta", "varphi", "chi", "mu", "alpha1", "alpha2", "alpha3", "beta2")
CORE_FIELDS = PARAM_FIELDS[3:]


class MalformedDocumentError(ValueError):
    """Document fails to parse or violates the layout contract."""


def _fmt(x: float) -> str:
    return "%.17g" % float(x)


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocumentError(f"not valid JSON (line {exc.lineno}): {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise MalformedDocumentError("top-level value must be an object")
    return doc


def _check_grid(doc: dict, field: str) -> list:
    if field not in doc:
        raise MalformedDocumentError(f"missing field '{field}'")
    grid = doc[field]
    if not (isinstance(grid, list) and len(grid) == 3):
        raise MalformedDocumentError(f"field '{field}' must be a 3x3 array (3 rows)")
    for i, row in enumerate(grid):
        if not (isinstance(row, list) and len(row) == 3):
            raise MalformedDocumentError(f"field '{field}' row {i} must have 3 entries")
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise MalformedDocumentError(f"field '{field}' entry ({i},{j}) is not numeric")
            if not np.isfinite(x):
                raise MalformedDocumentError(f"field '{field}' entry ({i},{j}) is not finite")
    return grid


def parse_matrix(text: str) -> np.ndarray:
    """Parse a MatrixDocument into a complex 3x3 array."""
    doc = _load_json(text)
    kind = doc.get("kind")
    if kind not in MATRIX_KINDS:
        raise MalformedDocumentError(
            f"field 'kind' must be one of {MATRIX_KINDS}, got {kind!r}"
        )
    re = _check_grid(doc, "re")
    im = _check_grid(doc, "im")
    return np.array(re, dtype=float) + 1j * np.array(im, dtype=float)


def serialize_matrix(m, kind: str = "general") -> str:
    """Serialize a 3x3 complex matrix; round-trips bit-exactly."""
    if kind not in MATRIX_KINDS:
        raise MalformedDocumentError(f"unknown matrix kind {kind!r}")
    m = np.asarray(m, dtype=complex).reshape(3, 3)
    rows_re = [
        "[" + ", ".join(_fmt(m[i, j].real) for j in range(3)) + "]" for i in range(3)
    ]
    rows_im = [
        "[" + ", ".join(_fmt(m[i, j].imag) for j in range(3)) + "]" for i in range(3)
    ]
    return (
        "{\n"
        f'  "kind": "{kind}",\n'
        '  "re": [' + ",\n         ".join(rows_re) + "],\n"
        '  "im": [' + ",\n         ".join(rows_im) + "]\n"
        "}\n"
    )


def parse_params(text: str) -> UnitaryParams:
    """Parse a ParamsDocument; missing rotation fields default to zero."""
    doc = _load_json(text)
    values = {}
    for field in PARAM_FIELDS:
        if field in doc:
            x = doc[field]
            if isinstance(x, bool) or not isinstance(x, (int, float)) or not np.isfinite(x):
                raise MalformedDocumentError(f"field '{field}' is not a finite number")
            values[field] = float(x)
        elif field in CORE_FIELDS:
            raise MalformedDocumentError(f"missing field '{field}'")
        else:
            values[field] = 0.0
    unknown = set(doc) - set(PARAM_FIELDS)
    if unknown:
        raise MalformedDocumentError(f"unknown fields: {sorted(unknown)}")
    return UnitaryParams(
        rotation=RotationAngles(values["phi"], values["theta"], values["varphi"]),
        chi=values["chi"],
        mu=values["mu"],
        alpha1=values["alpha1"],
        alpha2=values["alpha2"],
        alpha3=values["alpha3"],
        beta2=values["beta2"],
    )


def serialize_params(p: UnitaryParams, core_only: bool = False) -> str:
    """Serialize a parameter tuple; round-trips bit-exactly."""
    d = p.as_dict()
    fields = CORE_FIELDS if core_only else PARAM_FIELDS
    body = ",\n".join(f'  "{k}": {_fmt(d[k])}' for k in fields)
    return "{\n" + body + "\n}\n"
