"""JSON encodings of scalars, matrices and the CLI input files.

Formats::

    complex      [re, im]
    BiComplex    {"z1": [re, im], "z2": [re, im]}   (also accepted: [[re, im], [re, im]])
    Hyperbolic   {"h1": r, "h2": r}
    BCMatrix     {"rows": r, "cols": c, "entries": [entry, ...]}   row-major

Matrix entries may also be given as a list of rows.  Plain numbers and
``[re, im]`` pairs are accepted wherever a BiComplex is expected.
"""

from __future__ import annotations

import json
import math
from numbers import Real
from pathlib import Path
from typing import Any, List, NamedTuple

import numpy as np

from .core import BiComplex, Hyperbolic
from .errors import ParseError
from .linalg import BCMatrix


def complex_to_json(z: complex) -> List[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _is_number(x) -> bool:
    return isinstance(x, Real) and not isinstance(x, bool)


def complex_from_json(obj: Any) -> complex:
    if _is_number(obj):
        value = complex(obj)
    elif isinstance(obj, (list, tuple)) and len(obj) == 2 and all(_is_number(x) for x in obj):
        value = complex(obj[0], obj[1])
    else:
        raise ParseError(f"expected a number or [re, im], got {obj!r}")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ParseError(f"non-finite value {obj!r}")
    return value


def bicomplex_to_json(z: BiComplex) -> dict:
    return {"z1": complex_to_json(z.z1), "z2": complex_to_json(z.z2)}


def bicomplex_from_json(obj: Any) -> BiComplex:
    if isinstance(obj, dict):
        if "z1" not in obj:
            raise ParseError(f"bicomplex object needs a 'z1' field, got keys {sorted(obj)}")
        return BiComplex(complex_from_json(obj["z1"]), complex_from_json(obj.get("z2", 0)))
    if isinstance(obj, (list, tuple)) and len(obj) == 2 and all(isinstance(x, (list, tuple)) for x in obj):
        return BiComplex(complex_from_json(obj[0]), complex_from_json(obj[1]))
    return BiComplex(complex_from_json(obj), 0)


def hyperbolic_to_json(h: Hyperbolic) -> dict:
    return {"h1": h.h1, "h2": h.h2}


def hyperbolic_from_json(obj: Any) -> Hyperbolic:
    try:
        return Hyperbolic(float(obj["h1"]), float(obj["h2"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad hyperbolic number {obj!r}") from exc


def matrix_to_json(m: BCMatrix) -> dict:
    entries = [
        [complex_to_json(m.z1[i, j]), complex_to_json(m.z2[i, j])]
        for i in range(m.rows)
        for j in range(m.cols)
    ]
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def matrix_from_json(obj: Any) -> BCMatrix:
    if not isinstance(obj, dict):
        raise ParseError(f"matrix must be an object, got {type(obj).__name__}")
    try:
        rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("matrix needs integer 'rows', 'cols' and an 'entries' list") from exc
    if rows < 0 or cols < 0 or not isinstance(entries, list):
        raise ParseError("bad matrix header")
    nested = rows > 0 and len(entries) == rows and all(isinstance(r, list) and len(r) == cols for r in entries)
    if nested:
        entries = [e for row in entries for e in row]
    if len(entries) != rows * cols:
        raise ParseError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}")
    values = [bicomplex_from_json(e) for e in entries]
    z1 = np.array([v.z1 for v in values], dtype=complex).reshape(rows, cols)
    z2 = np.array([v.z2 for v in values], dtype=complex).reshape(rows, cols)
    return BCMatrix(z1, z2)


def load_json(path) -> Any:
    try:
        with open(Path(path)) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def load_tuple(obj: Any) -> List[BCMatrix]:
    if not isinstance(obj, dict) or not isinstance(obj.get("matrices"), list):
        raise ParseError("tuple file needs a 'matrices' list")
    if not obj["matrices"]:
        raise ParseError("'matrices' is empty")
    return [matrix_from_json(m) for m in obj["matrices"]]


class PairInput(NamedTuple):
    t1: BCMatrix
    t2: BCMatrix
    queries: List[tuple]


def load_pair(obj: Any) -> PairInput:
    """Pair file: ``{"T1": M, "T2": M, "queries": [{"z1": Z, "z2": Z}, ...]}``.

    A ``"matrices"`` list of exactly two matrices may replace T1/T2.
    """
    if not isinstance(obj, dict):
        raise ParseError("pair file must be a JSON object")
    if "matrices" in obj:
        mats = obj["matrices"]
        if not isinstance(mats, list) or len(mats) != 2:
            raise ParseError(f"pair input needs exactly two matrices, got {len(mats) if isinstance(mats, list) else mats!r}")
        if "T1" in obj or "T2" in obj:
            raise ParseError("give either 'matrices' or 'T1'/'T2', not both")
        t1, t2 = (matrix_from_json(m) for m in mats)
    else:
        extra = sorted(k for k in obj if k.startswith("T") and k not in ("T1", "T2"))
        if extra:
            raise ParseError(f"pair input needs exactly two matrices, found extra {extra}")
        if "T1" not in obj or "T2" not in obj:
            raise ParseError("pair input needs 'T1' and 'T2'")
        t1, t2 = matrix_from_json(obj["T1"]), matrix_from_json(obj["T2"])
    queries = obj.get("queries", [])
    if not isinstance(queries, list):
        raise ParseError("'queries' must be a list")
    parsed = []
    for q in queries:
        if not isinstance(q, dict) or "z1" not in q or "z2" not in q:
            raise ParseError(f"query needs 'z1' and 'z2': {q!r}")
        parsed.append((bicomplex_from_json(q["z1"]), bicomplex_from_json(q["z2"])))
    return PairInput(t1, t2, parsed)


def dumps(obj: Any) -> str:
    """Stable machine-readable encoding."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False)
