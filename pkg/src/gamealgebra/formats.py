"""JSON file layouts.

- game:   ``{"players": n, "values": [v_0, ..., v_{2^n - 1}]}``
- vector: ``{"values": [[re, im], ...]}``
- matrix: ``{"rows": [[[re, im], ...], ...]}`` (row-major)

Plain numbers are accepted wherever a complex ``[re, im]`` pair is; output
always writes complex numbers as pairs.
"""

from __future__ import annotations

import json
from numbers import Real
from pathlib import Path

import numpy as np

from .core import GameValuation
from .errors import AlgebraError, FormatError


def load_json(path) -> object:
    with open(Path(path), encoding="utf-8") as fh:
        return json.load(fh)


def _number(x) -> complex:
    if isinstance(x, bool):
        raise FormatError(f"expected a number, got {x!r}")
    if isinstance(x, Real):
        return complex(float(x))
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(
        isinstance(p, Real) and not isinstance(p, bool) for p in x
    ):
        return complex(float(x[0]), float(x[1]))
    raise FormatError(f"expected a number or an [re, im] pair, got {x!r}")


def _numbers(seq, what: str) -> np.ndarray:
    if not isinstance(seq, list):
        raise FormatError(f"{what} must be a JSON array")
    out = np.array([_number(x) for x in seq], dtype=complex)
    return out


def _field(obj, key: str, what: str):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{what} file needs a {key!r} field")
    return obj[key]


def parse_game(obj) -> GameValuation:
    n = _field(obj, "players", "game")
    if not isinstance(n, int) or isinstance(n, bool):
        raise FormatError(f"'players' must be an integer, got {n!r}")
    values = _numbers(_field(obj, "values", "game"), "'values'")
    if np.all(values.imag == 0):
        values = values.real
    return GameValuation(n, values)


def parse_vector(obj) -> np.ndarray:
    return _numbers(_field(obj, "values", "vector"), "'values'")


def parse_matrix(obj) -> np.ndarray:
    rows = _field(obj, "rows", "matrix")
    if not isinstance(rows, list):
        raise FormatError("'rows' must be a JSON array")
    parsed = [_numbers(r, "matrix row") for r in rows]
    if any(len(r) != len(parsed) for r in parsed):
        raise FormatError("matrix must be square with rows of equal length")
    if not parsed:
        raise FormatError("matrix is empty")
    return np.array(parsed, dtype=complex)


def real_part_if_real(a: np.ndarray) -> np.ndarray:
    return a.real if np.all(a.imag == 0) else a


# -- encoding -----------------------------------------------------------------

def encode_real(x: float, precision: int) -> float:
    x = round(float(x), precision)
    return x + 0.0  # folds -0.0 into 0.0


def encode_complex(z: complex, precision: int) -> list[float]:
    z = complex(z)
    return [encode_real(z.real, precision), encode_real(z.imag, precision)]


def encode_vector(v, precision: int) -> list[list[float]]:
    return [encode_complex(z, precision) for z in np.asarray(v).ravel()]


def encode_reals(v, precision: int) -> list[float]:
    return [encode_real(x, precision) for x in np.asarray(v, dtype=float).ravel()]


def encode_matrix(a, precision: int) -> dict:
    return {"rows": [encode_vector(row, precision) for row in np.asarray(a)]}


def encode_game(v: GameValuation, precision: int) -> dict:
    values = v.values
    if np.iscomplexobj(values):
        return {"players": v.n, "values": encode_vector(values, precision)}
    return {"players": v.n, "values": encode_reals(values, precision)}


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def error_object(exc: BaseException) -> dict:
    kind = exc.kind if isinstance(exc, AlgebraError) else "internal"
    return {"error": kind, "detail": str(exc)}
