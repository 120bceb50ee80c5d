"""JSON files for pure states and density matrices.

Pure state::

    {"dimA": 2, "dimB": 2,
     "amplitudes": [{"i": 1, "j": 1, "re": 0.7071, "im": 0.0}, ...]}

Density matrix (upper triangle only, Hermitian completion implied)::

    {"dimA": 3, "dimB": 3, "dim": 9,
     "entries": [{"row": 1, "col": 1, "re": 0.1111, "im": 0.0}, ...]}

Indices are 1-based.  ``dimA``/``dimB`` are optional for density files whose
``dim`` is a perfect square; the split is then taken to be even.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import NormalizationError, StateFormatError
from .states import DensityMatrix, PureState


def state_to_dict(ps: PureState, include_zeros: bool = False) -> dict:
    amps = []
    for (i, j), v in np.ndenumerate(ps.coeffs):
        if v != 0 or include_zeros:
            amps.append({"i": i + 1, "j": j + 1, "re": float(v.real), "im": float(v.imag)})
    return {"dimA": ps.dim_a, "dimB": ps.dim_b, "amplitudes": amps}


def density_to_dict(rho: DensityMatrix) -> dict:
    m = rho.matrix
    entries = []
    for r in range(rho.dim):
        for c in range(r, rho.dim):
            v = m[r, c]
            if v != 0:
                entries.append({"row": r + 1, "col": c + 1, "re": float(v.real), "im": float(v.imag)})
    return {"dimA": rho.dim_a, "dimB": rho.dim_b, "dim": rho.dim, "entries": entries}


def to_dict(obj) -> dict:
    if isinstance(obj, PureState):
        return state_to_dict(obj)
    if isinstance(obj, DensityMatrix):
        return density_to_dict(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _int_field(doc, key):
    try:
        v = doc[key]
    except KeyError:
        raise StateFormatError(f"missing field {key!r}") from None
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise StateFormatError(f"field {key!r} must be a positive integer, got {v!r}")
    return v


def _complex(rec) -> complex:
    try:
        return complex(float(rec["re"]), float(rec.get("im", 0.0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise StateFormatError(f"bad amplitude record {rec!r}") from exc


def state_from_dict(doc: dict, normalize: bool = False) -> PureState:
    da, db = _int_field(doc, "dimA"), _int_field(doc, "dimB")
    a = np.zeros((da, db), dtype=complex)
    for rec in doc.get("amplitudes", []):
        try:
            i, j = int(rec["i"]), int(rec["j"])
        except (KeyError, TypeError, ValueError) as exc:
            raise StateFormatError(f"bad amplitude record {rec!r}") from exc
        if not (1 <= i <= da and 1 <= j <= db):
            raise StateFormatError(f"index ({i}, {j}) out of range for {da}x{db}")
        a[i - 1, j - 1] += _complex(rec)
    if normalize:
        return PureState.normalized(a)
    return PureState(a)


def density_from_dict(doc: dict, normalize: bool = False) -> DensityMatrix:
    n = _int_field(doc, "dim")
    if "dimA" in doc or "dimB" in doc:
        da, db = _int_field(doc, "dimA"), _int_field(doc, "dimB")
    else:
        root = math.isqrt(n)
        if root * root != n:
            raise StateFormatError(f"dim {n} is not a square; give dimA and dimB")
        da = db = root
    if da * db != n:
        raise StateFormatError(f"dimA*dimB = {da * db} does not match dim = {n}")
    m = np.zeros((n, n), dtype=complex)
    for rec in doc.get("entries", []):
        try:
            r, c = int(rec["row"]), int(rec["col"])
        except (KeyError, TypeError, ValueError) as exc:
            raise StateFormatError(f"bad entry record {rec!r}") from exc
        if not (1 <= r <= c <= n):
            raise StateFormatError(f"entry ({r}, {c}) is not in the upper triangle of {n}x{n}")
        v = _complex(rec)
        if r == c and abs(v.imag) > 1e-12:
            raise StateFormatError(f"diagonal entry ({r}, {r}) has imaginary part {v.imag}")
        m[r - 1, c - 1] = v
        m[c - 1, r - 1] = v.conjugate()
    if normalize:
        tr = np.trace(m).real
        if tr <= 0:
            raise NormalizationError(f"cannot normalize a matrix with trace {tr}")
        m = m / tr
    return DensityMatrix(m, da, db)


def from_dict(doc: dict, normalize: bool = False):
    """Parse either file kind; the presence of ``amplitudes`` or ``entries`` decides."""
    if not isinstance(doc, dict):
        raise StateFormatError("top-level JSON value must be an object")
    if "amplitudes" in doc:
        return state_from_dict(doc, normalize)
    if "entries" in doc:
        return density_from_dict(doc, normalize)
    raise StateFormatError("document has neither 'amplitudes' nor 'entries'")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), indent=1)


def loads(text: str, normalize: bool = False):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"invalid JSON: {exc}") from exc
    return from_dict(doc, normalize)


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj) + "\n")


def load_state(path, normalize: bool = False):
    """Read a :class:`PureState` or :class:`DensityMatrix` from ``path``."""
    return loads(Path(path).read_text(), normalize)
