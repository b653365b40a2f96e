"""Analysis documents: a JSON container for one system, named states and options.

Matrices are row-major nested arrays; every entry is either a plain number
(real) or a two-element array [re, im].  The grammar lives in
docs/FORMAT.md.  Hermiticity, trace and positivity are validated on load so
that commands operate on known-good inputs.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field

import numpy as np

from .config import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    DEFAULT_TOLERANCES,
    DEFAULT_WORD_LENGTH,
    Tolerances,
)
from .errors import ValidationError
from .lie_algebra import ControlSystem
from .states import validate_density_matrix

__all__ = [
    "AnalysisDocument",
    "DocumentOptions",
    "ParseError",
    "parse_document",
    "serialize_document",
]

_TOLERANCE_FIELDS = tuple(f.name for f in dataclasses.fields(Tolerances))


class ParseError(ValueError):
    """Malformed document text."""


@dataclass(frozen=True)
class DocumentOptions:
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    word_length: int = DEFAULT_WORD_LENGTH
    tolerances: Tolerances = DEFAULT_TOLERANCES


@dataclass(frozen=True)
class AnalysisDocument:
    system: ControlSystem | None = None
    states: dict[str, np.ndarray] = field(default_factory=dict)
    options: DocumentOptions = DocumentOptions()

    @property
    def dim(self) -> int | None:
        if self.system is not None:
            return self.system.dim
        for rho in self.states.values():
            return rho.shape[0]
        return None


def _entry_to_complex(entry, where: str) -> complex:
    if isinstance(entry, (int, float)) and not isinstance(entry, bool):
        return complex(entry)
    if (isinstance(entry, list) and len(entry) == 2
            and all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in entry)):
        return complex(entry[0], entry[1])
    raise ParseError(f"{where}: matrix entries must be numbers or [re, im] pairs, got {entry!r}")


def _parse_matrix(rows, where: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{where}: expected a nested array of rows")
    n = len(rows)
    out = np.zeros((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"{where}: row {i} has length {len(row)}, expected {n} (square matrix)")
        for j, entry in enumerate(row):
            out[i, j] = _entry_to_complex(entry, where)
    return out


def _reject_duplicates(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ParseError(f"duplicate name {key!r}")
        seen.add(key)
    return dict(pairs)


def _parse_options(raw, tol: Tolerances) -> DocumentOptions:
    if not isinstance(raw, dict):
        raise ParseError("options must be an object")
    known = {"seed", "budget", "word_length", "tolerances"}
    unknown = set(raw) - known
    if unknown:
        raise ParseError(f"unknown option(s): {sorted(unknown)}")
    overrides = {}
    raw_tols = raw.get("tolerances", {})
    if not isinstance(raw_tols, dict):
        raise ParseError("options.tolerances must be an object")
    for key, value in raw_tols.items():
        if key not in _TOLERANCE_FIELDS:
            raise ParseError(f"unknown tolerance {key!r}; known: {list(_TOLERANCE_FIELDS)}")
        overrides[key] = float(value)
    return DocumentOptions(
        seed=int(raw.get("seed", DEFAULT_SEED)),
        budget=int(raw.get("budget", DEFAULT_BUDGET)),
        word_length=int(raw.get("word_length", DEFAULT_WORD_LENGTH)),
        tolerances=dataclasses.replace(tol, **overrides),
    )


def parse_document(text: str) -> AnalysisDocument:
    """Parse and validate a document; raises ParseError or ValidationError."""
    try:
        raw = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ParseError("document root must be an object")
    unknown = set(raw) - {"system", "states", "options"}
    if unknown:
        raise ParseError(f"unknown top-level key(s): {sorted(unknown)}")

    options = _parse_options(raw.get("options", {}), DEFAULT_TOLERANCES)

    system = None
    if "system" in raw:
        block = raw["system"]
        if not isinstance(block, dict) or "h0" not in block:
            raise ParseError("system must be an object with an h0 matrix")
        unknown = set(block) - {"h0", "controls"}
        if unknown:
            raise ParseError(f"unknown system key(s): {sorted(unknown)}")
        h0 = _parse_matrix(block["h0"], "system.h0")
        controls = tuple(
            _parse_matrix(m, f"system.controls[{k}]")
            for k, m in enumerate(block.get("controls", [])))
        system = ControlSystem(h0=h0, controls=controls)

    states: dict[str, np.ndarray] = {}
    for name, rows in raw.get("states", {}).items():
        rho = _parse_matrix(rows, f"states.{name}")
        states[name] = validate_density_matrix(rho, tol=options.tolerances, name=name)

    dims = {m.shape[0] for m in states.values()}
    if system is not None:
        dims.add(system.dim)
    if len(dims) > 1:
        raise ValidationError(f"all matrices must share one dimension, found {sorted(dims)}")

    return AnalysisDocument(system=system, states=states, options=options)


def _matrix_to_rows(m: np.ndarray) -> list[list[list[float]]]:
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, dtype=complex)]


def serialize_document(doc: AnalysisDocument) -> str:
    """Document text whose parse equals ``doc`` up to float round-trip."""
    out: dict = {}
    if doc.system is not None:
        out["system"] = {
            "h0": _matrix_to_rows(doc.system.h0),
            "controls": [_matrix_to_rows(h) for h in doc.system.controls],
        }
    if doc.states:
        out["states"] = {name: _matrix_to_rows(rho) for name, rho in doc.states.items()}
    out["options"] = {
        "seed": doc.options.seed,
        "budget": doc.options.budget,
        "word_length": doc.options.word_length,
        "tolerances": dataclasses.asdict(doc.options.tolerances),
    }
    return json.dumps(out, indent=2)
