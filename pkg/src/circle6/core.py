"""Fixed-point weight datasets: data model, validation and JSON I/O.

A dataset records an almost complex circle action on a closed 2n-manifold
through its isolated fixed points only: each point carries the multiset of
n nonzero integer rotation weights of the action on the tangent space.
Everything downstream (localized Chern numbers, family matching, pairing
multigraphs, connect-sum bookkeeping) consumes this object.

The on-disk form is a JSON document::

    {
      "n": 3,
      "fixed_points": [
        {"name": "p1", "weights": [1, 2, -3]},
        {"name": "p2", "weights": [-1, -2, 3]}
      ],
      "homology": {"simply_connected": true, "b2": 0, "b3": 0,
                   "torsion_free": true},          // optional
      "labels": {"note": "standard sphere"}        // optional, str -> str
    }

All arithmetic on weights is exact: weights are arbitrary-precision ints
and rational values are `fractions.Fraction` (always lowest terms, positive
denominator), rendered as "p/q" strings in JSON output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import IO, Iterable, Mapping

from .errors import ParseError, ValidationError

# Exact rational scalar used everywhere a localization sum can be fractional.
RationalScalar = Fraction

# Ordered weight tuple at one fixed point; treated as a multiset downstream.
WeightVector = tuple[int, ...]


@dataclass(frozen=True)
class FixedPoint:
    """A named fixed point with its weight vector."""

    name: str
    weights: WeightVector

    def negatives(self) -> int:
        """Number of negative weights at this point."""
        return sum(1 for w in self.weights if isinstance(w, int) and w < 0)


@dataclass(frozen=True)
class HomologyProfile:
    """Betti/torsion bookkeeping for a simply connected closed 6-manifold."""

    simply_connected: bool
    b2: int
    b3: int
    torsion_free: bool

    def euler(self) -> int:
        """Euler characteristic 2 + 2*b2 - b3 (Poincare duality, b1 = 0)."""
        return 2 + 2 * self.b2 - self.b3


#: Profile of the 6-sphere.
SPHERE_PROFILE = HomologyProfile(simply_connected=True, b2=0, b3=0, torsion_free=True)


@dataclass(frozen=True)
class FixedPointData:
    """A full dataset: half-dimension, named fixed points, optional extras.

    Instances are immutable values; every operation in this package is a
    pure function of its inputs, so datasets may be shared freely between
    threads. Construction does not validate: run :func:`validate` (or go
    through :func:`load`, which refuses invalid documents).
    """

    n: int
    points: tuple[FixedPoint, ...]
    homology: HomologyProfile | None = None
    labels: Mapping[str, str] = field(default_factory=dict)

    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.points)

    def weight_rows(self) -> tuple[WeightVector, ...]:
        return tuple(p.weights for p in self.points)


def dataset(
    n: int,
    points: Iterable[tuple[str, Iterable[int]]],
    homology: HomologyProfile | None = None,
    labels: Mapping[str, str] | None = None,
) -> FixedPointData:
    """Convenience builder from (name, weights) pairs."""
    pts = tuple(FixedPoint(name, tuple(ws)) for name, ws in points)
    return FixedPointData(n=n, points=pts, homology=homology, labels=dict(labels or {}))


def negate_all(data: FixedPointData) -> FixedPointData:
    """The same dataset with every weight negated (the reversed action)."""
    pts = tuple(FixedPoint(p.name, tuple(-w for w in p.weights)) for p in data.points)
    return FixedPointData(data.n, pts, data.homology, dict(data.labels))


def disjoint_union(
    d1: FixedPointData,
    d2: FixedPointData,
    prefixes: tuple[str, str] = ("m1.", "m2."),
) -> FixedPointData:
    """Concatenate two datasets of equal n, prefixing names to keep them unique.

    Carries neither homology nor labels; composition rules that know what
    the union means (e.g. the fiber connect sum) attach their own.
    """
    if d1.n != d2.n:
        raise ValueError(f"cannot union datasets with n={d1.n} and n={d2.n}")
    pts = tuple(FixedPoint(prefixes[0] + p.name, p.weights) for p in d1.points)
    pts += tuple(FixedPoint(prefixes[1] + p.name, p.weights) for p in d2.points)
    return FixedPointData(d1.n, pts)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    """One broken invariant: a stable rule id plus the offending location."""

    rule: str
    point: str | None
    message: str

    def __str__(self) -> str:
        where = f" at {self.point}" if self.point is not None else ""
        return f"{self.rule}{where}: {self.message}"


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def validate(data: FixedPointData) -> list[Violation]:
    """Check every dataset invariant; return all violations (empty = valid).

    Violations are data, not failures: the function never raises. The same
    rules apply regardless of point order, so permuting points only permutes
    the report.
    """
    out: list[Violation] = []
    if not _is_int(data.n) or data.n < 1:
        out.append(Violation("BadHalfDimension", None, f"n must be a positive integer, got {data.n!r}"))
    seen: set[str] = set()
    for p in data.points:
        if not isinstance(p.name, str) or not p.name:
            out.append(Violation("EmptyName", p.name if isinstance(p.name, str) else None,
                                 "point names must be nonempty strings"))
            continue
        if p.name in seen:
            out.append(Violation("DuplicateName", p.name, "point names must be unique"))
        seen.add(p.name)
        bad_type = [w for w in p.weights if not _is_int(w)]
        if bad_type:
            out.append(Violation("NonIntegerWeight", p.name, f"weights must be integers, got {bad_type!r}"))
            continue
        if _is_int(data.n) and data.n >= 1 and len(p.weights) != data.n:
            out.append(Violation("WrongArity", p.name,
                                 f"expected {data.n} weights, got {len(p.weights)}"))
        if any(w == 0 for w in p.weights):
            out.append(Violation("ZeroWeight", p.name, "weights must be nonzero"))
    h = data.homology
    if h is not None:
        if not _is_int(h.b2) or h.b2 < 0 or not _is_int(h.b3) or h.b3 < 0:
            out.append(Violation("NegativeBetti", None, f"b2={h.b2!r}, b3={h.b3!r} must be nonnegative integers"))
        elif h.b3 % 2 != 0:
            out.append(Violation("OddB3", None, f"b3 must be even, got {h.b3}"))
        elif h.simply_connected and h.torsion_free and h.euler() != len(data.points):
            out.append(Violation(
                "EulerMismatch", None,
                f"2 + 2*b2 - b3 = {h.euler()} but the dataset has {len(data.points)} fixed points"))
    return out


# ---------------------------------------------------------------------------
# JSON I/O
# ---------------------------------------------------------------------------

def format_rational(x: Fraction | int) -> str:
    """Render an exact rational as "p/q" (integers as "p/1")."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse an integer or "p/q" literal. Float syntax is rejected on purpose."""
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ParseError(f"not an exact rational: {text!r}") from None
        if d == 0:
            raise ParseError(f"zero denominator: {text!r}")
        return Fraction(n, d)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ParseError(f"not an exact integer or p/q rational: {text!r}") from None


def document(data: FixedPointData) -> dict:
    """The JSON-ready dict for a dataset (inverse of the parser)."""
    doc: dict = {
        "n": data.n,
        "fixed_points": [{"name": p.name, "weights": list(p.weights)} for p in data.points],
    }
    if data.homology is not None:
        h = data.homology
        doc["homology"] = {
            "simply_connected": h.simply_connected,
            "b2": h.b2,
            "b3": h.b3,
            "torsion_free": h.torsion_free,
        }
    if data.labels:
        doc["labels"] = dict(data.labels)
    return doc


def save(data: FixedPointData, target: str | Path | IO[str]) -> None:
    """Write the dataset document as UTF-8 JSON (deterministic key order)."""
    text = json.dumps(document(data), sort_keys=True, indent=2) + "\n"
    if hasattr(target, "write"):
        target.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")


_TOP_KEYS = {"n", "fixed_points", "homology", "labels"}
_HOMOLOGY_KEYS = {"simply_connected", "b2", "b3", "torsion_free"}


def _parse_document(doc) -> FixedPointData:
    if not isinstance(doc, dict):
        raise ParseError(f"document root must be an object, got {type(doc).__name__}")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ParseError(f"unknown top-level keys: {sorted(unknown)}")
    if "n" not in doc or not _is_int(doc["n"]):
        raise ParseError('"n" must be present and an integer')
    raw_points = doc.get("fixed_points")
    if not isinstance(raw_points, list):
        raise ParseError('"fixed_points" must be a list')
    points = []
    for i, entry in enumerate(raw_points):
        if not isinstance(entry, dict) or set(entry) != {"name", "weights"}:
            raise ParseError(f'fixed_points[{i}] must be an object with "name" and "weights"')
        if not isinstance(entry["name"], str):
            raise ParseError(f"fixed_points[{i}].name must be a string")
        if not isinstance(entry["weights"], list) or not all(_is_int(w) for w in entry["weights"]):
            raise ParseError(f"fixed_points[{i}].weights must be a list of integers")
        points.append((entry["name"], entry["weights"]))
    homology = None
    if "homology" in doc:
        raw_h = doc["homology"]
        if not isinstance(raw_h, dict) or set(raw_h) != _HOMOLOGY_KEYS:
            raise ParseError(f'"homology" must be an object with keys {sorted(_HOMOLOGY_KEYS)}')
        if not isinstance(raw_h["simply_connected"], bool) or not isinstance(raw_h["torsion_free"], bool):
            raise ParseError("homology flags must be booleans")
        if not _is_int(raw_h["b2"]) or not _is_int(raw_h["b3"]):
            raise ParseError("homology Betti numbers must be integers")
        homology = HomologyProfile(
            simply_connected=raw_h["simply_connected"],
            b2=raw_h["b2"],
            b3=raw_h["b3"],
            torsion_free=raw_h["torsion_free"],
        )
    labels: dict[str, str] = {}
    if "labels" in doc:
        raw_l = doc["labels"]
        if not isinstance(raw_l, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in raw_l.items()
        ):
            raise ParseError('"labels" must map strings to strings')
        labels = dict(raw_l)
    return dataset(doc["n"], points, homology=homology, labels=labels)


def load(source: str | Path | IO[str]) -> FixedPointData:
    """Read and fully check a dataset document.

    Raises ParseError for malformed JSON or schema violations, and
    ValidationError (carrying the violation list) when the document is
    schema-valid but breaks a dataset invariant.
    """
    try:
        if hasattr(source, "read"):
            doc = json.load(source)
        else:
            with open(source, encoding="utf-8") as fh:
                doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    data = _parse_document(doc)
    violations = validate(data)
    if violations:
        raise ValidationError(violations)
    return data
