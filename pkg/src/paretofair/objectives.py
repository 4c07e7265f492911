"""Objective axes and the canonical maximize-everything unit hypercube.

Every downstream computation works on canonical coordinates: each axis is
affinely mapped onto [0, 1] with 1 meaning "best", so the nadir is the
origin and the ideal point is the all-ones vector.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ClampWarning, ConfigurationError, SchemaError


class Direction(enum.Enum):
    MAXIMIZE = "max"
    MINIMIZE = "min"

    @classmethod
    def parse(cls, value: "str | Direction") -> "Direction":
        if isinstance(value, Direction):
            return value
        key = str(value).strip().lower()
        if key in ("max", "maximize", "maximise"):
            return cls.MAXIMIZE
        if key in ("min", "minimize", "minimise"):
            return cls.MINIMIZE
        raise ConfigurationError(f"unknown objective direction {value!r}")


@dataclass(frozen=True)
class ObjectiveSpec:
    name: str
    direction: Direction = Direction.MAXIMIZE
    lower_bound: float = 0.0
    upper_bound: float = 1.0

    def __post_init__(self) -> None:
        if not self.name:
            raise ConfigurationError("objective name must be non-empty")
        lo, hi = float(self.lower_bound), float(self.upper_bound)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ConfigurationError(f"objective {self.name!r}: bounds must be finite")
        if not lo < hi:
            raise ConfigurationError(
                f"objective {self.name!r}: lower bound {lo} must be below upper bound {hi}"
            )

    @property
    def span(self) -> float:
        return self.upper_bound - self.lower_bound


@dataclass(frozen=True)
class ObjectiveSchema:
    objectives: tuple[ObjectiveSpec, ...]

    def __post_init__(self) -> None:
        objs = tuple(self.objectives)
        object.__setattr__(self, "objectives", objs)
        if len(objs) < 2:
            raise ConfigurationError("a trade-off needs at least two objectives")
        names = [o.name for o in objs]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise ConfigurationError(f"duplicate objective names: {', '.join(dupes)}")

    @classmethod
    def from_names(cls, names: Iterable[str], direction: Direction = Direction.MAXIMIZE) -> "ObjectiveSchema":
        return cls(tuple(ObjectiveSpec(n, direction) for n in names))

    @property
    def n(self) -> int:
        return len(self.objectives)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(o.name for o in self.objectives)


@dataclass(frozen=True)
class CanonicalPoint:
    """Point in the unit hypercube; ``clamped`` records an out-of-bounds raw input."""

    coords: tuple[float, ...]
    clamped: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> float:
        return self.coords[i]


@dataclass(frozen=True)
class ReferencePoints:
    nadir: CanonicalPoint
    ideal: CanonicalPoint


def canonicalize(raw: Sequence[float], schema: ObjectiveSchema, *, warn: bool = True) -> CanonicalPoint:
    """Map raw metric values onto the canonical unit hypercube.

    Values outside the declared bounds are clamped; the returned point then
    has ``clamped=True`` and a :class:`ClampWarning` is emitted.
    """
    raw = tuple(raw)
    if len(raw) != schema.n:
        raise SchemaError(f"expected {schema.n} metric values, got {len(raw)}")
    coords = []
    clamped = False
    for value, obj in zip(raw, schema.objectives):
        value = float(value)
        if obj.direction is Direction.MAXIMIZE:
            c = (value - obj.lower_bound) / obj.span
        else:
            c = (obj.upper_bound - value) / obj.span
        if c < 0.0 or c > 1.0:
            clamped = True
            c = min(max(c, 0.0), 1.0)
        coords.append(c)
    if clamped and warn:
        warnings.warn(f"raw values {raw} outside objective bounds, clamped", ClampWarning, stacklevel=2)
    return CanonicalPoint(tuple(coords), clamped)


def decanonicalize(point: CanonicalPoint | Sequence[float], schema: ObjectiveSchema) -> tuple[float, ...]:
    """Inverse affine map of :func:`canonicalize` for in-bounds values."""
    coords = tuple(point)
    if len(coords) != schema.n:
        raise SchemaError(f"expected {schema.n} coordinates, got {len(coords)}")
    out = []
    for c, obj in zip(coords, schema.objectives):
        if obj.direction is Direction.MAXIMIZE:
            out.append(obj.lower_bound + c * obj.span)
        else:
            out.append(obj.upper_bound - c * obj.span)
    return tuple(out)


def reference_points(schema: ObjectiveSchema) -> ReferencePoints:
    n = schema.n
    return ReferencePoints(nadir=CanonicalPoint((0.0,) * n), ideal=CanonicalPoint((1.0,) * n))
