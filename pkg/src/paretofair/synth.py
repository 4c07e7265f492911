"""Synthetic trade-off systems with controllable front shape and capacity."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .objectives import CanonicalPoint, ObjectiveSchema
from .pareto import SolutionPoint, SolutionSet, nondominated_mask

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood); identical streams on every platform."""

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


class FrontShape(enum.Enum):
    CONVEX = "convex"    # bulges toward the ideal point
    CONCAVE = "concave"  # bulges toward the nadir
    LINEAR = "linear"    # the unit simplex


@dataclass(frozen=True)
class SynthSpec:
    n_points: int = 10
    n_objectives: int = 2
    front_shape: FrontShape = FrontShape.LINEAR
    spread: float = 1.0
    jitter: float = 0.0
    n_dominated: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.n_objectives < 2:
            raise ValueError("n_objectives must be >= 2")
        if not 0.0 <= self.spread <= 1.0:
            raise ValueError("spread must lie in [0, 1]")
        if self.jitter < 0 or self.n_dominated < 0 or self.seed < 0:
            raise ValueError("jitter, n_dominated and seed must be non-negative")


def _simplex_weights(spec: SynthSpec, rng: SplitMix64) -> np.ndarray:
    n, d = spec.n_points, spec.n_objectives
    if d == 2:
        if n == 1:
            t = np.array([0.5])
        else:
            t = np.arange(n) / (n - 1)
            if spec.jitter:
                t = t + np.array([spec.jitter * (rng.uniform() - 0.5) / (n - 1) for _ in range(n)])
                t = np.sort(np.clip(t, 0.0, 1.0))
        w = np.column_stack([t, 1.0 - t])
    elif n == 1:
        w = np.full((1, d), 1.0 / d)
    else:
        # flat Dirichlet: normalized exponentials
        e = np.array([[-math.log(1.0 - rng.uniform()) for _ in range(d)] for _ in range(n)])
        w = e / e.sum(axis=1, keepdims=True)
    centre = 1.0 / d
    return centre + spec.spread * (w - centre)


def _shape(w: np.ndarray, shape: FrontShape) -> np.ndarray:
    if shape is FrontShape.LINEAR:
        return w
    unit = w / np.linalg.norm(w, axis=1, keepdims=True)
    return unit if shape is FrontShape.CONVEX else 1.0 - unit


def _repair(front: np.ndarray) -> np.ndarray:
    # Curve points are mutually incomparable in exact arithmetic; when they are
    # only rounding noise apart one can look dominated. Snap it onto a
    # non-dominated point that dominates it.
    mask = nondominated_mask(front)
    if mask.all():
        return front
    front = front.copy()
    keep = np.flatnonzero(mask)
    for i in np.flatnonzero(~mask):
        for j in keep:
            if np.all(front[j] >= front[i]):
                front[i] = front[j]
                break
    return front


def generate(spec: SynthSpec, system_name: str = "synthetic") -> SolutionSet:
    """Front points first, then dominated points shrunk toward the nadir.

    Two-objective fronts are evenly spaced along the curve (``jitter``
    perturbs the spacing); higher dimensions sample the front at random.
    """
    rng = SplitMix64(spec.seed)
    front = _repair(np.clip(_shape(_simplex_weights(spec, rng), spec.front_shape), 0.0, 1.0))
    points = [SolutionPoint(f"p{i}", CanonicalPoint(tuple(row))) for i, row in enumerate(front)]
    for k in range(spec.n_dominated):
        parent = front[min(int(rng.uniform() * spec.n_points), spec.n_points - 1)]
        factor = 0.3 + 0.6 * rng.uniform()
        points.append(SolutionPoint(f"d{k}", CanonicalPoint(tuple(parent * factor))))
    schema = ObjectiveSchema.from_names([f"obj{i + 1}" for i in range(spec.n_objectives)])
    return SolutionSet(system_name, schema, tuple(points))


def _paired_system(
    name: str, n_front: int, span: float, base: float, n_dominated: int, gap: float = 0.01
) -> SolutionSet:
    """Anti-diagonal front of ``n_front // 2`` tight pairs spread evenly over ``span`` per axis.

    Pair members sit ``gap`` apart per axis and neighbouring pairs more than
    0.1 apart in Euclidean distance, so every point has exactly one niche
    neighbour at the default radius.
    """
    n_pairs = n_front // 2
    stride = (span - n_pairs * gap) / (n_pairs - 1)
    u = np.array([k * (gap + stride) + j * gap for k in range(n_pairs) for j in (0, 1)])
    front = np.round(np.column_stack([base + u, base + span - u]), 4)
    pts = [SolutionPoint(f"p{i}", CanonicalPoint(tuple(r))) for i, r in enumerate(front)]
    for k in range(n_dominated):
        pts.append(SolutionPoint(f"d{k}", CanonicalPoint(tuple(np.round(front[k % n_front] * 0.8, 4)))))
    return SolutionSet(name, ObjectiveSchema.from_names(["obj1", "obj2"]), tuple(pts))


def _single(name: str, xy: tuple[float, float], dominated: tuple[float, float]) -> SolutionSet:
    schema = ObjectiveSchema.from_names(["obj1", "obj2"])
    return SolutionSet(
        name,
        schema,
        (SolutionPoint("p0", CanonicalPoint(xy)), SolutionPoint("d0", CanonicalPoint(dominated))),
    )


class UseCase(enum.Enum):
    UC1 = "UC1"  # two black-box systems
    UC2 = "UC2"  # black-box vs white-box
    UC3 = "UC3"  # two white-box systems


def uc_fixture(case: UseCase | str) -> tuple[SolutionSet, SolutionSet]:
    """Two-system fixtures with fixed front/total cardinalities.

    Front counts of (1 of 2, 1 of 2), (1 of 2, 8 of 9) and (10 of 11, 6 of 7).
    Multi-point fronts are paired layouts whose HV, AS and UD (at the
    default niche radius) land on the reference indicator rows.
    """
    case = UseCase(case) if not isinstance(case, UseCase) else case
    if case is UseCase.UC1:
        return (
            _single("System1", (0.7, 0.5), (0.5, 0.3)),
            _single("System2", (0.2, 0.2), (0.1, 0.15)),
        )
    if case is UseCase.UC2:
        return (
            _single("System1", (0.6, 0.4), (0.3, 0.2)),
            _paired_system("System2", 8, 0.26, 0.1034, 1),
        )
    return (
        _paired_system("System1", 10, 0.46, 0.3567, 1),
        _paired_system("System2", 6, 0.18, 0.0249, 1),
    )
