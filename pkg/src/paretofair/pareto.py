"""Dominance, non-dominated filtering and epsilon deduplication."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._backend import kernels
from .errors import SchemaError
from .objectives import CanonicalPoint, ObjectiveSchema

DEFAULT_EPSILON = 1e-6
DEDUP_NORM = "euclidean"


@dataclass(frozen=True)
class SolutionPoint:
    """One operating point. ``model_id``/``threshold`` are set for swept predictions."""

    id: str
    point: CanonicalPoint
    model_id: str | None = None
    threshold: float | None = None
    raw: tuple[float, ...] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class SolutionSet:
    system_name: str
    schema: ObjectiveSchema
    points: tuple[SolutionPoint, ...]
    # Size of the candidate pool the points were selected from (a priori protocol);
    # None means the points themselves are the whole pool.
    n_candidates: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise SchemaError(f"system {self.system_name!r}: solution set is empty")
        ids = set()
        for sp in pts:
            if len(sp.point) != self.schema.n:
                raise SchemaError(
                    f"system {self.system_name!r}: point {sp.id!r} has {len(sp.point)} "
                    f"coordinates, schema has {self.schema.n}"
                )
            if sp.id in ids:
                raise SchemaError(f"system {self.system_name!r}: duplicate point id {sp.id!r}")
            ids.add(sp.id)

    def __len__(self) -> int:
        return len(self.points)

    def matrix(self) -> np.ndarray:
        return as_matrix([sp.point for sp in self.points])

    def with_points(self, points: Sequence[SolutionPoint]) -> "SolutionSet":
        return SolutionSet(self.system_name, self.schema, tuple(points), self.n_candidates)


@dataclass(frozen=True)
class ParetoPartition:
    non_dominated: tuple[SolutionPoint, ...]
    dominated: tuple[SolutionPoint, ...]

    @property
    def n_points(self) -> int:
        return len(self.non_dominated) + len(self.dominated)


def as_matrix(points) -> np.ndarray:
    """Stack canonical points (or raw sequences) into a float64 (M, N) array."""
    if isinstance(points, np.ndarray):
        arr = np.ascontiguousarray(points, dtype=np.float64)
        return arr.reshape(-1, 1) if arr.ndim == 1 else arr
    rows = [tuple(p) for p in points]
    if not rows:
        return np.zeros((0, 0))
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise SchemaError("points have inconsistent dimensionality")
    return np.array(rows, dtype=np.float64).reshape(len(rows), width)


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff ``a`` is no worse than ``b`` on every axis and better on one."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise SchemaError(f"cannot compare points of dimension {len(a)} and {len(b)}")
    strictly = False
    for x, y in zip(a, b):
        if x < y:
            return False
        if x > y:
            strictly = True
    return strictly


def nondominated_mask(points) -> np.ndarray:
    return kernels.nondominated_mask(as_matrix(points))


def pareto_partition(s: SolutionSet | Sequence[SolutionPoint]) -> ParetoPartition:
    """Split a set into its first front and the rest, preserving input order."""
    pts = tuple(s.points if isinstance(s, SolutionSet) else s)
    mask = nondominated_mask([sp.point for sp in pts])
    nd = tuple(sp for sp, keep in zip(pts, mask) if keep)
    dom = tuple(sp for sp, keep in zip(pts, mask) if not keep)
    return ParetoPartition(nd, dom)


def _cluster_representative(members: list[int], mat: np.ndarray) -> int:
    # most intra-cluster dominations wins; ties go to the lowest input index
    best, best_score = members[0], -1
    for i in members:
        score = sum(1 for j in members if j != i and dominates(mat[i], mat[j]))
        if score > best_score:
            best, best_score = i, score
    return best


def deduplicate(s: SolutionSet, epsilon: float = DEFAULT_EPSILON) -> SolutionSet:
    """Keep one representative per epsilon-cluster.

    Clusters are the density-reachable components of DBSCAN with minPts = 1
    and Euclidean radius ``epsilon``, so representatives of different
    clusters are always more than ``epsilon`` apart.
    """
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    mat = s.matrix()
    labels = kernels.eps_components(mat, float(epsilon))
    clusters: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        clusters.setdefault(int(lab), []).append(i)
    if len(clusters) == len(s):
        return s
    keep = sorted(_cluster_representative(m, mat) for m in clusters.values())
    return s.with_points([s.points[i] for i in keep])
