"""Multi-objective performance indicators over a canonical front.

All functions assume the canonical unit hypercube: nadir at the origin,
ideal at all-ones, so per-axis ideal-to-nadir ranges are 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from ._backend import kernels
from .errors import EvaluationError
from .objectives import ReferencePoints
from .pareto import ParetoPartition, as_matrix

DEFAULT_SIGMA = 0.1


@dataclass(frozen=True)
class NicheConfig:
    sigma: float = DEFAULT_SIGMA

    def __post_init__(self) -> None:
        if not self.sigma > 0:
            raise ValueError("niche radius sigma must be positive")


@dataclass(frozen=True)
class IndicatorReport:
    system: str
    hv: float
    onvg: int
    onvgr: float
    ud: float
    os: float
    as_: float
    n_points: int
    n_nondominated: int
    onvg_hat: float | None = None
    sigma: float = DEFAULT_SIGMA


def _front(front) -> np.ndarray:
    mat = as_matrix(front)
    if mat.shape[0] == 0:
        raise EvaluationError("indicator requested on an empty front")
    return mat


def _axis_ranges(mat: np.ndarray, ref: ReferencePoints | None) -> np.ndarray:
    ranges = mat.max(axis=0) - mat.min(axis=0)
    if ref is None:
        return ranges
    span = np.asarray(ref.ideal.coords) - np.asarray(ref.nadir.coords)
    return np.abs(ranges / span)


def niche_counts(front, sigma: float) -> np.ndarray:
    return kernels.niche_counts(_front(front), float(sigma))


def uniform_distribution(front, cfg: NicheConfig | float = DEFAULT_SIGMA) -> float:
    """UD = 1 / (1 + sample std of niche counts); 1.0 for fronts of size <= 1."""
    sigma = cfg.sigma if isinstance(cfg, NicheConfig) else float(cfg)
    nc = niche_counts(front, sigma)
    if nc.shape[0] <= 1:
        return 1.0
    dev = float(np.std(nc.astype(np.float64), ddof=1))
    return 1.0 / (1.0 + dev)


def overall_spread(front, ref: ReferencePoints | None = None) -> float:
    """Product over axes of the front's extent relative to the ideal-nadir range."""
    return float(math.prod(_axis_ranges(_front(front), ref)))


def average_spread(front, ref: ReferencePoints | None = None) -> float:
    """Mean over axes of the front's extent relative to the ideal-nadir range."""
    return float(np.mean(_axis_ranges(_front(front), ref)))


def hypervolume(front, ref: ReferencePoints | None = None) -> float:
    """Lebesgue measure dominated by the front, referenced at the nadir.

    Dominated points may be included; they add nothing.
    """
    mat = _front(front)
    if ref is not None:
        nadir = np.asarray(ref.nadir.coords)
        scale = np.asarray(ref.ideal.coords) - nadir
        mat = (mat - nadir) / scale
    return float(kernels.hypervolume(mat))


def capacity(partition: ParetoPartition) -> tuple[int, float]:
    """(ONVG, ONVGR): front size and its share of all points."""
    onvg = len(partition.non_dominated)
    total = partition.n_points
    if total == 0:
        raise EvaluationError("capacity of an empty partition")
    return onvg, onvg / total


def normalize_onvg(reports: Sequence[IndicatorReport]) -> list[IndicatorReport]:
    """Fill ``onvg_hat`` = ONVG / max ONVG over the comparison session."""
    reports = list(reports)
    if not reports:
        raise EvaluationError("cannot normalize ONVG over an empty session")
    peak = max(r.onvg for r in reports)
    if peak <= 0:
        raise EvaluationError("no system in the session has a non-dominated point")
    return [replace(r, onvg_hat=r.onvg / peak) for r in reports]


def indicator_report(
    partition: ParetoPartition,
    *,
    system: str = "",
    sigma: float = DEFAULT_SIGMA,
    n_points: int | None = None,
) -> IndicatorReport:
    """Compute every per-system indicator from a (deduplicated) partition.

    ``n_points`` overrides the ONVGR denominator when the partition holds
    only a selection from a larger candidate pool.
    """
    front = [sp.point for sp in partition.non_dominated]
    if not front:
        raise EvaluationError(f"system {system!r} has no non-dominated points")
    onvg, onvgr = capacity(partition)
    total = partition.n_points
    if n_points is not None:
        if n_points < onvg:
            raise EvaluationError("candidate pool smaller than the front")
        total = n_points
        onvgr = onvg / total
    return IndicatorReport(
        system=system,
        hv=hypervolume(front),
        onvg=onvg,
        onvgr=onvgr,
        ud=uniform_distribution(front, sigma),
        os=overall_spread(front),
        as_=average_spread(front),
        n_points=total,
        n_nondominated=onvg,
        sigma=sigma,
    )
