"""Comparison session: the fixed dedupe -> partition -> indicators -> area pipeline."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .indicators import DEFAULT_SIGMA, IndicatorReport, indicator_report, normalize_onvg
from .pareto import DEFAULT_EPSILON, ParetoPartition, SolutionSet, deduplicate, pareto_partition
from .radar import AreaScore, RadarGeometry, radar_geometry, surveyor_area


@dataclass(frozen=True)
class SystemResult:
    solution_set: SolutionSet  # after deduplication
    partition: ParetoPartition
    report: IndicatorReport
    area: AreaScore | None = None
    geometry: RadarGeometry | None = None

    @property
    def name(self) -> str:
        return self.solution_set.system_name


def evaluate_system(
    s: SolutionSet,
    *,
    sigma: float = DEFAULT_SIGMA,
    epsilon: float = DEFAULT_EPSILON,
) -> SystemResult:
    """Per-system indicators; ONVG_hat stays unset until the session is normalized."""
    deduped = deduplicate(s, epsilon)
    part = pareto_partition(deduped)
    n_points = None
    if s.n_candidates is not None:
        n_points = max(s.n_candidates, part.n_points)
    rep = indicator_report(part, system=s.system_name, sigma=sigma, n_points=n_points)
    return SystemResult(deduped, part, rep)


def compare(
    systems: Sequence[SolutionSet],
    *,
    sigma: float = DEFAULT_SIGMA,
    epsilon: float = DEFAULT_EPSILON,
) -> list[SystemResult]:
    """Evaluate all systems, normalize ONVG across them and attach radar areas."""
    results = [evaluate_system(s, sigma=sigma, epsilon=epsilon) for s in systems]
    reports = normalize_onvg([r.report for r in results])
    out = []
    for res, rep in zip(results, reports):
        geom = radar_geometry(rep)
        out.append(replace(res, report=rep, geometry=geom, area=surveyor_area(geom)))
    return out
