"""From per-sample predictions to utility/fairness operating points.

A model emitting scores is swept over decision thresholds (white-box);
a model emitting only 0/1 outcomes yields a single operating point
(black-box). Prediction is positive iff ``score >= threshold``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from ._io import parse_float, read_csv
from .errors import ConfigurationError, EvaluationError, IngestionError, ProtocolError
from .objectives import Direction, ObjectiveSchema, ObjectiveSpec, canonicalize
from .pareto import DEFAULT_EPSILON, SolutionPoint, SolutionSet, deduplicate, pareto_partition

DEFAULT_THRESHOLDS = tuple(i / 100 for i in range(101))
TIE_RULE = "positive iff score >= threshold"
F1_CAUTION = (
    "F1 depends on group base rates; group-wise F1 gaps partly reflect prevalence, "
    "not only model behaviour"
)
RESERVED_COLUMNS = ("sample_id", "score", "label", "model_id")


class MissingGroupError(EvaluationError):
    """A group filter selected no records."""


@dataclass(frozen=True)
class PredictionRecord:
    sample_id: str
    score: float
    label: int
    groups: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"sample {self.sample_id!r}: score {self.score} outside [0, 1]")
        if self.label not in (0, 1):
            raise ValueError(f"sample {self.sample_id!r}: label must be 0 or 1")


@dataclass(frozen=True)
class ThresholdSweep:
    thresholds: tuple[float, ...] = DEFAULT_THRESHOLDS
    per_model: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ts = tuple(float(t) for t in self.thresholds)
        object.__setattr__(self, "thresholds", ts)
        if not ts:
            raise ConfigurationError("threshold grid is empty")
        if any(not 0.0 <= t <= 1.0 for t in ts):
            raise ConfigurationError("thresholds must lie in [0, 1]")
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ConfigurationError("thresholds must be strictly increasing")


@dataclass(frozen=True)
class OperatingPoint:
    model_id: str
    threshold: float | None
    raw_metrics: Mapping[str, float]

    @property
    def id(self) -> str:
        return operating_id(self.model_id, self.threshold)


def operating_id(model_id: str, threshold: float | None) -> str:
    return model_id if threshold is None else f"{model_id}@{threshold!r}"


class ConfusionCounts(NamedTuple):
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True)
class GroupFairness:
    dp_diff: float
    eodd_diff: float
    minmax_f1_diff: float
    attribute: str
    # rate name -> groups left out because the rate is undefined for them
    excluded: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    caution: str = F1_CAUTION


# --------------------------------------------------------------------------
# record handling


class _Columns:
    """Column view of a record list, so sweeps run vectorized."""

    def __init__(self, records: Sequence[PredictionRecord]):
        self.records = list(records)
        self.scores = np.array([r.score for r in self.records], dtype=np.float64)
        self.labels = np.array([r.label for r in self.records], dtype=bool)
        self._groups: dict[str, np.ndarray] = {}

    def groups(self, attribute: str) -> np.ndarray:
        if attribute not in self._groups:
            self._groups[attribute] = np.array(
                [r.groups.get(attribute, "") for r in self.records], dtype=object
            )
        return self._groups[attribute]

    @property
    def binary(self) -> bool:
        return bool(np.all((self.scores == 0.0) | (self.scores == 1.0)))


def _as_columns(records) -> _Columns:
    return records if isinstance(records, _Columns) else _Columns(records)


def _counts(pred: np.ndarray, labels: np.ndarray) -> ConfusionCounts:
    tp = int(np.count_nonzero(pred & labels))
    fp = int(np.count_nonzero(pred & ~labels))
    fn = int(np.count_nonzero(~pred & labels))
    tn = int(pred.shape[0]) - tp - fp - fn
    return ConfusionCounts(tp, fp, tn, fn)


def confusion_counts(
    records,
    threshold: float,
    group_filter: tuple[str, str] | None = None,
) -> ConfusionCounts:
    cols = _as_columns(records)
    pred = cols.scores >= threshold
    labels = cols.labels
    if group_filter is not None:
        attribute, category = group_filter
        sel = cols.groups(attribute) == category
        pred, labels = pred[sel], labels[sel]
    if pred.shape[0] == 0:
        raise MissingGroupError(
            "no records" if group_filter is None else f"no records for {group_filter[0]}={group_filter[1]!r}"
        )
    return _counts(pred, labels)


def utility_metrics(counts: ConfusionCounts) -> tuple[float, float]:
    """(accuracy, F1); F1 is 0 when there are no true or predicted positives."""
    tp, fp, tn, fn = counts
    total = tp + fp + tn + fn
    if total == 0:
        raise EvaluationError("utility metrics of zero samples")
    denom = 2 * tp + fp + fn
    return (tp + tn) / total, (2 * tp / denom if denom else 0.0)


def _spread(values: dict[str, float]) -> float:
    return max(values.values()) - min(values.values()) if len(values) >= 2 else 0.0


def fairness_metrics(records, threshold: float, attribute: str) -> GroupFairness:
    """Min-max gaps across the categories of ``attribute``.

    Equalized-odds difference is the larger of the TPR gap and the FPR gap.
    A group with no positives (or negatives) is left out of the TPR (FPR)
    comparison and listed in ``excluded``.
    """
    cols = _as_columns(records)
    cats = cols.groups(attribute)
    pred_all = cols.scores >= threshold
    categories = sorted({c for c in cats if c != ""})
    if len(categories) < 2:
        raise EvaluationError(
            f"attribute {attribute!r} needs at least 2 populated groups, found {len(categories)}"
        )
    ppr: dict[str, float] = {}
    tpr: dict[str, float] = {}
    fpr: dict[str, float] = {}
    f1: dict[str, float] = {}
    for g in categories:
        sel = cats == g
        c = _counts(pred_all[sel], cols.labels[sel])
        ppr[g] = (c.tp + c.fp) / c.total
        if c.tp + c.fn:
            tpr[g] = c.tp / (c.tp + c.fn)
        if c.fp + c.tn:
            fpr[g] = c.fp / (c.fp + c.tn)
        f1[g] = utility_metrics(c)[1]
    excluded = {}
    for name, rates in (("TPR", tpr), ("FPR", fpr)):
        missing = tuple(g for g in categories if g not in rates)
        if missing:
            excluded[name] = missing
    return GroupFairness(
        dp_diff=_spread(ppr),
        eodd_diff=max(_spread(tpr), _spread(fpr)),
        minmax_f1_diff=_spread(f1),
        attribute=attribute,
        excluded=excluded,
    )


# --------------------------------------------------------------------------
# metric vocabulary

_UTILITY = {"acc": "accuracy", "accuracy": "accuracy", "f1": "f1"}
_FAIRNESS = {"dp": "dp", "eodd": "eodd", "eod": "eodd", "f1_gap": "f1_gap"}


def parse_metric(name: str) -> tuple[str, str | None]:
    """``"eodd:gender"`` -> ("eodd", "gender"); ``"f1"`` -> ("f1", None)."""
    base, _, attr = name.partition(":")
    key = base.strip().lower()
    if key in _UTILITY:
        if attr:
            raise ConfigurationError(f"utility metric {name!r} takes no group attribute")
        return _UTILITY[key], None
    if key in _FAIRNESS:
        return _FAIRNESS[key], (attr.strip() or None)
    known = ", ".join(sorted(set(_UTILITY) | set(_FAIRNESS)))
    raise ConfigurationError(f"unknown metric {name!r} (known: {known})")


def default_direction(name: str) -> Direction:
    kind, _ = parse_metric(name)
    return Direction.MAXIMIZE if kind in ("accuracy", "f1") else Direction.MINIMIZE


def metric_schema(names: Iterable[str]) -> ObjectiveSchema:
    """Schema over named prediction metrics, each on [0, 1] in its natural direction."""
    return ObjectiveSchema(tuple(ObjectiveSpec(n, default_direction(n)) for n in names))


def _group_attributes(cols: _Columns) -> list[str]:
    attrs: set[str] = set()
    for r in cols.records:
        attrs.update(r.groups)
    return sorted(attrs)


def compute_metrics(records, threshold: float | None, names: Sequence[str]) -> dict[str, float]:
    """Raw values of the named metrics at one operating point."""
    cols = _as_columns(records)
    t = 0.5 if threshold is None else threshold
    out: dict[str, float] = {}
    fairness_cache: dict[str, GroupFairness] = {}
    utility = None
    for name in names:
        kind, attr = parse_metric(name)
        if kind in ("accuracy", "f1"):
            if utility is None:
                utility = utility_metrics(confusion_counts(cols, t))
            out[name] = utility[0] if kind == "accuracy" else utility[1]
            continue
        if attr is None:
            attrs = _group_attributes(cols)
            if len(attrs) != 1:
                raise ConfigurationError(
                    f"metric {name!r} needs a group attribute (write e.g. '{name}:<attr>'); "
                    f"available: {', '.join(attrs) or 'none'}"
                )
            attr = attrs[0]
        if attr not in fairness_cache:
            fairness_cache[attr] = fairness_metrics(cols, t, attr)
        gf = fairness_cache[attr]
        out[name] = {"dp": gf.dp_diff, "eodd": gf.eodd_diff, "f1_gap": gf.minmax_f1_diff}[kind]
    return out


# --------------------------------------------------------------------------
# ingestion


def load_predictions(path: str | os.PathLike) -> dict[str, list[PredictionRecord]]:
    """Read a prediction CSV, split by ``model_id`` (else one model named after the file)."""
    path = os.fspath(path)
    header, rows = read_csv(path)
    for col in ("sample_id", "score", "label"):
        if col not in header:
            raise IngestionError(f"missing required column {col!r}", path, 1)
    group_cols = [h for h in header if h not in RESERVED_COLUMNS]
    default_model = os.path.splitext(os.path.basename(path))[0]
    out: dict[str, list[PredictionRecord]] = {}
    for lineno, row in rows:
        score = parse_float(row["score"], "score", path, lineno)
        label_f = parse_float(row["label"], "label", path, lineno)
        if label_f not in (0.0, 1.0):
            raise IngestionError(f"label must be 0 or 1, got {row['label']!r}", path, lineno)
        if not 0.0 <= score <= 1.0:
            raise IngestionError(f"score {score} outside [0, 1]", path, lineno)
        model = row.get("model_id") or default_model
        out.setdefault(model, []).append(
            PredictionRecord(row["sample_id"], score, int(label_f), {g: row[g] for g in group_cols})
        )
    if not out:
        raise IngestionError("no prediction rows", path)
    return out


# --------------------------------------------------------------------------
# sweeps and protocols


def operating_points(
    records_by_model: Mapping[str, Sequence[PredictionRecord]],
    metric_names: Sequence[str],
    thresholds: Sequence[float] | ThresholdSweep = DEFAULT_THRESHOLDS,
) -> list[OperatingPoint]:
    """One operating point per (model, threshold); binary-output models get one point."""
    grid = thresholds.thresholds if isinstance(thresholds, ThresholdSweep) else ThresholdSweep(tuple(thresholds)).thresholds
    out = []
    for model_id, records in records_by_model.items():
        cols = _as_columns(records)
        if not cols.records:
            raise EvaluationError(f"model {model_id!r} has no records")
        model_grid: Sequence[float | None] = (None,) if cols.binary else grid
        for t in model_grid:
            out.append(OperatingPoint(model_id, t, compute_metrics(cols, t, metric_names)))
    return out


def to_solution_set(
    ops: Sequence[OperatingPoint],
    schema: ObjectiveSchema,
    system_name: str,
) -> SolutionSet:
    points = [
        SolutionPoint(
            op.id,
            canonicalize([op.raw_metrics[o.name] for o in schema.objectives], schema),
            model_id=op.model_id,
            threshold=op.threshold,
            raw=tuple(op.raw_metrics[o.name] for o in schema.objectives),
        )
        for op in ops
    ]
    return SolutionSet(system_name, schema, tuple(points))


def build_solution_set(
    sweep: ThresholdSweep | Sequence[float],
    schema: ObjectiveSchema,
    records_by_model: Mapping[str, Sequence[PredictionRecord]],
    *,
    system_name: str = "system",
    epsilon: float = DEFAULT_EPSILON,
) -> SolutionSet:
    """Sweep every model, canonicalize, then epsilon-deduplicate."""
    for o in schema.objectives:
        parse_metric(o.name)
    ops = operating_points(records_by_model, schema.names, sweep)
    return deduplicate(to_solution_set(ops, schema, system_name), epsilon)


def a_priori_select(
    validation: SolutionSet,
    test_records: Mapping[str, Sequence[PredictionRecord]],
) -> tuple[list[tuple[str, float | None]], SolutionSet]:
    """Fix the validation front's (model, threshold) combos, then score them on test.

    Only the validation solution set drives the selection. The returned test
    set remembers the size of the validation candidate pool, which is the
    ONVGR denominator under this protocol.
    """
    front = pareto_partition(validation).non_dominated
    combos = []
    for sp in front:
        if sp.model_id is None:
            raise ProtocolError(f"point {sp.id!r} carries no model/threshold combination")
        combos.append((sp.model_id, sp.threshold))
    schema = validation.schema
    ops = []
    for model_id, t in combos:
        if model_id not in test_records:
            raise ProtocolError(f"selected model {model_id!r} missing from test data")
        cols = _as_columns(test_records[model_id])
        if t is None and not cols.binary:
            raise ProtocolError(f"model {model_id!r} is black-box on validation but scored on test")
        ops.append(OperatingPoint(model_id, t, compute_metrics(cols, t, schema.names)))
    test = to_solution_set(ops, schema, validation.system_name)
    return combos, SolutionSet(test.system_name, schema, test.points, n_candidates=len(validation))


def a_priori_select_points(validation: SolutionSet, test: SolutionSet) -> tuple[list[str], SolutionSet]:
    """A priori selection for precomputed solution sets, matched by point id."""
    ids = [sp.id for sp in pareto_partition(validation).non_dominated]
    by_id = {sp.id: sp for sp in test.points}
    missing = [i for i in ids if i not in by_id]
    if missing:
        raise ProtocolError(f"selected operating points missing from test set: {', '.join(missing)}")
    return ids, SolutionSet(
        validation.system_name, test.schema, tuple(by_id[i] for i in ids), n_candidates=len(validation)
    )


def a_posteriori_evaluate(test: SolutionSet) -> SolutionSet:
    """Every operating point goes forward; no pre-selection."""
    return test
