"""Solution-set and indicator CSV formats."""

from __future__ import annotations

import os
from typing import Any, Mapping, Sequence

from ._io import csv_text, fmt_float, parse_float, read_csv
from .errors import ConfigurationError, IngestionError, SchemaError
from .objectives import Direction, ObjectiveSchema, ObjectiveSpec, canonicalize, decanonicalize
from .pareto import SolutionPoint, SolutionSet
from .radar import RADAR_AXES
from .tradeoff import default_direction

SOLUTION_RESERVED = ("system", "model_id", "model", "threshold")


def infer_schema(columns: Sequence[str]) -> ObjectiveSchema:
    """Default schema over objective columns: known fairness metrics minimized, others maximized, bounds [0, 1]."""
    specs = []
    for name in columns:
        try:
            direction = default_direction(name)
        except ConfigurationError:
            direction = Direction.MAXIMIZE
        specs.append(ObjectiveSpec(name, direction))
    return ObjectiveSchema(tuple(specs))


def read_solution_csv(
    path: str | os.PathLike,
    schema: ObjectiveSchema | None = None,
) -> dict[str, SolutionSet]:
    """Read ``system,model_id,<objectives...>`` into one SolutionSet per system.

    Without a ``system`` column the file is one system named after the file.
    """
    path = os.fspath(path)
    header, rows = read_csv(path)
    if "model_id" not in header:
        raise IngestionError("missing required column 'model_id'", path, 1)
    if schema is None:
        objective_cols = [h for h in header if h not in SOLUTION_RESERVED]
        try:
            schema = infer_schema(objective_cols)
        except ConfigurationError as exc:
            raise IngestionError(f"cannot derive objectives from header: {exc}", path, 1) from exc
    missing = [n for n in schema.names if n not in header]
    if missing:
        raise IngestionError(f"missing objective column(s): {', '.join(missing)}", path, 1)

    default_system = os.path.splitext(os.path.basename(path))[0]
    grouped: dict[str, list[SolutionPoint]] = {}
    seen: dict[tuple[str, str], int] = {}
    for lineno, row in rows:
        system = row.get("system") or default_system
        pid = row["model_id"]
        if not pid:
            raise IngestionError("empty model_id", path, lineno)
        if (system, pid) in seen:
            raise IngestionError(
                f"duplicate model_id {pid!r} for system {system!r} (first on line {seen[system, pid]})",
                path,
                lineno,
            )
        seen[system, pid] = lineno
        raw = tuple(parse_float(row[n], n, path, lineno) for n in schema.names)
        threshold = None
        if row.get("threshold"):
            threshold = parse_float(row["threshold"], "threshold", path, lineno)
        grouped.setdefault(system, []).append(
            SolutionPoint(
                pid,
                canonicalize(raw, schema),
                model_id=row.get("model") or None,
                threshold=threshold,
                raw=raw,
            )
        )
    if not grouped:
        raise IngestionError("no solution rows", path)
    return {name: SolutionSet(name, schema, tuple(pts)) for name, pts in grouped.items()}


def raw_values(sp: SolutionPoint, schema: ObjectiveSchema) -> tuple[float, ...]:
    return sp.raw if sp.raw is not None else decanonicalize(sp.point, schema)


def solution_csv_text(
    sets: Sequence[SolutionSet],
    *,
    meta: Mapping[str, Any] | None = None,
    with_operating: bool = False,
    extra: Mapping[str, Sequence[str]] | None = None,
) -> str:
    """Serialize sets in the solution-set CSV format (raw metric units).

    ``with_operating`` adds ``model``/``threshold`` columns; ``extra`` adds
    per-row columns keyed by name (one value per point, across all sets).
    """
    if not sets:
        raise SchemaError("nothing to write")
    schema = sets[0].schema
    for s in sets:
        if s.schema.names != schema.names:
            raise SchemaError("systems written to one file must share objectives")
    header = ["system", "model_id"]
    if with_operating:
        header += ["model", "threshold"]
    header += list(schema.names)
    extra = dict(extra or {})
    header += list(extra)
    rows = []
    k = 0
    for s in sets:
        for sp in s.points:
            row = [s.system_name, sp.id]
            if with_operating:
                row += [sp.model_id or "", "" if sp.threshold is None else fmt_float(sp.threshold)]
            row += [fmt_float(v) for v in raw_values(sp, s.schema)]
            row += [str(col[k]) for col in extra.values()]
            rows.append(row)
            k += 1
    return csv_text(header, rows, meta)


def read_indicator_csv(path: str | os.PathLike) -> list[tuple[str, tuple[float, ...]]]:
    """Rows of (system, five radar values in table order) from an indicator CSV."""
    path = os.fspath(path)
    header, rows = read_csv(path)
    needed = ("system",) + RADAR_AXES
    missing = [c for c in needed if c not in header]
    if missing:
        raise IngestionError(f"missing column(s): {', '.join(missing)}", path, 1)
    out = []
    for lineno, row in rows:
        vals = tuple(parse_float(row[c], c, path, lineno) for c in RADAR_AXES)
        bad = [c for c, v in zip(RADAR_AXES, vals) if not 0.0 <= v <= 1.0]
        if bad:
            raise IngestionError(f"indicator value(s) outside [0, 1]: {', '.join(bad)}", path, lineno)
        out.append((row["system"], vals))
    if not out:
        raise IngestionError("no indicator rows", path)
    return out
