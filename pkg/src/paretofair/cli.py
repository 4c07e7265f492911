"""Command-line front end.

Subcommands::

    paretofair compare  [--config run.yaml] [INPUT ...]   full pipeline and reports
    paretofair pareto   INPUT                              non-dominated partition
    paretofair dedupe   INPUT                              epsilon deduplication
    paretofair radar    INDICATORS.csv                     radar chart from indicator values
    paretofair sweep    PREDICTIONS.csv ...                threshold sweep to operating points
    paretofair synth                                       synthetic solution sets

Exit status: 0 success, 1 input/evaluation error, 2 configuration error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import __version__
from ._io import config_hash, csv_text, fmt_float, write_text
from .errors import (
    ConfigurationError,
    IngestionError,
    ParetoFairError,
    SchemaError,
)
from .files import read_indicator_csv, read_solution_csv, solution_csv_text
from .indicators import DEFAULT_SIGMA
from .objectives import Direction, ObjectiveSchema, ObjectiveSpec
from .pareto import DEDUP_NORM, DEFAULT_EPSILON, SolutionSet, deduplicate, pareto_partition
from .radar import RADAR_AXES, emit_pareto_svg, emit_radar_svg, emit_table, radar_from_values, surveyor_area
from .session import compare
from .synth import FrontShape, SynthSpec, generate, uc_fixture
from .tradeoff import (
    DEFAULT_THRESHOLDS,
    F1_CAUTION,
    TIE_RULE,
    a_posteriori_evaluate,
    a_priori_select,
    a_priori_select_points,
    build_solution_set,
    load_predictions,
    operating_points,
    parse_metric,
)

PROTOCOLS = {"a_priori": "a_priori", "apriori": "a_priori", "a_posteriori": "a_posteriori", "aposteriori": "a_posteriori"}
KINDS = {
    "solutions": "solutions", "solution": "solutions", "solution_csv": "solutions", "solutioncsv": "solutions",
    "predictions": "predictions", "prediction": "predictions", "prediction_csv": "predictions",
    "predictioncsv": "predictions",
}
DEDUP_RULE = "DBSCAN minPts=1; representative dominates most cluster members, ties to lowest index"


# --------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class InputSpec:
    path: str
    system: str | None = None
    kind: str | None = None  # None: detect from header
    validation: str | None = None


@dataclass
class RunConfig:
    schema: ObjectiveSchema | None = None
    epsilon: float = DEFAULT_EPSILON
    sigma: float = DEFAULT_SIGMA
    threshold_grid: tuple[float, ...] = DEFAULT_THRESHOLDS
    protocol: str = "a_posteriori"
    inputs: list[InputSpec] = field(default_factory=list)
    output_dir: str = "paretofair_out"

    def as_dict(self) -> dict[str, Any]:
        return {
            "objectives": None if self.schema is None else [
                {"name": o.name, "direction": o.direction.value, "lower": o.lower_bound, "upper": o.upper_bound}
                for o in self.schema.objectives
            ],
            "epsilon": self.epsilon,
            "sigma": self.sigma,
            "threshold_grid": list(self.threshold_grid),
            "protocol": self.protocol,
            # basenames keep the hash independent of where the run happens
            "inputs": [
                {**vars(i), "path": os.path.basename(i.path),
                 "validation": i.validation and os.path.basename(i.validation)}
                for i in self.inputs
            ],
        }


def _positive_float(value: Any, key: str) -> float:
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{key}: expected a number, got {value!r}") from None
    if not x > 0:
        raise ConfigurationError(f"{key}: must be positive")
    return x


def parse_threshold_grid(value: Any) -> tuple[float, ...]:
    """List of numbers, ``{start, stop, num}``, ``"start:stop:num"`` or ``"a,b,c"``."""
    try:
        if isinstance(value, dict):
            start, stop, num = float(value["start"]), float(value["stop"]), int(value["num"])
            grid = _linspace(start, stop, num)
        elif isinstance(value, str) and ":" in value:
            start, stop, num = value.split(":")
            grid = _linspace(float(start), float(stop), int(num))
        elif isinstance(value, str):
            grid = tuple(float(v) for v in value.split(",") if v.strip())
        else:
            grid = tuple(float(v) for v in value)
    except (KeyError, TypeError, ValueError):
        raise ConfigurationError(f"threshold_grid: cannot parse {value!r}") from None
    if not grid:
        raise ConfigurationError("threshold_grid is empty")
    if any(not 0.0 <= t <= 1.0 for t in grid):
        raise ConfigurationError("threshold_grid values must lie in [0, 1]")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigurationError("threshold_grid must be strictly increasing")
    return grid


def _linspace(start: float, stop: float, num: int) -> tuple[float, ...]:
    if num < 1:
        raise ValueError
    if num == 1:
        return (start,)
    return tuple(round(start + (stop - start) * i / (num - 1), 12) for i in range(num))


def parse_objective(entry: Any) -> ObjectiveSpec:
    """Config mapping ``{name, direction, lower, upper}`` or flag ``name=dir[,lower,upper]``."""
    if isinstance(entry, str):
        name, _, rest = entry.partition("=")
        parts = [p.strip() for p in rest.split(",")] if rest else []
        entry = {"name": name.strip()}
        if parts:
            entry["direction"] = parts[0]
        if len(parts) == 3:
            entry["lower"], entry["upper"] = parts[1], parts[2]
        elif len(parts) not in (0, 1):
            raise ConfigurationError(f"objective {name!r}: expected name=dir[,lower,upper]")
    if not isinstance(entry, dict) or "name" not in entry:
        raise ConfigurationError(f"objective entry needs a name: {entry!r}")
    name = str(entry["name"])
    direction = entry.get("direction")
    if direction is None:
        try:
            kind, _ = parse_metric(name)
            direction = "max" if kind in ("accuracy", "f1") else "min"
        except ConfigurationError:
            raise ConfigurationError(f"objective {name!r}: direction required") from None
    try:
        lower = float(entry.get("lower", 0.0))
        upper = float(entry.get("upper", 1.0))
    except (TypeError, ValueError):
        raise ConfigurationError(f"objective {name!r}: bounds must be numbers") from None
    return ObjectiveSpec(name, Direction.parse(direction), lower, upper)


def load_config_file(path: str) -> dict[str, Any]:
    import yaml

    try:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigurationError(f"cannot read config {path}: {exc.strerror}") from None
    except yaml.YAMLError as exc:
        raise ConfigurationError(f"config {path} is not valid YAML/JSON: {exc}") from None
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"config {path}: top level must be a mapping")
    base = os.path.dirname(os.path.abspath(path))
    for item in data.get("inputs") or []:
        if isinstance(item, dict):
            for key in ("path", "validation"):
                if item.get(key) and not os.path.isabs(item[key]):
                    item[key] = os.path.join(base, item[key])
    if data.get("output_dir") and not os.path.isabs(data["output_dir"]):
        data["output_dir"] = os.path.join(base, data["output_dir"])
    return data


def build_config(data: dict[str, Any]) -> RunConfig:
    known = {"objectives", "epsilon", "sigma", "threshold_grid", "protocol", "inputs", "output_dir"}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigurationError(f"unknown config key(s): {', '.join(unknown)}")
    cfg = RunConfig()
    if data.get("objectives"):
        cfg.schema = ObjectiveSchema(tuple(parse_objective(o) for o in data["objectives"]))
    if data.get("epsilon") is not None:
        cfg.epsilon = _positive_float(data["epsilon"], "epsilon")
    if data.get("sigma") is not None:
        cfg.sigma = _positive_float(data["sigma"], "sigma")
    if data.get("threshold_grid") is not None:
        cfg.threshold_grid = parse_threshold_grid(data["threshold_grid"])
    if data.get("protocol") is not None:
        key = str(data["protocol"]).lower().replace("-", "_")
        if key not in PROTOCOLS:
            raise ConfigurationError(f"protocol must be a_priori or a_posteriori, got {data['protocol']!r}")
        cfg.protocol = PROTOCOLS[key]
    for item in data.get("inputs") or []:
        if isinstance(item, str):
            item = {"path": item}
        if not isinstance(item, dict) or not item.get("path"):
            raise ConfigurationError(f"input entry needs a path: {item!r}")
        kind = item.get("kind")
        if kind is not None:
            k = str(kind).lower().replace("-", "_")
            if k not in KINDS:
                raise ConfigurationError(f"input kind must be solutions or predictions, got {kind!r}")
            kind = KINDS[k]
        cfg.inputs.append(InputSpec(str(item["path"]), item.get("system"), kind, item.get("validation")))
    if data.get("output_dir"):
        cfg.output_dir = str(data["output_dir"])
    if not cfg.inputs:
        raise ConfigurationError("no inputs given")
    if cfg.protocol == "a_priori":
        lacking = [i.path for i in cfg.inputs if not i.validation]
        if lacking:
            raise ConfigurationError(f"a_priori protocol needs a validation file for: {', '.join(lacking)}")
    return cfg


# --------------------------------------------------------------------------
# pipeline


def _detect_kind(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip() and not line.lstrip().startswith("#"):
                    cols = {c.strip() for c in line.split(",")}
                    return "predictions" if {"score", "label"} <= cols else "solutions"
    except OSError as exc:
        raise IngestionError(f"cannot read file ({exc.strerror})", path) from None
    raise IngestionError("empty file", path)


def _pick_systems(sets: dict[str, SolutionSet], wanted: str | None, path: str) -> list[SolutionSet]:
    if wanted is None:
        return list(sets.values())
    if wanted in sets:
        return [sets[wanted]]
    if len(sets) == 1:
        only = next(iter(sets.values()))
        return [SolutionSet(wanted, only.schema, only.points, only.n_candidates)]
    raise IngestionError(f"system {wanted!r} not found (file holds {', '.join(sets)})", path)


def load_systems(cfg: RunConfig) -> list[SolutionSet]:
    systems: list[SolutionSet] = []
    for spec in cfg.inputs:
        kind = spec.kind or _detect_kind(spec.path)
        if kind == "predictions":
            if cfg.schema is None:
                raise ConfigurationError(f"{spec.path}: prediction inputs need declared objectives")
            name = spec.system or os.path.splitext(os.path.basename(spec.path))[0]
            test_records = load_predictions(spec.path)
            if cfg.protocol == "a_priori":
                val = build_solution_set(
                    cfg.threshold_grid, cfg.schema, load_predictions(spec.validation),
                    system_name=name, epsilon=cfg.epsilon,
                )
                _, selected = a_priori_select(val, test_records)
                systems.append(selected)
            else:
                s = build_solution_set(
                    cfg.threshold_grid, cfg.schema, test_records, system_name=name, epsilon=cfg.epsilon
                )
                systems.append(a_posteriori_evaluate(s))
        else:
            test_sets = _pick_systems(read_solution_csv(spec.path, cfg.schema), spec.system, spec.path)
            if cfg.protocol == "a_priori":
                val_sets = read_solution_csv(spec.validation, cfg.schema)
                for t in test_sets:
                    v = _pick_systems(val_sets, t.system_name, spec.validation)[0]
                    _, selected = a_priori_select_points(v, t)
                    systems.append(selected)
            else:
                systems.extend(a_posteriori_evaluate(t) for t in test_sets)
    names = [s.system_name for s in systems]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        raise ConfigurationError(f"duplicate system names: {', '.join(dupes)}")
    first = systems[0].schema.names
    for s in systems[1:]:
        if s.schema.names != first:
            raise SchemaError(
                f"system {s.system_name!r} objectives {list(s.schema.names)} differ from {list(first)}"
            )
    return systems


def run_metadata(cfg: RunConfig, *, predictions: bool) -> dict[str, Any]:
    meta = {
        "generator": f"paretofair {__version__}",
        "config_hash": config_hash(cfg.as_dict()),
        "protocol": cfg.protocol,
        "epsilon": fmt_float(cfg.epsilon),
        "dedup": f"{DEDUP_RULE}; norm={DEDUP_NORM}",
        "sigma": fmt_float(cfg.sigma),
        "niche": "euclidean, strict < sigma",
        "radar_axes": ",".join(RADAR_AXES),
        "area_norm": "area / regular-polygon maximum",
    }
    if predictions:
        meta["prediction_rule"] = TIE_RULE
        meta["caution"] = F1_CAUTION
    return meta


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name).strip("._") or "system"


def _ensure_dir(path: str) -> None:
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as exc:
        raise ConfigurationError(f"output directory {path!r} not writable: {exc.strerror}") from None
    if not os.access(path, os.W_OK):
        raise ConfigurationError(f"output directory {path!r} not writable")


def run_compare(cfg: RunConfig) -> str:
    """Run the pipeline and write every artifact; returns the text report."""
    systems = load_systems(cfg)
    uses_predictions = any((i.kind or _detect_kind(i.path)) == "predictions" for i in cfg.inputs)
    meta = run_metadata(cfg, predictions=uses_predictions)
    results = compare(systems, sigma=cfg.sigma, epsilon=cfg.epsilon)
    _ensure_dir(cfg.output_dir)

    text, table_csv = emit_table([(r.report, r.area) for r in results], meta=meta)
    files = {
        "report.txt": text,
        "report.csv": table_csv,
        "radar.svg": emit_radar_svg([(r.name, r.geometry) for r in results], meta=meta),
    }
    slugs = set()
    for r in results:
        slug = _slug(r.name)
        if slug in slugs:
            slug = f"{slug}_{len(slugs)}"
        slugs.add(slug)
        front_set = r.solution_set.with_points(r.partition.non_dominated)
        files[os.path.join(slug, "front.csv")] = solution_csv_text([front_set], meta=meta, with_operating=True)
    if systems[0].schema.n == 2:
        files["pareto.svg"] = emit_pareto_svg(
            [(r.name, [p.point for p in r.partition.non_dominated], [p.point for p in r.partition.dominated])
             for r in results],
            systems[0].schema.names,
            meta=meta,
        )
    for rel, content in files.items():
        target = os.path.join(cfg.output_dir, rel)
        os.makedirs(os.path.dirname(target), exist_ok=True)
        write_text(target, content)
    return text


# --------------------------------------------------------------------------
# argument parsing


def _schema_from_flags(objectives: Sequence[str] | None) -> ObjectiveSchema | None:
    if not objectives:
        return None
    return ObjectiveSchema(tuple(parse_objective(o) for o in objectives))


def _add_common(p: argparse.ArgumentParser, *, epsilon=False, sigma=False, objectives=False, grid=False) -> None:
    if objectives:
        p.add_argument("--objective", dest="objectives", action="append", metavar="NAME=DIR[,LO,HI]",
                       help="objective axis, repeatable and ordered (e.g. f1=max, eodd:gender=min)")
    if epsilon:
        p.add_argument("--epsilon", type=float, help=f"deduplication radius (default {DEFAULT_EPSILON:g})")
    if sigma:
        p.add_argument("--sigma", type=float, help=f"niche radius for UD (default {DEFAULT_SIGMA:g})")
    if grid:
        p.add_argument("--threshold-grid", dest="threshold_grid",
                       help="thresholds as 'a,b,c' or 'start:stop:num' (default 0:1:101)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paretofair", description="Pareto-front evaluation of utility/fairness trade-offs")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", help="full pipeline: indicators, radar areas, reports")
    p.add_argument("inputs", nargs="*", help="solution or prediction CSVs (kind detected from header)")
    p.add_argument("--config", help="YAML/JSON run configuration; flags override its keys")
    _add_common(p, epsilon=True, sigma=True, objectives=True, grid=True)
    p.add_argument("--protocol", choices=["a_priori", "a_posteriori"])
    p.add_argument("--validation", action="append", help="validation file per input, same order (a_priori)")
    p.add_argument("--system", action="append", help="system name per input, same order")
    p.add_argument("-o", "--output-dir", dest="output_dir")

    p = sub.add_parser("pareto", help="split a solution CSV into front and dominated points")
    p.add_argument("input")
    _add_common(p, objectives=True)
    p.add_argument("-o", "--output-dir", dest="output_dir", default=".")

    p = sub.add_parser("dedupe", help="epsilon-deduplicate a solution CSV")
    p.add_argument("input")
    _add_common(p, epsilon=True, objectives=True)
    p.add_argument("-o", "--output", help="output CSV (default stdout)")

    p = sub.add_parser("radar", help="radar chart and areas from an indicator CSV")
    p.add_argument("input", help=f"CSV with columns system,{','.join(RADAR_AXES)}")
    p.add_argument("-o", "--output-dir", dest="output_dir", default=".")

    p = sub.add_parser("sweep", help="operating points from prediction CSVs")
    p.add_argument("inputs", nargs="+")
    _add_common(p, objectives=True, grid=True)
    p.add_argument("--system", help="system name (default: first file's stem)")
    p.add_argument("-o", "--output", help="output CSV (default stdout)")

    p = sub.add_parser("synth", help="write synthetic solution sets")
    p.add_argument("--use-case", choices=["UC1", "UC2", "UC3"], help="two-system use-case fixture")
    p.add_argument("--n-points", type=int, default=10)
    p.add_argument("--n-objectives", type=int, default=2)
    p.add_argument("--shape", choices=[s.value for s in FrontShape], default="linear")
    p.add_argument("--spread", type=float, default=1.0)
    p.add_argument("--jitter", type=float, default=0.0)
    p.add_argument("--n-dominated", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--system", default="synthetic")
    p.add_argument("-o", "--output", help="output CSV (default stdout)")
    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        write_text(output, text)
    else:
        sys.stdout.write(text)


def cmd_compare(args: argparse.Namespace) -> int:
    data: dict[str, Any] = load_config_file(args.config) if args.config else {}
    if args.inputs:
        systems = args.system or []
        vals = args.validation or []
        if systems and len(systems) != len(args.inputs):
            raise ConfigurationError("--system must be given once per input")
        if vals and len(vals) != len(args.inputs):
            raise ConfigurationError("--validation must be given once per input")
        data["inputs"] = [
            {"path": p, "system": systems[i] if systems else None, "validation": vals[i] if vals else None}
            for i, p in enumerate(args.inputs)
        ]
    for key in ("epsilon", "sigma", "threshold_grid", "protocol", "output_dir"):
        if getattr(args, key) is not None:
            data[key] = getattr(args, key)
    if args.objectives:
        data["objectives"] = list(args.objectives)
    text = run_compare(build_config(data))
    sys.stdout.write(text)
    return 0


def _single_file_sets(path: str, objectives) -> list[SolutionSet]:
    return list(read_solution_csv(path, _schema_from_flags(objectives)).values())


def cmd_pareto(args: argparse.Namespace) -> int:
    sets = _single_file_sets(args.input, args.objectives)
    _ensure_dir(args.output_dir)
    meta = {"generator": f"paretofair {__version__}", "source": os.path.basename(args.input)}
    parts = [(s, pareto_partition(s)) for s in sets]
    ordered = [s.with_points(p.non_dominated + p.dominated) for s, p in parts]
    flags = [str(int(i < len(p.non_dominated))) for s, p in parts for i in range(len(s))]
    write_text(os.path.join(args.output_dir, "partition.csv"),
               solution_csv_text(ordered, meta=meta, extra={"front": flags}))
    fronts = [s.with_points(p.non_dominated) for s, p in parts]
    write_text(os.path.join(args.output_dir, "front.csv"), solution_csv_text(fronts, meta=meta))
    if sets[0].schema.n == 2:
        emit_pareto_svg(
            [(s.system_name, [sp.point for sp in p.non_dominated], [sp.point for sp in p.dominated]) for s, p in parts],
            sets[0].schema.names,
            os.path.join(args.output_dir, "pareto.svg"),
            meta=meta,
        )
    for s, p in parts:
        sys.stdout.write(f"{s.system_name}: {len(p.non_dominated)} of {len(s)} non-dominated: "
                         f"{', '.join(sp.id for sp in p.non_dominated)}\n")
    return 0


def cmd_dedupe(args: argparse.Namespace) -> int:
    eps = DEFAULT_EPSILON if args.epsilon is None else _positive_float(args.epsilon, "epsilon")
    sets = _single_file_sets(args.input, args.objectives)
    out = [deduplicate(s, eps) for s in sets]
    meta = {
        "generator": f"paretofair {__version__}",
        "source": os.path.basename(args.input),
        "epsilon": fmt_float(eps),
        "dedup": f"{DEDUP_RULE}; norm={DEDUP_NORM}",
    }
    _emit(solution_csv_text(out, meta=meta), args.output)
    return 0


def cmd_radar(args: argparse.Namespace) -> int:
    rows = read_indicator_csv(args.input)
    _ensure_dir(args.output_dir)
    meta = {"generator": f"paretofair {__version__}", "source": os.path.basename(args.input),
            "radar_axes": ",".join(RADAR_AXES)}
    geoms = [(name, radar_from_values(vals)) for name, vals in rows]
    emit_radar_svg(geoms, os.path.join(args.output_dir, "radar.svg"), meta=meta)
    header = ["system", *RADAR_AXES, "area", "area_norm"]
    out_rows = []
    lines = []
    for (name, vals), (_, geom) in zip(rows, geoms):
        area = surveyor_area(geom)
        out_rows.append([name, *(fmt_float(v) for v in vals), fmt_float(area.raw_area), fmt_float(area.normalized_area)])
        lines.append(f"{name}: area {area.raw_area:.4f}, normalized {area.normalized_area:.2f}")
    write_text(os.path.join(args.output_dir, "areas.csv"), csv_text(header, out_rows, meta))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    if not args.objectives:
        raise ConfigurationError("sweep needs at least one --objective metric")
    names = [parse_objective(o).name for o in args.objectives]
    grid = parse_threshold_grid(args.threshold_grid) if args.threshold_grid else DEFAULT_THRESHOLDS
    system = args.system or os.path.splitext(os.path.basename(args.inputs[0]))[0]
    records: dict[str, list] = {}
    for path in args.inputs:
        for model, recs in load_predictions(path).items():
            if model in records:
                raise IngestionError(f"model {model!r} appears in more than one input", path)
            records[model] = recs
    ops = operating_points(records, names, grid)
    rows = [
        [system, op.id, op.model_id, "" if op.threshold is None else fmt_float(op.threshold),
         *(fmt_float(op.raw_metrics[n]) for n in names)]
        for op in ops
    ]
    meta = {"generator": f"paretofair {__version__}", "prediction_rule": TIE_RULE, "caution": F1_CAUTION}
    _emit(csv_text(["system", "model_id", "model", "threshold", *names], rows, meta), args.output)
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    meta: dict[str, Any] = {"generator": f"paretofair {__version__}"}
    if args.use_case:
        sets = list(uc_fixture(args.use_case))
        meta["use_case"] = args.use_case
    else:
        try:
            spec = SynthSpec(args.n_points, args.n_objectives, FrontShape(args.shape), args.spread,
                             args.jitter, args.n_dominated, args.seed)
        except ValueError as exc:
            raise ConfigurationError(str(exc)) from None
        sets = [generate(spec, args.system)]
        meta.update(shape=spec.front_shape.value, seed=spec.seed, prng="splitmix64")
    _emit(solution_csv_text(sets, meta=meta), args.output)
    return 0


COMMANDS = {
    "compare": cmd_compare,
    "pareto": cmd_pareto,
    "dedupe": cmd_dedupe,
    "radar": cmd_radar,
    "sweep": cmd_sweep,
    "synth": cmd_synth,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ConfigurationError, SchemaError) as exc:
        print(f"paretofair: configuration error: {exc}", file=sys.stderr)
        return 2
    except IngestionError as exc:
        print(f"paretofair: input error: {exc}", file=sys.stderr)
        return 1
    except ParetoFairError as exc:
        print(f"paretofair: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"paretofair: I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
