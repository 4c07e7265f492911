"""CSV reading/writing helpers and the auditable metadata header."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from typing import Any, Iterable, Iterator, Mapping

from .errors import IngestionError

META_PREFIX = "# "


def fmt_float(x: float) -> str:
    """Shortest round-trip representation."""
    return repr(float(x))


def config_hash(config: Mapping[str, Any]) -> str:
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


def metadata_lines(meta: Mapping[str, Any]) -> list[str]:
    return [f"{META_PREFIX}{k}={meta[k]}" for k in meta]


def write_text(path: str | os.PathLike, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def csv_text(header: list[str], rows: Iterable[list[str]], meta: Mapping[str, Any] | None = None) -> str:
    buf = io.StringIO()
    for line in metadata_lines(meta or {}):
        buf.write(line + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def read_csv(path: str | os.PathLike) -> tuple[list[str], Iterator[tuple[int, dict[str, str]]]]:
    """Return (header, iterator of (line number, row dict)); '#' lines are skipped."""
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise IngestionError(f"cannot read file ({exc.strerror})", path) from exc
    numbered = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not numbered:
        raise IngestionError("no header row", path)
    header_line, header_text = numbered[0]
    header = [h.strip() for h in next(csv.reader([header_text]))]
    if len(set(header)) != len(header):
        raise IngestionError("duplicate column names in header", path, header_line)

    def rows() -> Iterator[tuple[int, dict[str, str]]]:
        for lineno, text in numbered[1:]:
            values = next(csv.reader([text]))
            if len(values) != len(header):
                raise IngestionError(
                    f"expected {len(header)} fields, found {len(values)}", path, lineno
                )
            yield lineno, {h: v.strip() for h, v in zip(header, values)}

    return header, rows()


def parse_float(value: str, column: str, path: str, line: int) -> float:
    try:
        return float(value)
    except ValueError:
        raise IngestionError(f"column {column!r}: not a number: {value!r}", path, line) from None
