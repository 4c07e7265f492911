"""Exception hierarchy shared by every stage of the pipeline."""

from __future__ import annotations


class ParetoFairError(Exception):
    """Base class for all package errors."""


class SchemaError(ParetoFairError):
    """Point dimensionality or column layout does not match the objective schema."""


class ConfigurationError(ParetoFairError):
    """Invalid run configuration (bad bounds, unknown metric, missing keys)."""


class EvaluationError(ParetoFairError):
    """An indicator or metric cannot be evaluated on the given input."""


class GeometryError(ParetoFairError):
    """Radar geometry preconditions violated."""


class ProtocolError(ParetoFairError):
    """A priori selection refers to operating points absent from the test data."""


class IngestionError(ParetoFairError):
    """Malformed input file. Carries the path and 1-based line number when known."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{where}{message}")


class ClampWarning(UserWarning):
    """Raw metric value fell outside the declared objective bounds and was clamped."""
