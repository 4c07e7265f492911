"""Multi-objective evaluation of utility/fairness trade-off systems.

Operating points are canonicalized into a maximize-everything unit cube,
deduplicated, reduced to their non-dominated front and scored with HV,
ONVG/ONVGR, UD and OS/AS; five of those are folded into a radar-chart
area in [0, 1].
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .errors import (
    ClampWarning,
    ConfigurationError,
    EvaluationError,
    GeometryError,
    IngestionError,
    ParetoFairError,
    ProtocolError,
    SchemaError,
)
from .indicators import (
    IndicatorReport,
    NicheConfig,
    average_spread,
    capacity,
    hypervolume,
    indicator_report,
    normalize_onvg,
    overall_spread,
    uniform_distribution,
)
from .objectives import (
    CanonicalPoint,
    Direction,
    ObjectiveSchema,
    ObjectiveSpec,
    ReferencePoints,
    canonicalize,
    decanonicalize,
    reference_points,
)
from .pareto import (
    ParetoPartition,
    SolutionPoint,
    SolutionSet,
    deduplicate,
    dominates,
    pareto_partition,
)
from .radar import AreaScore, RadarGeometry, emit_radar_svg, emit_table, radar_geometry, surveyor_area
from .session import SystemResult, compare, evaluate_system
from .synth import FrontShape, SynthSpec, UseCase, generate, uc_fixture
from .tradeoff import (
    OperatingPoint,
    PredictionRecord,
    ThresholdSweep,
    a_posteriori_evaluate,
    a_priori_select,
    build_solution_set,
    confusion_counts,
    fairness_metrics,
    utility_metrics,
)
