"""logdiff: compare two filtered slices of an event log via their DFG models."""

from .comparison import (
    CLASS_COMMON,
    CLASS_UNIQUE,
    UNIQUE_RED,
    ComparisonResult,
    ModelSlice,
    build_slice,
    compare,
    comparison_to_dict,
    highlight_classes,
)
from .csv_io import CsvMapping, parse_csv
from .demo import ERA_BOUNDARY, ERA_ONE_START, ERA_TWO_END, generate_demo_log
from .discovery import Dfg, EdgeStats, NodeStats, dfg_performance_view, dfg_to_dict, discover_dfg
from .errors import ConfigurationError, IngestionError, LogDiffError, ParseError, ValidationError
from .export import export_dot, export_variants_csv
from .filtering import (
    AttributeClause,
    FilterSpec,
    TimeWindow,
    apply_filter,
    describe_filter_options,
)
from .model import (
    Event,
    EventLog,
    LogStatistics,
    Trace,
    log_statistics,
    make_log,
    make_trace,
    variants,
)
from .report import export_comparison_report
from .xes import parse_xes, write_xes

__all__ = [
    "AttributeClause", "CLASS_COMMON", "CLASS_UNIQUE", "ComparisonResult",
    "ConfigurationError", "CsvMapping", "Dfg", "ERA_BOUNDARY", "ERA_ONE_START",
    "ERA_TWO_END", "EdgeStats", "Event", "EventLog", "FilterSpec",
    "IngestionError", "LogDiffError", "LogStatistics", "ModelSlice", "NodeStats",
    "ParseError", "Trace", "TimeWindow", "UNIQUE_RED", "ValidationError",
    "apply_filter", "build_slice", "compare", "comparison_to_dict",
    "describe_filter_options", "dfg_performance_view", "dfg_to_dict",
    "discover_dfg", "export_comparison_report", "export_dot",
    "export_variants_csv", "generate_demo_log", "highlight_classes",
    "log_statistics", "make_log", "make_trace", "parse_csv", "parse_xes",
    "variants", "write_xes",
]
