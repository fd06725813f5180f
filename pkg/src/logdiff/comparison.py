"""Diff of exactly two discovered DFG models.

Membership is purely structural: an activity or edge is common when its
label (pair of labels) exists on both sides, unique otherwise; metric
differences never change the classification. Unique elements map to the
red visual channel downstream.
"""
from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone

from .discovery import METRICS, Dfg, dfg_performance_view, dfg_to_dict, discover_dfg
from .errors import ValidationError
from .filtering import FilterSpec, apply_filter
from .model import EventLog, LogStatistics, log_statistics

CLASS_COMMON = "common"
CLASS_UNIQUE = "unique"

SIDE_LEFT = "left"
SIDE_RIGHT = "right"

# single source of truth for the red highlight shared by exports and the UI
UNIQUE_RED = "#d62728"


@dataclass(frozen=True)
class ModelSlice:
    """One filtered view of the log: its filter, DFG and statistics together."""

    label: str
    filter: FilterSpec
    dfg: Dfg
    statistics: LogStatistics

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "filter": self.filter.to_dict(),
            "dfg": dfg_to_dict(self.dfg),
            "statistics": self.statistics.to_dict(),
        }


def build_slice(log: EventLog, label: str, spec: FilterSpec) -> tuple[ModelSlice, EventLog]:
    """Filter the log, discover its DFG and compute statistics in one step.

    Returns the slice together with the filtered log it was computed from,
    so statistics and model always describe the same data.
    """
    filtered = apply_filter(log, spec)
    slice_ = ModelSlice(label=label, filter=spec, dfg=discover_dfg(filtered),
                        statistics=log_statistics(filtered))
    return slice_, filtered


@dataclass(frozen=True)
class ComparisonResult:
    left: ModelSlice
    right: ModelSlice
    common_activities: frozenset[str]
    unique_activities_left: frozenset[str]
    unique_activities_right: frozenset[str]
    common_edges: frozenset[tuple[str, str]]
    unique_edges_left: frozenset[tuple[str, str]]
    unique_edges_right: frozenset[tuple[str, str]]
    created_at: datetime


def compare(left: ModelSlice, right: ModelSlice) -> ComparisonResult:
    """Classify both sides' activities and edges as common or unique."""
    left_nodes, right_nodes = left.dfg.node_set, right.dfg.node_set
    left_edges, right_edges = left.dfg.edge_set, right.dfg.edge_set
    return ComparisonResult(
        left=left,
        right=right,
        common_activities=left_nodes & right_nodes,
        unique_activities_left=left_nodes - right_nodes,
        unique_activities_right=right_nodes - left_nodes,
        common_edges=left_edges & right_edges,
        unique_edges_left=left_edges - right_edges,
        unique_edges_right=right_edges - left_edges,
        created_at=datetime.now(timezone.utc).replace(microsecond=0),
    )


def highlight_classes(result: ComparisonResult, side: str) -> dict:
    """Map every node and edge of one side to its class ('common' | 'unique')."""
    if side == SIDE_LEFT:
        slice_, unique_nodes, unique_edges = result.left, result.unique_activities_left, result.unique_edges_left
    elif side == SIDE_RIGHT:
        slice_, unique_nodes, unique_edges = result.right, result.unique_activities_right, result.unique_edges_right
    else:
        raise ValidationError(f"side must be 'left' or 'right', got {side!r}")
    classes: dict = {}
    for activity in slice_.dfg.nodes:
        classes[activity] = CLASS_UNIQUE if activity in unique_nodes else CLASS_COMMON
    for pair in slice_.dfg.edges:
        classes[pair] = CLASS_UNIQUE if pair in unique_edges else CLASS_COMMON
    return classes


def statistics_delta(result: ComparisonResult) -> dict:
    """Absolute differences of the paired statistics, shown between the models."""
    left, right = result.left.statistics, result.right.statistics
    return {
        "case_count": abs(left.case_count - right.case_count),
        "variant_count": abs(left.variant_count - right.variant_count),
        "event_count": abs(left.event_count - right.event_count),
        "avg_case_duration_s": abs(left.avg_case_duration_s - right.avg_case_duration_s),
    }


def _edge_list(edges) -> list:
    return [{"source": s, "target": t} for s, t in sorted(edges)]


def _highlight_dict(result: ComparisonResult, side: str) -> dict:
    classes = highlight_classes(result, side)
    nodes = {k: v for k, v in classes.items() if isinstance(k, str)}
    edges = [
        {"source": k[0], "target": k[1], "class": v}
        for k, v in classes.items() if isinstance(k, tuple)
    ]
    edges.sort(key=lambda e: (e["source"], e["target"]))
    return {"nodes": dict(sorted(nodes.items())), "edges": edges}


def comparison_to_dict(result: ComparisonResult, metric: str = "frequency") -> dict:
    """Canonical JSON form: both slices, classifications, paired statistics.

    ``metric`` selects the performance projection included for the UI and
    exports; ``frequency`` projects edge frequencies instead of durations.
    """
    if metric not in METRICS:
        raise ValidationError(f"unknown metric {metric!r}; expected one of {METRICS}")

    def projection(slice_: ModelSlice) -> list:
        if metric == "frequency":
            values = {pair: stats.frequency for pair, stats in slice_.dfg.edges.items()}
        else:
            values = dfg_performance_view(slice_.dfg, metric)
        return [{"source": s, "target": t, "value": values[(s, t)]}
                for s, t in sorted(values)]

    return {
        "created_at": result.created_at.isoformat(),
        "metric": metric,
        "left": result.left.to_dict(),
        "right": result.right.to_dict(),
        "common_activities": sorted(result.common_activities),
        "unique_activities_left": sorted(result.unique_activities_left),
        "unique_activities_right": sorted(result.unique_activities_right),
        "common_edges": _edge_list(result.common_edges),
        "unique_edges_left": _edge_list(result.unique_edges_left),
        "unique_edges_right": _edge_list(result.unique_edges_right),
        "highlight": {
            "left": _highlight_dict(result, SIDE_LEFT),
            "right": _highlight_dict(result, SIDE_RIGHT),
        },
        "performance": {
            "left": projection(result.left),
            "right": projection(result.right),
        },
        "statistics_delta": statistics_delta(result),
        "unique_color": UNIQUE_RED,
    }
