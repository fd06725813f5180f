"""Directly-follows graph discovery with frequency and performance annotations.

One pass over each trace's timestamp-sorted events: every consecutive
activity pair becomes (or increments) an edge and contributes the pair's
timestamp difference to that edge's duration aggregate. Self-loops are
ordinary edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from statistics import median

from .errors import ValidationError
from .model import EventLog

PERFORMANCE_STATISTICS = ("mean", "median", "min", "max")
METRICS = ("frequency",) + PERFORMANCE_STATISTICS


@dataclass(frozen=True)
class NodeStats:
    frequency: int  # total event occurrences of the activity
    case_coverage: int  # distinct cases containing it


@dataclass(frozen=True)
class EdgeStats:
    frequency: int
    mean_s: float
    median_s: float
    min_s: float
    max_s: float

    def statistic(self, name: str) -> float:
        if name == "mean":
            return self.mean_s
        if name == "median":
            return self.median_s
        if name == "min":
            return self.min_s
        if name == "max":
            return self.max_s
        raise ValidationError(f"unknown duration statistic {name!r}; expected one of {PERFORMANCE_STATISTICS}")


@dataclass(frozen=True)
class Dfg:
    nodes: dict[str, NodeStats]
    edges: dict[tuple[str, str], EdgeStats]
    start_activities: dict[str, int]  # cases beginning there
    end_activities: dict[str, int]  # cases ending there
    source_case_count: int

    @property
    def node_set(self) -> frozenset[str]:
        return frozenset(self.nodes)

    @property
    def edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges)


def discover_dfg(log: EventLog) -> Dfg:
    node_frequency: dict[str, int] = {}
    node_cases: dict[str, set[str]] = {}
    edge_frequency: dict[tuple[str, str], int] = {}
    edge_durations: dict[tuple[str, str], list[float]] = {}
    starts: dict[str, int] = {}
    ends: dict[str, int] = {}

    for trace in log.traces:
        events = trace.events
        starts[events[0].activity] = starts.get(events[0].activity, 0) + 1
        ends[events[-1].activity] = ends.get(events[-1].activity, 0) + 1
        for event in events:
            node_frequency[event.activity] = node_frequency.get(event.activity, 0) + 1
            node_cases.setdefault(event.activity, set()).add(trace.case_id)
        for left, right in zip(events, events[1:]):
            pair = (left.activity, right.activity)
            edge_frequency[pair] = edge_frequency.get(pair, 0) + 1
            edge_durations.setdefault(pair, []).append(
                (right.timestamp - left.timestamp).total_seconds())

    nodes = {
        activity: NodeStats(frequency=node_frequency[activity],
                            case_coverage=len(node_cases[activity]))
        for activity in node_frequency
    }
    edges = {}
    for pair, samples in edge_durations.items():
        edges[pair] = EdgeStats(
            frequency=edge_frequency[pair],
            mean_s=sum(samples) / len(samples),
            median_s=median(samples),
            min_s=min(samples),
            max_s=max(samples),
        )
    return Dfg(nodes=nodes, edges=edges, start_activities=starts,
               end_activities=ends, source_case_count=len(log.traces))


def dfg_performance_view(dfg: Dfg, statistic: str) -> dict[tuple[str, str], float]:
    """Project one duration statistic (mean|median|min|max) per edge, in seconds."""
    if statistic not in PERFORMANCE_STATISTICS:
        raise ValidationError(
            f"unknown duration statistic {statistic!r}; expected one of {PERFORMANCE_STATISTICS}")
    return {pair: stats.statistic(statistic) for pair, stats in dfg.edges.items()}


def dfg_to_dict(dfg: Dfg) -> dict:
    """Canonical JSON form; edges sorted by (source, target) for determinism."""
    return {
        "nodes": {
            activity: {"frequency": stats.frequency, "case_coverage": stats.case_coverage}
            for activity, stats in sorted(dfg.nodes.items())
        },
        "edges": [
            {
                "source": source, "target": target,
                "frequency": stats.frequency,
                "mean_s": stats.mean_s, "median_s": stats.median_s,
                "min_s": stats.min_s, "max_s": stats.max_s,
            }
            for (source, target), stats in sorted(dfg.edges.items())
        ],
        "start_activities": dict(sorted(dfg.start_activities.items())),
        "end_activities": dict(sorted(dfg.end_activities.items())),
        "source_case_count": dfg.source_case_count,
    }
