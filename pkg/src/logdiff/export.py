"""Downloadable serializations: DOT graphs and the variants CSV.

All exporters are deterministic: nodes, edges and rows are emitted in a
fixed order, so identical inputs give byte-identical output.
"""
from __future__ import annotations

import csv
import io

from .comparison import CLASS_UNIQUE, UNIQUE_RED
from .discovery import METRICS, Dfg
from .errors import ValidationError
from .model import EventLog, variants

VARIANT_SEPARATOR = "→"  # arrow between activity labels


def _quote(identifier: str) -> str:
    escaped = identifier.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _edge_value(stats, metric: str) -> str:
    if metric == "frequency":
        return str(stats.frequency)
    return f"{stats.statistic(metric):.1f}s"


def export_dot(dfg: Dfg, metric: str = "frequency", highlight: dict | None = None) -> str:
    """Render a DFG as a Graphviz digraph.

    Node labels read "activity (frequency)"; edge labels carry the chosen
    metric (frequency unitless, durations as seconds with one decimal).
    Elements classed 'unique' in ``highlight`` get red color attributes.
    """
    if metric not in METRICS:
        raise ValidationError(f"unknown metric {metric!r}; expected one of {METRICS}")
    highlight = highlight or {}
    for element in highlight:
        if isinstance(element, tuple):
            if element not in dfg.edges:
                raise ValidationError(f"highlight references unknown edge {element!r}")
        elif element not in dfg.nodes:
            raise ValidationError(f"highlight references unknown activity {element!r}")

    lines = ["digraph dfg {", "  rankdir=LR;", '  node [shape=box, style=rounded];']
    for activity in sorted(dfg.nodes):
        stats = dfg.nodes[activity]
        attrs = [f'label="{_dot_escape(activity)} ({stats.frequency})"']
        if highlight.get(activity) == CLASS_UNIQUE:
            attrs.append(f'color="{UNIQUE_RED}"')
            attrs.append(f'fontcolor="{UNIQUE_RED}"')
        lines.append(f"  {_quote(activity)} [{', '.join(attrs)}];")
    for pair in sorted(dfg.edges):
        source, target = pair
        attrs = [f'label="{_edge_value(dfg.edges[pair], metric)}"']
        if highlight.get(pair) == CLASS_UNIQUE:
            attrs.append(f'color="{UNIQUE_RED}"')
            attrs.append(f'fontcolor="{UNIQUE_RED}"')
        lines.append(f"  {_quote(source)} -> {_quote(target)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def export_variants_csv(log: EventLog) -> str:
    """CSV of variants: header ``variant,case_count``, activities joined by an arrow.

    Rows are sorted by descending case count, then lexicographically.
    """
    counts = variants(log)
    buffer = io.StringIO()
    writer = csv.writer(buffer)  # RFC-4180: CRLF line endings, minimal quoting
    writer.writerow(["variant", "case_count"])
    for sequence in sorted(counts, key=lambda seq: (-counts[seq], seq)):
        writer.writerow([VARIANT_SEPARATOR.join(sequence), counts[sequence]])
    return buffer.getvalue()
