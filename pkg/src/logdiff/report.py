"""Self-contained printable HTML report of one comparison.

Single file, inline styles, graphs embedded as static inline SVG (no
external fetches), so a browser can print it straight to PDF. Layout
mirrors the analyst view: the two models side by side with the paired
statistics between them; unique elements are red.
"""
from __future__ import annotations

import html
from collections import deque

from .comparison import CLASS_UNIQUE, UNIQUE_RED, ComparisonResult, highlight_classes, statistics_delta
from .discovery import METRICS, Dfg
from .errors import ValidationError
from .export import _edge_value
from .filtering import FilterSpec

NODE_HEIGHT = 34
ROW_GAP = 72
COLUMN_GAP = 80
MARGIN = 24
COMMON_INK = "#2b2b2b"
EDGE_INK = "#7a7a7a"


def _node_width(label: str) -> int:
    return max(96, 26 + 8 * len(label))


def _layer_depths(dfg: Dfg) -> dict[str, int]:
    """BFS depth from the start activities; every node is reachable from a start."""
    adjacency: dict[str, list[str]] = {}
    for source, target in sorted(dfg.edges):
        adjacency.setdefault(source, []).append(target)
    depth: dict[str, int] = {}
    queue: deque[str] = deque()
    for activity in sorted(dfg.start_activities):
        if activity not in depth:
            depth[activity] = 0
            queue.append(activity)
    while queue:
        current = queue.popleft()
        for nxt in adjacency.get(current, ()):
            if nxt not in depth:
                depth[nxt] = depth[current] + 1
                queue.append(nxt)
    for activity in sorted(dfg.nodes):  # defensive: orphan nodes land in layer 0
        depth.setdefault(activity, 0)
    return depth


def _positions(dfg: Dfg) -> tuple[dict[str, tuple[float, float, float]], float, float]:
    """Deterministic layered left-to-right placement: activity -> (x, y, width)."""
    depth = _layer_depths(dfg)
    layers: dict[int, list[str]] = {}
    for activity in sorted(depth):
        layers.setdefault(depth[activity], []).append(activity)

    column_x: dict[int, float] = {}
    x = float(MARGIN)
    for layer in sorted(layers):
        column_x[layer] = x
        x += max(_node_width(a) for a in layers[layer]) + COLUMN_GAP
    width = x - COLUMN_GAP + MARGIN

    positions: dict[str, tuple[float, float, float]] = {}
    max_rows = max((len(members) for members in layers.values()), default=0)
    for layer, members in layers.items():
        for row, activity in enumerate(members):
            y = MARGIN + row * ROW_GAP
            positions[activity] = (column_x[layer], y, float(_node_width(activity)))
    height = MARGIN * 2 + max(max_rows - 1, 0) * ROW_GAP + NODE_HEIGHT
    return positions, width, height


def _edge_path(source_box, target_box, self_loop: bool) -> tuple[str, float, float]:
    """SVG path plus the label anchor point."""
    sx, sy, sw = source_box
    tx, ty, _ = target_box
    if self_loop:
        cx = sx + sw / 2
        top = sy
        path = (f"M {cx - 14:.1f} {top:.1f} C {cx - 24:.1f} {top - 34:.1f}, "
                f"{cx + 24:.1f} {top - 34:.1f}, {cx + 14:.1f} {top:.1f}")
        return path, cx, top - 28
    start = (sx + sw, sy + NODE_HEIGHT / 2)
    end = (tx, ty + NODE_HEIGHT / 2)
    if end[0] <= start[0]:  # backward edge: dip below both nodes
        dip = max(sy, ty) + NODE_HEIGHT + 26
        path = (f"M {sx + sw / 2:.1f} {sy + NODE_HEIGHT:.1f} C {sx + sw / 2:.1f} {dip:.1f}, "
                f"{tx + target_box[2] / 2:.1f} {dip:.1f}, {tx + target_box[2] / 2:.1f} {ty + NODE_HEIGHT:.1f}")
        return path, (sx + sw / 2 + tx + target_box[2] / 2) / 2, dip - 6
    mid_x = (start[0] + end[0]) / 2
    path = (f"M {start[0]:.1f} {start[1]:.1f} C {mid_x:.1f} {start[1]:.1f}, "
            f"{mid_x:.1f} {end[1]:.1f}, {end[0]:.1f} {end[1]:.1f}")
    return path, mid_x, (start[1] + end[1]) / 2 - 6


def render_dfg_svg(dfg: Dfg, metric: str, classes: dict) -> str:
    """Static SVG rendering of one annotated DFG with red unique elements."""
    if not dfg.nodes:
        return '<div class="empty">empty model &mdash; no cases matched this filter</div>'
    positions, width, height = _positions(dfg)
    height += 40  # headroom for self-loop arcs and backward edges

    def marker(name: str, ink: str) -> str:
        return (f'<marker id="arrow-{name}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" '
                f'markerHeight="7" orient="auto-start-reverse">'
                f'<path d="M 0 0 L 10 5 L 0 10 z" fill="{ink}"/></marker>')

    # the red marker is only defined when something is unique, so common-only
    # panes carry no red channel at all
    markers = marker("common", EDGE_INK)
    if any(classes.get(pair) == CLASS_UNIQUE for pair in dfg.edges):
        markers += marker("unique", UNIQUE_RED)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 -40 {width:.0f} {height:.0f}" '
        f'width="100%" role="img">',
        f"<defs>{markers}</defs>",
    ]

    for pair in sorted(dfg.edges):
        source, target = pair
        unique = classes.get(pair) == CLASS_UNIQUE
        ink = UNIQUE_RED if unique else EDGE_INK
        marker = "arrow-unique" if unique else "arrow-common"
        dash = ' stroke-dasharray="6 3"' if unique else ""
        path, label_x, label_y = _edge_path(positions[source], positions[target], source == target)
        status = CLASS_UNIQUE if unique else "common"
        parts.append(
            f'<g class="edge" data-kind="edge" data-source="{html.escape(source, quote=True)}" '
            f'data-target="{html.escape(target, quote=True)}" data-status="{status}">'
            f'<path d="{path}" fill="none" stroke="{ink}" stroke-width="1.4"{dash} '
            f'marker-end="url(#{marker})"/>'
            f'<text x="{label_x:.1f}" y="{label_y:.1f}" text-anchor="middle" font-size="11" '
            f'fill="{ink}">{html.escape(_edge_value(dfg.edges[pair], metric))}</text></g>')

    for activity in sorted(dfg.nodes):
        x, y, w = positions[activity]
        unique = classes.get(activity) == CLASS_UNIQUE
        ink = UNIQUE_RED if unique else COMMON_INK
        border = UNIQUE_RED if unique else "#9a9a9a"
        status = CLASS_UNIQUE if unique else "common"
        label = f"{activity} ({dfg.nodes[activity].frequency})"
        parts.append(
            f'<g class="node" data-kind="activity" data-label="{html.escape(activity, quote=True)}" '
            f'data-status="{status}">'
            f'<rect x="{x:.1f}" y="{y:.1f}" width="{w:.0f}" height="{NODE_HEIGHT}" rx="8" '
            f'fill="#ffffff" stroke="{border}" stroke-width="{2 if unique else 1.2}"/>'
            f'<text x="{x + w / 2:.1f}" y="{y + NODE_HEIGHT / 2 + 4:.1f}" text-anchor="middle" '
            f'font-size="12" fill="{ink}">{html.escape(label)}</text></g>')

    parts.append("</svg>")
    return "".join(parts)


def describe_filter(spec: FilterSpec) -> str:
    """Compact human-readable rendering of a filter for captions."""
    pieces = []
    for clause in spec.attribute_clauses:
        values = ", ".join(sorted(str(v) for v in clause.allowed_values))
        pieces.append(f"{clause.key} ∈ {{{values}}} ({clause.level})")
    if spec.time_window is not None:
        window = spec.time_window
        pieces.append(
            f"time [{window.start.isoformat()} → {window.end.isoformat()}) {window.mode}")
    return "; ".join(pieces) if pieces else "no filter (full log)"


def _statistics_table(result: ComparisonResult) -> str:
    left, right = result.left.statistics, result.right.statistics
    delta = statistics_delta(result)
    rows = [
        ("cases", left.case_count, delta["case_count"], right.case_count),
        ("variants", left.variant_count, delta["variant_count"], right.variant_count),
        ("events", left.event_count, delta["event_count"], right.event_count),
        ("avg case duration", f"{left.avg_case_duration_s:.1f} s",
         f"{delta['avg_case_duration_s']:.1f} s", f"{right.avg_case_duration_s:.1f} s"),
    ]
    body = "".join(
        f"<tr><th>{html.escape(name)}</th><td>{l}</td><td class=\"delta\">{d}</td><td>{r}</td></tr>"
        for name, l, d, r in rows)
    return (
        '<table class="stats"><thead><tr><th></th>'
        f"<th>{html.escape(result.left.label)}</th><th>|Δ|</th>"
        f"<th>{html.escape(result.right.label)}</th></tr></thead>"
        f"<tbody>{body}</tbody></table>")


def _unique_list(activities: frozenset[str]) -> str:
    if not activities:
        return '<p class="none">no unique activities</p>'
    items = "".join(f'<li style="color:{UNIQUE_RED}">{html.escape(a)}</li>' for a in sorted(activities))
    return f"<ul>{items}</ul>"


def export_comparison_report(result: ComparisonResult, metric: str = "frequency") -> str:
    """One printable HTML document with both models, red-highlighted diffs and statistics."""
    if metric not in METRICS:
        raise ValidationError(f"unknown metric {metric!r}; expected one of {METRICS}")
    left_svg = render_dfg_svg(result.left.dfg, metric, highlight_classes(result, "left"))
    right_svg = render_dfg_svg(result.right.dfg, metric, highlight_classes(result, "right"))

    style = f"""
    body {{ font-family: -apple-system, 'Segoe UI', Helvetica, Arial, sans-serif;
           margin: 28px; color: {COMMON_INK}; }}
    h1 {{ font-size: 20px; margin-bottom: 2px; }}
    h2 {{ font-size: 15px; margin: 4px 0; }}
    .meta {{ color: #666; font-size: 12px; margin-top: 0; }}
    .filter {{ color: #555; font-size: 12px; font-style: italic; }}
    .layout {{ display: flex; gap: 18px; align-items: flex-start; }}
    .model {{ flex: 1 1 40%; border: 1px solid #ddd; border-radius: 8px; padding: 12px; }}
    .between {{ flex: 0 0 230px; }}
    table.stats {{ border-collapse: collapse; font-size: 12px; width: 100%; }}
    table.stats th, table.stats td {{ border: 1px solid #ccc; padding: 4px 7px; text-align: right; }}
    table.stats th {{ background: #f4f4f4; }}
    td.delta {{ font-weight: 600; }}
    .empty {{ padding: 40px 10px; text-align: center; color: #888; border: 1px dashed #bbb;
             border-radius: 8px; }}
    .none {{ color: #888; font-size: 12px; }}
    ul {{ margin: 4px 0; padding-left: 18px; font-size: 12px; }}
    @media print {{ .layout {{ display: block; }} .model {{ margin-bottom: 16px; }} }}
    """

    return f"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Model comparison report</title>
<style>{style}</style>
</head>
<body>
<h1>Model comparison report</h1>
<p class="meta">created {html.escape(result.created_at.isoformat())} &middot; edge metric: {html.escape(metric)}
 &middot; red marks elements not present in the other model</p>
<div class="layout">
  <section class="model" id="model-left">
    <h2>{html.escape(result.left.label)}</h2>
    <p class="filter">{html.escape(describe_filter(result.left.filter))}</p>
    {left_svg}
    <h2>Unique activities</h2>
    {_unique_list(result.unique_activities_left)}
  </section>
  <section class="between">
    <h2>Statistics</h2>
    {_statistics_table(result)}
  </section>
  <section class="model" id="model-right">
    <h2>{html.escape(result.right.label)}</h2>
    <p class="filter">{html.escape(describe_filter(result.right.filter))}</p>
    {right_svg}
    <h2>Unique activities</h2>
    {_unique_list(result.unique_activities_right)}
  </section>
</div>
</body>
</html>
"""
