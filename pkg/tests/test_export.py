"""Exporters: DOT, variants CSV, and the printable HTML report."""
from __future__ import annotations

import re
from datetime import datetime, timedelta, timezone

import pytest

from logdiff import (
    FilterSpec,
    UNIQUE_RED,
    ValidationError,
    Event,
    compare,
    discover_dfg,
    export_comparison_report,
    export_dot,
    export_variants_csv,
    highlight_classes,
    log_statistics,
    make_log,
    make_trace,
)
from logdiff.comparison import ModelSlice
from dotcheck import parse_dot

UTC = timezone.utc
T0 = datetime(2020, 1, 1, tzinfo=UTC)


def _log_of(rows, label="x"):
    return make_log(label, [
        make_trace(f"{label}{i}", [Event(a, T0 + timedelta(seconds=60 * j))
                                   for j, a in enumerate(row)])
        for i, row in enumerate(rows)
    ])


def _slice_of(rows, label="x"):
    log = _log_of(rows, label)
    return ModelSlice(label=label, filter=FilterSpec(), dfg=discover_dfg(log),
                      statistics=log_statistics(log))


def test_dot_basic_edge_label():
    dfg = discover_dfg(_log_of(["AB"] * 3))
    dot = export_dot(dfg, "frequency")
    graph = parse_dot(dot)
    assert graph.directed
    assert graph.nodes["A"]["label"] == "A (3)"
    [(source, target, attrs)] = graph.edges
    assert (source, target) == ("A", "B")
    assert attrs["label"] == "3"


def test_dot_unique_node_carries_red():
    left = _slice_of(["AB"], "l")
    right = _slice_of(["A"], "r")
    result = compare(left, right)
    dot = export_dot(left.dfg, "frequency", highlight_classes(result, "left"))
    graph = parse_dot(dot)
    assert graph.nodes["B"]["color"] == UNIQUE_RED
    assert graph.nodes["B"]["fontcolor"] == UNIQUE_RED
    assert "color" not in graph.nodes["A"]


def test_dot_deterministic():
    dfg = discover_dfg(_log_of(["ABC", "ACB", "AB"]))
    assert export_dot(dfg, "mean") == export_dot(dfg, "mean")


def test_dot_duration_label_one_decimal():
    dfg = discover_dfg(_log_of(["AB"]))
    graph = parse_dot(export_dot(dfg, "mean"))
    assert graph.edges[0][2]["label"] == "60.0s"


def test_dot_quoting_of_awkward_labels():
    log = make_log("q", [make_trace("c1", [
        Event('Review, "final"', T0),
        Event("Sign-off \\ archive", T0 + timedelta(seconds=60)),
    ])])
    dot = export_dot(discover_dfg(log), "frequency")
    graph = parse_dot(dot)
    assert 'Review, "final"' in graph.nodes
    assert any(s == 'Review, "final"' for s, _, _ in graph.edges)


def test_dot_unknown_highlight_element_rejected():
    dfg = discover_dfg(_log_of(["AB"]))
    with pytest.raises(ValidationError, match="unknown"):
        export_dot(dfg, "frequency", {"ZZZ": "unique"})


def test_variants_csv_sorted_and_quoted():
    log = _log_of(["AB", "AB", "AC"])
    text = export_variants_csv(log)
    lines = text.strip().splitlines()
    assert lines[0] == "variant,case_count"
    assert lines[1] == "A→B,2"
    assert lines[2] == "A→C,1"


def test_variants_csv_empty_log():
    assert export_variants_csv(make_log("e", [])).strip() == "variant,case_count"


def test_variants_csv_escapes_commas():
    log = make_log("c", [make_trace("c1", [Event("Stop, check", T0)])])
    lines = export_variants_csv(log).strip().splitlines()
    assert lines[1] == '"Stop, check",1'


def test_report_identity_comparison_has_no_red():
    result = compare(_slice_of(["ABC"], "l"), _slice_of(["ABC"], "r"))
    html = export_comparison_report(result, "frequency")
    assert UNIQUE_RED not in html
    assert 'data-status="unique"' not in html
    assert "Statistics" in html


def test_report_empty_side_renders_placeholder():
    result = compare(_slice_of([], "empty"), _slice_of(["AB"], "r"))
    html = export_comparison_report(result, "frequency")
    assert "empty model" in html


def test_report_marks_exactly_the_unique_elements_red():
    left = _slice_of(["ABX"], "l")
    right = _slice_of(["ABY"], "r")
    result = compare(left, right)
    html = export_comparison_report(result, "frequency")

    for pane, expected in (("left", result.unique_activities_left),
                           ("right", result.unique_activities_right)):
        section = re.search(rf'<section class="model" id="model-{pane}">(.*?)</section>',
                            html, re.DOTALL).group(1)
        unique_nodes = set(re.findall(
            r'data-kind="activity" data-label="([^"]*)" data-status="unique"', section))
        assert unique_nodes == expected
        # red ink appears inside unique-status node groups and nowhere in common ones
        for node_markup in re.findall(r'<g class="node"[^>]*data-status="common">.*?</g>',
                                      section, re.DOTALL):
            assert UNIQUE_RED not in node_markup


def test_report_is_self_contained():
    result = compare(_slice_of(["AB"], "l"), _slice_of(["AB"], "r"))
    html = export_comparison_report(result, "mean")
    assert "<style>" in html
    assert "http://" not in html.replace("http://www.w3.org", "")  # only the SVG xmlns
    assert "https://" not in html
    assert "<script" not in html
