"""Two-model diff classification: set identities, symmetry, soundness."""
from __future__ import annotations

import random
from datetime import datetime, timedelta, timezone

from logdiff import (
    ERA_BOUNDARY,
    ERA_ONE_START,
    ERA_TWO_END,
    Event,
    FilterSpec,
    TimeWindow,
    build_slice,
    compare,
    comparison_to_dict,
    discover_dfg,
    highlight_classes,
    log_statistics,
    make_log,
    make_trace,
)
from logdiff.comparison import CLASS_COMMON, CLASS_UNIQUE, ModelSlice
from oracles import node_edge_sets
from randlogs import random_raw_traces, to_event_log

UTC = timezone.utc
T0 = datetime(2020, 1, 1, tzinfo=UTC)


def _slice_of(activity_rows: list[str], label="s") -> ModelSlice:
    traces = [
        make_trace(f"{label}{i}", [
            Event(a, T0 + timedelta(seconds=j * 60)) for j, a in enumerate(row)
        ])
        for i, row in enumerate(activity_rows)
    ]
    log = make_log(label, traces)
    return ModelSlice(label=label, filter=FilterSpec(), dfg=discover_dfg(log),
                      statistics=log_statistics(log))


def test_identical_models_have_empty_unique_sets():
    left = _slice_of(["ABC", "AC"], "l")
    right = _slice_of(["ABC", "AC"], "r")
    result = compare(left, right)
    assert result.unique_activities_left == frozenset()
    assert result.unique_activities_right == frozenset()
    assert result.common_activities == frozenset("ABC")
    assert result.common_edges == left.dfg.edge_set


def test_node_set_difference():
    result = compare(_slice_of(["AB"]), _slice_of(["BC"]))
    assert result.unique_activities_left == {"A"}
    assert result.unique_activities_right == {"C"}
    assert result.common_activities == {"B"}


def test_edge_difference_with_equal_node_sets():
    left = _slice_of(["AB"])
    right = _slice_of(["AB", "BA"])
    result = compare(left, right)
    assert result.unique_activities_left == frozenset()
    assert result.unique_activities_right == frozenset()
    assert result.common_edges == {("A", "B")}
    assert result.unique_edges_right == {("B", "A")}
    assert result.unique_edges_left == frozenset()


def test_highlight_classes_cover_every_element():
    left = _slice_of(["ABC"])
    right = _slice_of(["AC"])
    result = compare(left, right)
    classes = highlight_classes(result, "left")
    for activity in left.dfg.nodes:
        assert classes[activity] in (CLASS_COMMON, CLASS_UNIQUE)
    for edge in left.dfg.edges:
        assert classes[edge] in (CLASS_COMMON, CLASS_UNIQUE)
    assert classes["B"] == CLASS_UNIQUE
    assert classes["A"] == CLASS_COMMON


def test_metric_differences_do_not_make_elements_unique():
    # same structure, very different frequencies: everything stays common
    left = _slice_of(["AB"] * 10, "l")
    right = _slice_of(["AB"], "r")
    result = compare(left, right)
    assert result.unique_activities_left == frozenset()
    assert result.unique_edges_left == frozenset()


def test_random_pairs_satisfy_identities_symmetry_and_soundness():
    rng = random.Random(31)
    for _ in range(60):
        left = _random_slice(rng, "L")
        right = _random_slice(rng, "R")
        result = compare(left, right)

        left_nodes, right_nodes = left.dfg.node_set, right.dfg.node_set
        # set identities: unique = set difference, disjoint union reconstructs each side
        assert result.unique_activities_left == left_nodes - right_nodes
        assert result.unique_activities_right == right_nodes - left_nodes
        assert result.common_activities | result.unique_activities_left == left_nodes
        assert result.common_activities & result.unique_activities_left == frozenset()
        assert result.common_edges | result.unique_edges_left == left.dfg.edge_set
        assert result.common_edges & result.unique_edges_left == frozenset()

        # swap symmetry
        swapped = compare(right, left)
        assert swapped.unique_activities_right == result.unique_activities_left
        assert swapped.unique_edges_right == result.unique_edges_left
        assert swapped.common_activities == result.common_activities
        assert swapped.common_edges == result.common_edges

        # soundness: unique elements absent on the other side, common present on both
        for activity in result.unique_activities_left:
            assert activity not in right.dfg.nodes
        for activity in result.common_activities:
            assert activity in left.dfg.nodes and activity in right.dfg.nodes

        # self-comparison yields empty unique sets
        self_result = compare(left, left)
        assert self_result.unique_activities_left == frozenset()
        assert self_result.unique_edges_right == frozenset()


def _random_slice(rng: random.Random, label: str) -> ModelSlice:
    raw = random_raw_traces(rng, max_cases=12, max_events=8, max_alphabet=6)
    log = to_event_log(raw, label)
    return ModelSlice(label=label, filter=FilterSpec(), dfg=discover_dfg(log),
                      statistics=log_statistics(log))


def test_demo_half_era_split_matches_bruteforce(demo_log):
    left_slice, left_log = build_slice(demo_log, "first era", FilterSpec(
        time_window=TimeWindow(ERA_ONE_START, ERA_BOUNDARY, "intersecting")))
    right_slice, right_log = build_slice(demo_log, "second era", FilterSpec(
        time_window=TimeWindow(ERA_BOUNDARY, ERA_TWO_END, "intersecting")))
    result = compare(left_slice, right_slice)

    def raw(log):
        return {t.case_id: [(e.activity, e.timestamp) for e in t.events] for t in log.traces}

    left_nodes, left_edges = node_edge_sets(raw(left_log))
    right_nodes, right_edges = node_edge_sets(raw(right_log))
    assert result.unique_activities_left == left_nodes - right_nodes
    assert result.unique_activities_right == right_nodes - left_nodes
    assert result.unique_edges_left == left_edges - right_edges
    assert result.unique_edges_right == right_edges - left_edges
    assert result.unique_activities_left and result.unique_activities_right


def test_comparison_json_contract():
    result = compare(_slice_of(["ABC"], "l"), _slice_of(["AC"], "r"))
    payload = comparison_to_dict(result, "frequency")
    assert payload["metric"] == "frequency"
    assert payload["unique_activities_left"] == ["B"]
    assert payload["highlight"]["left"]["nodes"]["B"] == "unique"
    assert payload["statistics_delta"]["case_count"] == 0
    assert {e["source"] for e in payload["performance"]["left"]} == {"A", "B"}
    assert payload["unique_color"].startswith("#")
