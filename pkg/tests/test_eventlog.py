"""Event-log model, XES/CSV ingestion, variants and statistics."""
from __future__ import annotations

from datetime import datetime, timezone

import pytest

from logdiff import (
    CsvMapping,
    Event,
    IngestionError,
    ParseError,
    log_statistics,
    make_log,
    make_trace,
    parse_csv,
    parse_xes,
    variants,
    write_xes,
)
from oracles import statistics_reference

UTC = timezone.utc

MINIMAL_XES = b"""<?xml version="1.0" encoding="UTF-8"?>
<log xes.version="1.0">
  <trace>
    <string key="concept:name" value="c1"/>
    <event>
      <string key="concept:name" value="A"/>
      <date key="time:timestamp" value="2020-01-01T00:00:00Z"/>
    </event>
    <event>
      <string key="concept:name" value="B"/>
      <date key="time:timestamp" value="2020-01-01T01:00:00Z"/>
    </event>
  </trace>
</log>
"""


def test_parse_minimal_xes():
    log = parse_xes(MINIMAL_XES)
    assert len(log.traces) == 1
    trace = log.traces[0]
    assert trace.case_id == "c1"
    assert trace.activity_sequence == ("A", "B")
    assert trace.events[0].timestamp == datetime(2020, 1, 1, tzinfo=UTC)


def test_parse_xes_resorts_out_of_order_events():
    # B listed first at t+1h, A second at t
    doc = b"""<?xml version="1.0"?>
<log xes.version="1.0">
  <trace>
    <string key="concept:name" value="c1"/>
    <event>
      <string key="concept:name" value="B"/>
      <date key="time:timestamp" value="2020-01-01T01:00:00Z"/>
    </event>
    <event>
      <string key="concept:name" value="A"/>
      <date key="time:timestamp" value="2020-01-01T00:00:00Z"/>
    </event>
  </trace>
</log>
"""
    log = parse_xes(doc)
    assert log.traces[0].activity_sequence == ("A", "B")


def test_parse_xes_missing_timestamp_names_trace_and_index():
    doc = b"""<?xml version="1.0"?>
<log xes.version="1.0">
  <trace>
    <string key="concept:name" value="c1"/>
    <event>
      <string key="concept:name" value="A"/>
    </event>
  </trace>
</log>
"""
    with pytest.raises(IngestionError) as err:
        parse_xes(doc)
    assert "c1" in str(err.value)
    assert "event index 0" in str(err.value)


def test_parse_xes_missing_activity_is_rejected():
    doc = b"""<?xml version="1.0"?>
<log xes.version="1.0">
  <trace>
    <string key="concept:name" value="c1"/>
    <event>
      <date key="time:timestamp" value="2020-01-01T00:00:00Z"/>
    </event>
  </trace>
</log>
"""
    with pytest.raises(IngestionError, match="concept:name"):
        parse_xes(doc)


def test_parse_xes_trace_without_case_id_is_rejected():
    doc = MINIMAL_XES.replace(b'<string key="concept:name" value="c1"/>', b"")
    with pytest.raises(IngestionError, match="concept:name"):
        parse_xes(doc)


def test_parse_xes_empty_trace_is_rejected():
    doc = b"""<?xml version="1.0"?>
<log xes.version="1.0">
  <trace>
    <string key="concept:name" value="c1"/>
  </trace>
</log>
"""
    with pytest.raises(IngestionError, match="no events"):
        parse_xes(doc)


def test_parse_xes_malformed_xml_reports_position():
    with pytest.raises(ParseError) as err:
        parse_xes(b"<log><trace></log>")
    assert err.value.line == 1
    assert "line 1" in str(err.value)


def test_parse_xes_rejects_nested_attributes():
    doc = b"""<?xml version="1.0"?>
<log xes.version="1.0">
  <trace>
    <string key="concept:name" value="c1"/>
    <event>
      <string key="concept:name" value="A"/>
      <date key="time:timestamp" value="2020-01-01T00:00:00Z"/>
      <list key="nested"><string key="x" value="y"/></list>
    </event>
  </trace>
</log>
"""
    with pytest.raises(IngestionError, match="nested"):
        parse_xes(doc)


def test_xes_round_trip_minimal():
    log = parse_xes(MINIMAL_XES)
    assert parse_xes(write_xes(log)) == log


def test_write_xes_empty_log():
    log = make_log("empty", [])
    data = write_xes(log)
    assert b"<trace>" not in data
    assert parse_xes(data) == log


def test_write_xes_preserves_case_attribute():
    trace = make_trace("c1", [Event("A", datetime(2020, 1, 1, tzinfo=UTC))], {"ward": "ICU"})
    data = write_xes(make_log("w", [trace]))
    assert b'key="ward" value="ICU"' in data
    assert parse_xes(data).traces[0].attributes["ward"] == "ICU"


def test_equal_timestamps_keep_ingestion_order():
    ts = datetime(2020, 5, 5, 12, 0, tzinfo=UTC)
    events = [Event("X", ts, {"seq": 1}), Event("Y", ts, {"seq": 2}), Event("Z", ts, {"seq": 3})]
    trace = make_trace("c1", events)
    assert trace.activity_sequence == ("X", "Y", "Z")


def test_parse_xes_keeps_document_order_for_equal_timestamps(corpus_dir):
    log = parse_xes((corpus_dir / "03_equal_timestamps.xes").read_bytes())
    trace = log.traces[0]
    assert trace.activity_sequence == ("X", "Y", "Z")
    assert [e.attributes["seq"] for e in trace.events] == [1, 2, 3]


def test_duplicate_case_ids_rejected():
    ev = [Event("A", datetime(2020, 1, 1, tzinfo=UTC))]
    with pytest.raises(IngestionError, match="duplicate"):
        make_log("dup", [make_trace("c1", ev), make_trace("c1", ev)])


CSV_DATA = (
    "case,activity,when,ward\n"
    "c1,A,2020-01-01 00:00:00,ICU\n"
    "c1,B,2020-01-01 01:00:00,ICU\n"
    "c2,A,2020-01-02 00:00:00,WARD\n"
)
CSV_MAPPING = CsvMapping("case", "activity", "when", "%Y-%m-%d %H:%M:%S")


def test_parse_csv_groups_rows_into_traces():
    log = parse_csv(CSV_DATA.encode(), CSV_MAPPING)
    assert len(log.traces) == 2
    assert sum(len(t.events) for t in log.traces) == 3
    c1 = log.trace_by_case_id("c1")
    assert c1.activity_sequence == ("A", "B")
    assert c1.events[0].attributes == {"ward": "ICU"}


def test_parse_csv_sorts_shuffled_rows():
    shuffled = (
        "case,activity,when\n"
        "c1,B,2020-01-01 02:00:00\n"
        "c1,A,2020-01-01 01:00:00\n"
    )
    log = parse_csv(shuffled.encode(), CsvMapping("case", "activity", "when", "%Y-%m-%d %H:%M:%S"))
    assert log.traces[0].activity_sequence == ("A", "B")


def test_parse_csv_bad_timestamp_cites_row():
    bad = (
        "case,activity,when\n"
        "c1,A,2020-01-01 01:00:00\n"
        "c1,B,2020-01-01 02:00:00\n"
        "c1,C,not-a-date\n"
    )
    with pytest.raises(IngestionError, match="row 4"):
        parse_csv(bad.encode(), CsvMapping("case", "activity", "when", "%Y-%m-%d %H:%M:%S"))


def test_parse_csv_missing_mapped_column():
    from logdiff import ConfigurationError

    with pytest.raises(ConfigurationError, match="'missing'"):
        parse_csv(CSV_DATA.encode(), CsvMapping("case", "activity", "missing", "%Y"))


def test_variants_counts():
    t = datetime(2020, 1, 1, tzinfo=UTC)

    def mk(cid, seq):
        return make_trace(cid, [Event(a, t) for a in seq])

    log = make_log("v", [mk("c1", "AB"), mk("c2", "AB"), mk("c3", "AC")])
    assert variants(log) == {("A", "B"): 2, ("A", "C"): 1}


def test_variants_empty_log():
    assert variants(make_log("e", [])) == {}


def test_variants_all_same():
    t = datetime(2020, 1, 1, tzinfo=UTC)
    log = make_log("s", [make_trace(f"c{i}", [Event("A", t)]) for i in range(5)])
    assert variants(log) == {("A",): 5}
    stats = log_statistics(log)
    assert stats.variant_count == 1
    assert stats.case_count == 5


def test_statistics_mean_duration():
    t0 = datetime(2020, 1, 1, tzinfo=UTC)

    def mk(cid, seconds):
        from datetime import timedelta

        return make_trace(cid, [Event("A", t0), Event("B", t0 + timedelta(seconds=seconds))])

    stats = log_statistics(make_log("d", [mk("c1", 100), mk("c2", 300)]))
    assert stats.avg_case_duration_s == 200.0


def test_statistics_single_event_case_contributes_zero():
    t0 = datetime(2020, 1, 1, tzinfo=UTC)
    stats = log_statistics(make_log("z", [make_trace("c1", [Event("A", t0)])]))
    assert stats.avg_case_duration_s == 0.0


def test_statistics_empty_log_duration_zero():
    stats = log_statistics(make_log("e", []))
    assert stats.case_count == 0
    assert stats.avg_case_duration_s == 0.0


def test_demo_log_statistics_match_bruteforce(demo_log):
    raw = {t.case_id: [(e.activity, e.timestamp) for e in t.events] for t in demo_log.traces}
    expected = statistics_reference(raw)
    stats = log_statistics(demo_log)
    assert stats.case_count == expected["case_count"]
    assert stats.variant_count == expected["variant_count"]
    assert stats.event_count == expected["event_count"]
    assert stats.avg_case_duration_s == pytest.approx(expected["avg_case_duration_s"], abs=1e-3)
    # frozen values computed by the oracle above, pinning generator determinism
    assert stats.case_count == 500
    assert stats.variant_count == 19
    assert stats.event_count == 2688
    assert stats.avg_case_duration_s == pytest.approx(562284.492, abs=1e-3)


def test_event_count_equals_per_trace_sum(demo_log):
    assert log_statistics(demo_log).event_count == sum(len(t.events) for t in demo_log.traces)
