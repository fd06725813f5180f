"""Canonical in-memory event log: cases holding timestamp-ordered activity events.

All timestamps are timezone-aware, normalized to UTC and quantized to
millisecond precision at ingestion, so ordering and duration arithmetic
use one clock. Logs are immutable after construction and safe to share
across threads.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone

from .errors import IngestionError

Scalar = str | int | float | bool | datetime

# Attribute schema records the observed value type per key.
TYPE_STRING = "string"
TYPE_INT = "int"
TYPE_FLOAT = "float"
TYPE_BOOLEAN = "boolean"
TYPE_TIMESTAMP = "timestamp"

LEVEL_CASE = "case"
LEVEL_EVENT = "event"

SCHEMA_SAMPLE_LIMIT = 20


def to_utc_ms(ts: datetime) -> datetime:
    """Normalize a timezone-aware instant to UTC, truncated to milliseconds."""
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    ts = ts.astimezone(timezone.utc)
    return ts.replace(microsecond=(ts.microsecond // 1000) * 1000)


def parse_instant(value: str) -> datetime:
    """Parse an ISO-8601 instant (offset, 'Z', or compact '+HHMM') to UTC."""
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    elif len(text) > 5 and text[-5] in "+-" and text[-4:].isdigit():
        text = text[:-2] + ":" + text[-2:]
    return to_utc_ms(datetime.fromisoformat(text))


@dataclass(frozen=True)
class Event:
    """One recorded activity execution."""

    activity: str
    timestamp: datetime
    attributes: dict[str, Scalar] = field(default_factory=dict)


@dataclass(frozen=True)
class Trace:
    """One case: its events sorted non-decreasing by timestamp (stable)."""

    case_id: str
    events: tuple[Event, ...]
    attributes: dict[str, Scalar] = field(default_factory=dict)

    @property
    def activity_sequence(self) -> tuple[str, ...]:
        return tuple(e.activity for e in self.events)

    @property
    def duration_s(self) -> float:
        """Case running time: last minus first event timestamp, in seconds."""
        return (self.events[-1].timestamp - self.events[0].timestamp).total_seconds()


@dataclass(frozen=True)
class AttributeSummary:
    key: str
    level: str  # "case" | "event"
    type: str
    sample: tuple[Scalar, ...]  # first distinct values seen, capped


@dataclass(frozen=True)
class EventLog:
    name: str
    traces: tuple[Trace, ...]
    # keyed by (level, key); covers exactly the attribute keys observed
    attribute_schema: dict[tuple[str, str], AttributeSummary]

    def trace_by_case_id(self, case_id: str) -> Trace | None:
        for trace in self.traces:
            if trace.case_id == case_id:
                return trace
        return None


@dataclass(frozen=True)
class LogStatistics:
    case_count: int
    variant_count: int
    event_count: int
    avg_case_duration_s: float

    def to_dict(self) -> dict:
        return {
            "case_count": self.case_count,
            "variant_count": self.variant_count,
            "event_count": self.event_count,
            "avg_case_duration_s": self.avg_case_duration_s,
        }


def scalar_type_name(value: Scalar) -> str:
    # bool first: bool is a subclass of int
    if isinstance(value, bool):
        return TYPE_BOOLEAN
    if isinstance(value, int):
        return TYPE_INT
    if isinstance(value, float):
        return TYPE_FLOAT
    if isinstance(value, datetime):
        return TYPE_TIMESTAMP
    return TYPE_STRING


def _widen(current: str | None, observed: str) -> str:
    if current is None or current == observed:
        return observed
    if {current, observed} == {TYPE_INT, TYPE_FLOAT}:
        return TYPE_FLOAT
    return TYPE_STRING


def build_attribute_schema(traces: tuple[Trace, ...]) -> dict[tuple[str, str], AttributeSummary]:
    """Full scan over all case and event attributes observed in the traces."""
    types: dict[tuple[str, str], str | None] = {}
    samples: dict[tuple[str, str], list[Scalar]] = {}

    def observe(level: str, key: str, value: Scalar) -> None:
        slot = (level, key)
        types[slot] = _widen(types.get(slot), scalar_type_name(value))
        sample = samples.setdefault(slot, [])
        if len(sample) < SCHEMA_SAMPLE_LIMIT and value not in sample:
            sample.append(value)

    for trace in traces:
        for key, value in trace.attributes.items():
            observe(LEVEL_CASE, key, value)
        for event in trace.events:
            for key, value in event.attributes.items():
                observe(LEVEL_EVENT, key, value)

    return {
        slot: AttributeSummary(key=slot[1], level=slot[0], type=types[slot] or TYPE_STRING,
                               sample=tuple(samples[slot]))
        for slot in types
    }


def make_trace(case_id: str, events: list[Event], attributes: dict[str, Scalar] | None = None) -> Trace:
    """Build a trace, enforcing the trace invariants (non-empty, sorted stable)."""
    if not events:
        raise IngestionError(f"trace {case_id!r} has no events")
    for event in events:
        if not event.activity:
            raise IngestionError(f"trace {case_id!r} contains an event with an empty activity label")
    ordered = sorted(events, key=lambda e: e.timestamp)  # sorted() is stable
    return Trace(case_id=case_id, events=tuple(ordered), attributes=dict(attributes or {}))


def make_log(name: str, traces: list[Trace]) -> EventLog:
    """Build a log, enforcing distinct case ids and computing the attribute schema."""
    seen: set[str] = set()
    for trace in traces:
        if trace.case_id in seen:
            raise IngestionError(f"duplicate case id {trace.case_id!r}")
        seen.add(trace.case_id)
    frozen = tuple(traces)
    return EventLog(name=name, traces=frozen, attribute_schema=build_attribute_schema(frozen))


def variants(log: EventLog) -> dict[tuple[str, ...], int]:
    """Distinct activity sequences with the number of cases following each."""
    counts: dict[tuple[str, ...], int] = {}
    for trace in log.traces:
        seq = trace.activity_sequence
        counts[seq] = counts.get(seq, 0) + 1
    return counts


def log_statistics(log: EventLog) -> LogStatistics:
    """Case/variant/event counts and the mean case running time in seconds."""
    case_count = len(log.traces)
    event_count = sum(len(t.events) for t in log.traces)
    if case_count == 0:
        return LogStatistics(0, 0, 0, 0.0)
    total_duration = sum(t.duration_s for t in log.traces)
    return LogStatistics(
        case_count=case_count,
        variant_count=len(variants(log)),
        event_count=event_count,
        avg_case_duration_s=total_duration / case_count,
    )
