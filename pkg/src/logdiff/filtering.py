"""Declarative log slicing: attribute clauses plus an optional time window.

Clauses are conjunctive and keep or drop whole traces (an event-level
clause keeps a trace when at least one event matches); kept traces are
shared unmodified with the source log. The time window is half-open
[start, end) so adjacent windows partition a log.
"""
from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime

from .errors import ValidationError
from .model import (
    LEVEL_CASE,
    LEVEL_EVENT,
    TYPE_FLOAT,
    TYPE_INT,
    TYPE_TIMESTAMP,
    EventLog,
    Scalar,
    Trace,
    build_attribute_schema,
    parse_instant,
)

MODE_CONTAINED = "contained"
MODE_INTERSECTING = "intersecting"

OPTION_VALUE_CAP = 200


@dataclass(frozen=True)
class AttributeClause:
    key: str
    level: str  # "case" | "event"
    allowed_values: frozenset[Scalar]

    def __post_init__(self):
        if self.level not in (LEVEL_CASE, LEVEL_EVENT):
            raise ValidationError(f"clause level must be 'case' or 'event', got {self.level!r}")
        if not self.allowed_values:
            raise ValidationError(f"clause on {self.key!r} has an empty allowed_values set")


@dataclass(frozen=True)
class TimeWindow:
    start: datetime
    end: datetime
    mode: str  # "contained" | "intersecting"

    def __post_init__(self):
        if self.mode not in (MODE_CONTAINED, MODE_INTERSECTING):
            raise ValidationError(f"time window mode must be 'contained' or 'intersecting', got {self.mode!r}")
        if not self.start < self.end:
            raise ValidationError("time window start must be before end")


@dataclass(frozen=True)
class FilterSpec:
    attribute_clauses: tuple[AttributeClause, ...] = ()
    time_window: TimeWindow | None = None

    def to_dict(self) -> dict:
        return {
            "attribute_clauses": [
                {"key": c.key, "level": c.level,
                 "allowed_values": sorted((_scalar_to_json(v) for v in c.allowed_values), key=str)}
                for c in self.attribute_clauses
            ],
            "time_window": None if self.time_window is None else {
                "start": self.time_window.start.isoformat(timespec="milliseconds"),
                "end": self.time_window.end.isoformat(timespec="milliseconds"),
                "mode": self.time_window.mode,
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FilterSpec":
        if not isinstance(data, dict):
            raise ValidationError("filter spec must be a JSON object")
        clauses = []
        for raw in data.get("attribute_clauses") or []:
            try:
                clauses.append(AttributeClause(
                    key=raw["key"], level=raw["level"],
                    allowed_values=frozenset(raw["allowed_values"]),
                ))
            except KeyError as exc:
                raise ValidationError(f"attribute clause is missing {exc.args[0]!r}") from exc
        window = None
        raw_window = data.get("time_window")
        if raw_window is not None:
            try:
                window = TimeWindow(
                    start=parse_instant(raw_window["start"]),
                    end=parse_instant(raw_window["end"]),
                    mode=raw_window.get("mode", MODE_INTERSECTING),
                )
            except KeyError as exc:
                raise ValidationError(f"time window is missing {exc.args[0]!r}") from exc
            except ValueError as exc:
                raise ValidationError(f"time window has an unparseable instant: {exc}") from exc
        return cls(attribute_clauses=tuple(clauses), time_window=window)


def _scalar_to_json(value: Scalar):
    if isinstance(value, datetime):
        return value.isoformat(timespec="milliseconds")
    return value


def _values_match(attr_value: Scalar, allowed: frozenset[Scalar]) -> bool:
    if attr_value in allowed:
        return True
    # instants arrive as ISO strings through the JSON surface
    if isinstance(attr_value, datetime):
        for candidate in allowed:
            if isinstance(candidate, str):
                try:
                    if parse_instant(candidate) == attr_value:
                        return True
                except ValueError:
                    continue
    return False


def _clause_keeps(trace: Trace, clause: AttributeClause) -> bool:
    if clause.level == LEVEL_CASE:
        value = trace.attributes.get(clause.key)
        return value is not None and _values_match(value, clause.allowed_values)
    return any(
        clause.key in event.attributes
        and _values_match(event.attributes[clause.key], clause.allowed_values)
        for event in trace.events
    )


def _window_keeps(trace: Trace, window: TimeWindow) -> bool:
    if window.mode == MODE_CONTAINED:
        first, last = trace.events[0].timestamp, trace.events[-1].timestamp
        return window.start <= first and last < window.end
    return any(window.start <= e.timestamp < window.end for e in trace.events)


def apply_filter(log: EventLog, spec: FilterSpec) -> EventLog:
    """Keep exactly the traces satisfying every clause and the time window.

    Kept traces are the source objects (logs are immutable); the result's
    attribute schema is recomputed over the kept traces.
    """
    # an empty log has an empty schema; skip key validation so re-filtering
    # an emptied result stays a no-op (idempotence) instead of erroring
    if log.traces:
        for clause in spec.attribute_clauses:
            if (clause.level, clause.key) not in log.attribute_schema:
                raise ValidationError(
                    f"filter clause targets unknown {clause.level}-level attribute {clause.key!r}")

    kept = [
        trace for trace in log.traces
        if all(_clause_keeps(trace, c) for c in spec.attribute_clauses)
        and (spec.time_window is None or _window_keeps(trace, spec.time_window))
    ]
    frozen = tuple(kept)
    return EventLog(name=log.name, traces=frozen, attribute_schema=build_attribute_schema(frozen))


@dataclass(frozen=True)
class AttributeOptions:
    key: str
    level: str
    type: str
    values: tuple[tuple[Scalar, int], ...]  # (value, occurrence count), capped
    truncated: bool
    min_value: Scalar | None = None  # numeric/instant keys only
    max_value: Scalar | None = None

    def to_dict(self) -> dict:
        entry = {
            "key": self.key,
            "level": self.level,
            "type": self.type,
            "values": [{"value": _scalar_to_json(v), "count": n} for v, n in self.values],
            "truncated": self.truncated,
        }
        if self.min_value is not None:
            entry["min"] = _scalar_to_json(self.min_value)
            entry["max"] = _scalar_to_json(self.max_value)
        return entry


@dataclass(frozen=True)
class FilterOptions:
    attributes: tuple[AttributeOptions, ...]
    time_range: tuple[datetime, datetime] | None  # (min, max) event timestamp

    def to_dict(self) -> dict:
        return {
            "attributes": [a.to_dict() for a in self.attributes],
            "time_range": None if self.time_range is None else {
                "min": self.time_range[0].isoformat(timespec="milliseconds"),
                "max": self.time_range[1].isoformat(timespec="milliseconds"),
            },
        }


def describe_filter_options(log: EventLog) -> FilterOptions:
    """The menu the UI offers: per attribute key, its distinct values with counts.

    At most 200 values are listed per key (most frequent first, then
    lexicographic), flagged truncated beyond that; numeric and instant
    keys also report their full min/max. The overall event-timestamp
    range is reported for the time-window picker.
    """
    counts: dict[tuple[str, str], dict[Scalar, int]] = {
        slot: {} for slot in log.attribute_schema
    }

    def observe(level: str, key: str, value: Scalar) -> None:
        per_value = counts[(level, key)]
        per_value[value] = per_value.get(value, 0) + 1

    min_ts: datetime | None = None
    max_ts: datetime | None = None
    for trace in log.traces:
        for key, value in trace.attributes.items():
            observe(LEVEL_CASE, key, value)
        for event in trace.events:
            if min_ts is None or event.timestamp < min_ts:
                min_ts = event.timestamp
            if max_ts is None or event.timestamp > max_ts:
                max_ts = event.timestamp
            for key, value in event.attributes.items():
                observe(LEVEL_EVENT, key, value)

    options = []
    for slot in sorted(counts, key=lambda s: (s[0], s[1])):
        summary = log.attribute_schema[slot]
        per_value = counts[slot]
        ranked = sorted(per_value.items(), key=lambda item: (-item[1], str(item[0])))
        capped = tuple(ranked[:OPTION_VALUE_CAP])
        min_value = max_value = None
        if summary.type in (TYPE_INT, TYPE_FLOAT, TYPE_TIMESTAMP) and per_value:
            comparable = [v for v in per_value if not isinstance(v, str)]
            if comparable:
                min_value = min(comparable)
                max_value = max(comparable)
        options.append(AttributeOptions(
            key=summary.key, level=summary.level, type=summary.type,
            values=capped, truncated=len(ranked) > OPTION_VALUE_CAP,
            min_value=min_value, max_value=max_value,
        ))

    time_range = (min_ts, max_ts) if min_ts is not None and max_ts is not None else None
    return FilterOptions(attributes=tuple(options), time_range=time_range)
