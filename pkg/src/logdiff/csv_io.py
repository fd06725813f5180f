"""CSV event-log ingestion (RFC-4180, UTF-8, header row mandatory).

The caller maps the case, activity and timestamp columns; every other
column becomes an event attribute (kept as string). Rows are grouped by
case in first-seen order, then each trace is sorted by timestamp.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from datetime import datetime

from .errors import ConfigurationError, IngestionError
from .model import Event, EventLog, make_log, make_trace, to_utc_ms


@dataclass(frozen=True)
class CsvMapping:
    case_column: str
    activity_column: str
    timestamp_column: str
    timestamp_format: str  # strftime-style pattern

    @classmethod
    def from_dict(cls, data: dict) -> "CsvMapping":
        missing = [k for k in ("case_column", "activity_column", "timestamp_column", "timestamp_format")
                   if not data.get(k)]
        if missing:
            raise ConfigurationError(f"CSV mapping is missing {', '.join(missing)}")
        return cls(data["case_column"], data["activity_column"],
                   data["timestamp_column"], data["timestamp_format"])


def parse_csv(data: bytes, mapping: CsvMapping, name: str = "") -> EventLog:
    """Parse CSV bytes into an EventLog; row numbers in errors are physical file lines."""
    text = data.decode("utf-8-sig")
    reader = csv.DictReader(io.StringIO(text, newline=""))
    if reader.fieldnames is None:
        raise ConfigurationError("CSV input has no header row")

    columns = set(reader.fieldnames)
    for role, column in (("case", mapping.case_column), ("activity", mapping.activity_column),
                         ("timestamp", mapping.timestamp_column)):
        if column not in columns:
            raise ConfigurationError(f"mapped {role} column {column!r} not found in CSV header")

    attribute_columns = [c for c in reader.fieldnames
                         if c not in (mapping.case_column, mapping.activity_column, mapping.timestamp_column)]

    grouped: dict[str, list[Event]] = {}
    for row in reader:
        line = reader.line_num
        raw_ts = (row.get(mapping.timestamp_column) or "").strip()
        try:
            ts = datetime.strptime(raw_ts, mapping.timestamp_format)
        except ValueError as exc:
            raise IngestionError(f"unparseable timestamp {raw_ts!r} at row {line}") from exc
        activity = (row.get(mapping.activity_column) or "").strip()
        if not activity:
            raise IngestionError(f"empty activity at row {line}")
        case_id = (row.get(mapping.case_column) or "").strip()
        if not case_id:
            raise IngestionError(f"empty case id at row {line}")
        attrs = {c: row[c] for c in attribute_columns if row.get(c) is not None}
        grouped.setdefault(case_id, []).append(Event(activity, to_utc_ms(ts), attrs))

    traces = [make_trace(case_id, events) for case_id, events in grouped.items()]
    return make_log(name, traces)
