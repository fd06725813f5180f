"""XES (IEEE 1849) reader/writer, flat profile.

Supported attribute kinds are the scalar ones: string, date, int, float,
boolean (plus ``id``, preserved as an opaque string). Nested lists and
containers are rejected. ``concept:name`` is required on traces (case id)
and events (activity); ``time:timestamp`` is required on events.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from datetime import datetime
from io import BytesIO

from .errors import IngestionError, ParseError
from .model import Event, EventLog, Scalar, make_log, make_trace, parse_instant

_SCALAR_KINDS = {"string", "date", "int", "float", "boolean", "id"}
_NESTED_KINDS = {"list", "container", "values"}


def _local(tag: str) -> str:
    """Strip a namespace prefix, if any."""
    return tag.rpartition("}")[2]


def _attr_value(kind: str, raw: str, where: str) -> Scalar:
    if kind == "date":
        try:
            return parse_instant(raw)
        except ValueError as exc:
            raise IngestionError(f"unparseable timestamp {raw!r} {where}") from exc
    if kind == "int":
        return int(raw)
    if kind == "float":
        return float(raw)
    if kind == "boolean":
        return raw.strip().lower() == "true"
    return raw  # string, id


def _collect_attributes(element: ET.Element, where: str) -> dict[str, Scalar]:
    attrs: dict[str, Scalar] = {}
    for child in element:
        kind = _local(child.tag)
        if kind == "event":
            continue
        if kind in _NESTED_KINDS:
            raise IngestionError(f"unsupported nested XES attribute <{kind}> {where}")
        if kind not in _SCALAR_KINDS:
            continue  # extension noise (e.g. <extension>, <classifier> never reach here)
        key = child.get("key")
        raw = child.get("value")
        if key is None or raw is None:
            raise IngestionError(f"XES attribute without key/value {where}")
        attrs[key] = _attr_value(kind, raw, where)
    return attrs


def parse_xes(data: bytes) -> EventLog:
    """Parse an XES document into an EventLog.

    Events inside each trace are re-sorted by timestamp (stable); all
    attributes beyond the required ones are preserved in the attribute maps.
    """
    try:
        root = ET.parse(BytesIO(data)).getroot()
    except ET.ParseError as exc:
        line, column = exc.position
        raise ParseError(f"malformed XML: {exc.msg.split(':')[0]}", line=line, column=column) from exc
    if _local(root.tag) != "log":
        raise IngestionError(f"root element is <{_local(root.tag)}>, expected <log>")

    log_attrs = _collect_attributes(root, "on log")
    name = log_attrs.get("concept:name", "")
    if not isinstance(name, str):
        name = str(name)

    traces = []
    for trace_el in root:
        if _local(trace_el.tag) != "trace":
            continue
        trace_attrs = _collect_attributes(trace_el, f"on trace {len(traces)}")
        case_id = trace_attrs.pop("concept:name", None)
        if case_id is None:
            raise IngestionError(f"trace at position {len(traces)} is missing concept:name")
        case_id = str(case_id)

        events = []
        for index, event_el in enumerate(e for e in trace_el if _local(e.tag) == "event"):
            where = f"in trace {case_id!r}, event index {index}"
            event_attrs = _collect_attributes(event_el, where)
            activity = event_attrs.pop("concept:name", None)
            if activity is None:
                raise IngestionError(f"event missing concept:name {where}")
            timestamp = event_attrs.pop("time:timestamp", None)
            if timestamp is None:
                raise IngestionError(f"event missing time:timestamp {where}")
            if not isinstance(timestamp, datetime):
                raise IngestionError(f"time:timestamp is not a date attribute {where}")
            events.append(Event(activity=str(activity), timestamp=timestamp, attributes=event_attrs))

        if not events:
            raise IngestionError(f"trace {case_id!r} has no events")
        traces.append(make_trace(case_id, events, trace_attrs))

    return make_log(name, traces)


def _append_scalar(parent: ET.Element, key: str, value: Scalar) -> None:
    if isinstance(value, bool):
        ET.SubElement(parent, "boolean", key=key, value="true" if value else "false")
    elif isinstance(value, int):
        ET.SubElement(parent, "int", key=key, value=str(value))
    elif isinstance(value, float):
        ET.SubElement(parent, "float", key=key, value=repr(value))
    elif isinstance(value, datetime):
        ET.SubElement(parent, "date", key=key, value=value.isoformat(timespec="milliseconds"))
    else:
        ET.SubElement(parent, "string", key=key, value=str(value))


def write_xes(log: EventLog) -> bytes:
    """Serialize an EventLog to XES so that parse_xes(write_xes(log)) == log.

    Output is deterministic: attributes are emitted sorted by key.
    """
    root = ET.Element("log", {"xes.version": "1.0", "xes.features": ""})
    if log.name:
        ET.SubElement(root, "string", key="concept:name", value=log.name)

    for trace in log.traces:
        trace_el = ET.SubElement(root, "trace")
        ET.SubElement(trace_el, "string", key="concept:name", value=trace.case_id)
        for key in sorted(trace.attributes):
            _append_scalar(trace_el, key, trace.attributes[key])
        for event in trace.events:
            event_el = ET.SubElement(trace_el, "event")
            ET.SubElement(event_el, "string", key="concept:name", value=event.activity)
            ET.SubElement(event_el, "date", key="time:timestamp",
                          value=event.timestamp.isoformat(timespec="milliseconds"))
            for key in sorted(event.attributes):
                _append_scalar(event_el, key, event.attributes[key])

    tree = ET.ElementTree(root)
    ET.indent(tree)
    buffer = BytesIO()
    tree.write(buffer, encoding="utf-8", xml_declaration=True)
    return buffer.getvalue()
