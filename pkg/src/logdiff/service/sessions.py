"""Comparison sessions: ordered slices over one log plus the active pair.

Sessions persist as a JSON metadata file next to the logs and are
reloaded at startup; slices and results are recomputed from the stored
FilterSpecs on first use, so a cached result can never drift from what a
fresh recomputation would give. Mutations on one session are linearized
by a per-session lock.
"""
from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from ..comparison import ComparisonResult, ModelSlice, build_slice, compare
from ..errors import LogDiffError, ValidationError
from ..filtering import FilterSpec
from ..model import EventLog
from .store import LogStore


class NotFoundError(LogDiffError):
    code = "not_found"


class ConflictError(LogDiffError):
    code = "conflict"


@dataclass
class SliceSpec:
    label: str
    filter: FilterSpec


@dataclass
class ComparisonSession:
    session_id: str
    log_id: str
    slice_specs: list[SliceSpec] = field(default_factory=list)
    active_pair: tuple[int, int] | None = None
    # materialized lazily, in lockstep with slice_specs
    materialized: list[tuple[ModelSlice, EventLog]] = field(default_factory=list)
    result: ComparisonResult | None = None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "log_id": self.log_id,
            "slices": [
                {"index": i, "label": s.label, "filter": s.filter.to_dict()}
                for i, s in enumerate(self.slice_specs)
            ],
            "active_pair": list(self.active_pair) if self.active_pair else None,
        }


class SessionStore:
    def __init__(self, path: Path, log_store: LogStore):
        self.path = Path(path)
        self.log_store = log_store
        self._sessions: dict[str, ComparisonSession] = {}
        self._lock = threading.Lock()

    # -- persistence ------------------------------------------------------

    def load(self) -> None:
        if not self.path.exists():
            return
        data = json.loads(self.path.read_text())
        for raw in data.get("sessions", []):
            session = ComparisonSession(
                session_id=raw["session_id"],
                log_id=raw["log_id"],
                slice_specs=[
                    SliceSpec(label=s["label"], filter=FilterSpec.from_dict(s["filter"]))
                    for s in raw.get("slices", [])
                ],
                active_pair=tuple(raw["active_pair"]) if raw.get("active_pair") else None,
            )
            self._sessions[session.session_id] = session

    def _save(self) -> None:
        payload = {"sessions": [s.to_dict() for s in self._sessions.values()]}
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, indent=2))
        os.replace(tmp, self.path)

    # -- session lifecycle ------------------------------------------------

    def create(self, log_id: str) -> ComparisonSession:
        if self.log_store.get_entry(log_id) is None:
            raise NotFoundError(f"unknown log id {log_id!r}")
        session = ComparisonSession(session_id=uuid.uuid4().hex[:12], log_id=log_id)
        with self._lock:
            self._sessions[session.session_id] = session
            self._save()
        return session

    def get(self, session_id: str) -> ComparisonSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise NotFoundError(f"unknown session id {session_id!r}")
        return session

    def list_sessions(self) -> list[ComparisonSession]:
        with self._lock:
            return sorted(self._sessions.values(), key=lambda s: s.session_id)

    # -- slices and comparison --------------------------------------------

    def _source_log(self, session: ComparisonSession) -> EventLog:
        log = self.log_store.get_log(session.log_id)
        if log is None:
            raise NotFoundError(f"log {session.log_id!r} backing this session is gone")
        return log

    def _materialize(self, session: ComparisonSession) -> None:
        """Compute any slices loaded from disk but not yet built. Caller holds session.lock."""
        log = self._source_log(session)
        while len(session.materialized) < len(session.slice_specs):
            spec = session.slice_specs[len(session.materialized)]
            session.materialized.append(build_slice(log, spec.label, spec.filter))

    def add_slice(self, session_id: str, label: str, spec: FilterSpec) -> tuple[int, ModelSlice]:
        session = self.get(session_id)
        with session.lock:
            self._materialize(session)
            log = self._source_log(session)
            slice_, filtered = build_slice(log, label, spec)  # validates the filter
            session.slice_specs.append(SliceSpec(label=label, filter=spec))
            session.materialized.append((slice_, filtered))
            index = len(session.slice_specs) - 1
        with self._lock:
            self._save()
        return index, slice_

    def set_active_pair(self, session_id: str, left: int, right: int) -> ComparisonResult:
        session = self.get(session_id)
        with session.lock:
            count = len(session.slice_specs)
            if not (0 <= left < count and 0 <= right < count):
                raise ConflictError(f"pair indices ({left}, {right}) out of range for {count} slices")
            if left == right:
                raise ConflictError("active pair must reference two distinct slices")
            self._materialize(session)
            session.active_pair = (left, right)
            session.result = compare(session.materialized[left][0], session.materialized[right][0])
            result = session.result
        with self._lock:
            self._save()
        return result

    def get_result(self, session_id: str) -> ComparisonResult:
        session = self.get(session_id)
        with session.lock:
            if session.active_pair is None:
                raise ConflictError("no active pair selected for this session")
            if session.result is None:  # reloaded from disk: recompute
                self._materialize(session)
                left, right = session.active_pair
                if not (0 <= left < len(session.materialized) and 0 <= right < len(session.materialized)):
                    raise ConflictError("stored active pair no longer matches the session slices")
                session.result = compare(session.materialized[left][0], session.materialized[right][0])
            return session.result

    def get_slice_pair(self, session_id: str) -> tuple[tuple[ModelSlice, EventLog], tuple[ModelSlice, EventLog]]:
        """The materialized (slice, filtered log) pair behind the active comparison."""
        session = self.get(session_id)
        with session.lock:
            if session.active_pair is None:
                raise ConflictError("no active pair selected for this session")
            self._materialize(session)
            left, right = session.active_pair
            return session.materialized[left], session.materialized[right]


def parse_pair_body(body: dict) -> tuple[int, int]:
    try:
        return int(body["left_index"]), int(body["right_index"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError("body must carry integer left_index and right_index") from exc
