"""File-backed log repository: a root directory of XES/CSV files.

Log ids are content-hash prefixes, so identical uploads dedupe to the
same entry. Parsed logs are cached immutably in memory; uploads are the
only writes and are serialized per store.
"""
from __future__ import annotations

import hashlib
import json
import logging
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from ..csv_io import CsvMapping, parse_csv
from ..demo import generate_demo_log
from ..errors import ConfigurationError, LogDiffError
from ..model import EventLog, LogStatistics, log_statistics
from ..xes import parse_xes, write_xes

logger = logging.getLogger(__name__)

FORMAT_XES = "xes"
FORMAT_CSV = "csv"

DEMO_SEED = 7
DEMO_CASE_COUNT = 500
DEMO_FILE_NAME = f"demo-covid-seed{DEMO_SEED}.xes"


def content_id(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()[:12]


@dataclass(frozen=True)
class LogStoreEntry:
    log_id: str
    file_name: str
    format: str
    size_bytes: int
    ingested_at: datetime
    statistics: LogStatistics

    def to_dict(self) -> dict:
        return {
            "log_id": self.log_id,
            "file_name": self.file_name,
            "format": self.format,
            "size_bytes": self.size_bytes,
            "ingested_at": self.ingested_at.isoformat(),
            "statistics": self.statistics.to_dict(),
        }


class LogStore:
    def __init__(self, root: Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._entries: dict[str, LogStoreEntry] = {}
        self._logs: dict[str, EventLog] = {}
        self._lock = threading.Lock()

    def scan_root(self) -> None:
        """Pre-seed entries from the root directory; unreadable files are skipped."""
        for path in sorted(self.root.iterdir()):
            if not path.is_file():
                continue
            suffix = path.suffix.lower()
            try:
                if suffix == ".xes":
                    self._ingest(path.read_bytes(), path.name, FORMAT_XES, None, write=False)
                elif suffix == ".csv":
                    mapping_path = path.with_name(path.name + ".mapping.json")
                    if not mapping_path.exists():
                        logger.warning("skipping %s: no sidecar %s", path.name, mapping_path.name)
                        continue
                    mapping = CsvMapping.from_dict(json.loads(mapping_path.read_text()))
                    self._ingest(path.read_bytes(), path.name, FORMAT_CSV, mapping, write=False)
            except LogDiffError as exc:
                logger.warning("skipping %s: %s", path.name, exc.message)

    def ensure_demo(self) -> LogStoreEntry:
        """Generate and ingest the bundled demo log (idempotent)."""
        log = generate_demo_log(DEMO_SEED, DEMO_CASE_COUNT)
        return self.add_bytes(write_xes(log), DEMO_FILE_NAME, FORMAT_XES, None)

    def add_bytes(self, data: bytes, file_name: str, fmt: str,
                  mapping: CsvMapping | None) -> LogStoreEntry:
        """Ingest uploaded bytes; duplicates (same content) return the existing entry."""
        if fmt == FORMAT_CSV and mapping is None:
            raise ConfigurationError("CSV uploads require a column mapping")
        return self._ingest(data, file_name, fmt, mapping, write=True)

    def _ingest(self, data: bytes, file_name: str, fmt: str,
                mapping: CsvMapping | None, write: bool) -> LogStoreEntry:
        log_id = content_id(data)
        with self._lock:
            existing = self._entries.get(log_id)
        if existing is not None:
            return existing

        # parse outside the lock; ingestion is CPU-bound and logs are immutable
        if fmt == FORMAT_XES:
            log = parse_xes(data)
        elif fmt == FORMAT_CSV:
            assert mapping is not None
            log = parse_csv(data, mapping, name=file_name)
        else:
            raise ConfigurationError(f"unsupported log format {fmt!r}")

        safe_name = Path(file_name).name or f"log.{fmt}"
        entry = LogStoreEntry(
            log_id=log_id,
            file_name=safe_name,
            format=fmt,
            size_bytes=len(data),
            ingested_at=datetime.now(timezone.utc),
            statistics=log_statistics(log),
        )
        with self._lock:
            raced = self._entries.get(log_id)
            if raced is not None:
                return raced
            if write:
                target = self.root / safe_name
                if target.exists() and target.read_bytes() != data:
                    target = self.root / f"{target.stem}-{log_id}{target.suffix}"
                    entry = LogStoreEntry(log_id, target.name, fmt, len(data),
                                          entry.ingested_at, entry.statistics)
                target.write_bytes(data)
            self._entries[log_id] = entry
            self._logs[log_id] = log
        return entry

    def list_entries(self) -> list[LogStoreEntry]:
        with self._lock:
            return sorted(self._entries.values(), key=lambda e: (e.file_name, e.log_id))

    def get_entry(self, log_id: str) -> LogStoreEntry | None:
        with self._lock:
            return self._entries.get(log_id)

    def get_log(self, log_id: str) -> EventLog | None:
        with self._lock:
            return self._logs.get(log_id)
