"""Exception hierarchy shared by all logdiff modules.

Every error carries a machine-readable ``code`` so the HTTP layer can
forward it verbatim; ``message`` is the human-readable detail.
"""
from __future__ import annotations


class LogDiffError(Exception):
    """Base class for all logdiff domain errors."""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ParseError(LogDiffError):
    """Input is not well-formed (e.g. broken XML); carries line/column when known."""

    code = "parse_error"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class IngestionError(LogDiffError):
    """Well-formed input that violates the event-log contract (missing timestamp, empty trace...)."""

    code = "ingestion_error"


class ConfigurationError(LogDiffError):
    """Caller-supplied configuration is unusable (e.g. mapped CSV column absent)."""

    code = "configuration_error"


class ValidationError(LogDiffError):
    """A request value fails validation against the data it targets."""

    code = "validation_error"
