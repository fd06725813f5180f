"""HTTP surface: log repository, comparison sessions, exports.

The service is a thin orchestrator over the library modules; every
analytic number it returns comes from filter/discover/compare on
immutable logs. All 4xx responses carry ``{"error": {"code", "message"}}``.
"""
from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, File, Form, Request, UploadFile
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from ..comparison import comparison_to_dict, highlight_classes
from ..csv_io import CsvMapping
from ..errors import (
    ConfigurationError,
    IngestionError,
    LogDiffError,
    ParseError,
    ValidationError,
)
from ..export import export_dot, export_variants_csv
from ..filtering import FilterSpec, describe_filter_options
from ..report import export_comparison_report
from ..xes import write_xes
from .sessions import ConflictError, NotFoundError, SessionStore
from .store import FORMAT_CSV, FORMAT_XES, LogStore

DEFAULT_MAX_UPLOAD_BYTES = 256 * 1024 * 1024

_STATUS_BY_ERROR = {
    ParseError: 400,
    IngestionError: 400,
    ConfigurationError: 400,
    ValidationError: 422,
    NotFoundError: 404,
    ConflictError: 409,
}


class PayloadTooLarge(LogDiffError):
    code = "payload_too_large"


class CreateSessionBody(BaseModel):
    log_id: str


class AddSliceBody(BaseModel):
    label: str = ""
    filter: dict = {}


class ActivePairBody(BaseModel):
    left_index: int
    right_index: int


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": {"code": code, "message": message}})


def create_app(root: Path, max_upload_bytes: int = DEFAULT_MAX_UPLOAD_BYTES,
               demo: bool = False, ui_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="logdiff", version="0.1.0")
    log_store = LogStore(Path(root))
    log_store.scan_root()
    if demo:
        log_store.ensure_demo()
    session_store = SessionStore(Path(root) / "sessions.json", log_store)
    session_store.load()
    app.state.log_store = log_store
    app.state.session_store = session_store
    app.state.max_upload_bytes = max_upload_bytes

    @app.exception_handler(LogDiffError)
    def handle_domain_error(_: Request, exc: LogDiffError):
        status = 413 if isinstance(exc, PayloadTooLarge) else _STATUS_BY_ERROR.get(type(exc), 400)
        return _error_response(status, exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    def handle_request_validation(_: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        where = ".".join(str(p) for p in first.get("loc", ()))
        return _error_response(422, "validation_error", f"{where}: {first.get('msg', 'invalid request')}")

    # -- logs ---------------------------------------------------------------

    @app.post("/api/logs", status_code=201)
    def upload_log(file: UploadFile = File(...), mapping: str | None = Form(None),
                   format: str | None = Form(None)):
        data = file.file.read(max_upload_bytes + 1)
        if len(data) > max_upload_bytes:
            raise PayloadTooLarge(f"upload exceeds the {max_upload_bytes}-byte limit")
        name = file.filename or "upload"
        fmt = (format or ("csv" if name.lower().endswith(".csv") else "xes")).lower()
        if fmt not in (FORMAT_XES, FORMAT_CSV):
            raise ConfigurationError(f"unsupported log format {fmt!r}; expected xes or csv")
        csv_mapping = None
        if fmt == FORMAT_CSV:
            if not mapping:
                raise ConfigurationError("CSV uploads require a 'mapping' form field with the column mapping JSON")
            try:
                csv_mapping = CsvMapping.from_dict(json.loads(mapping))
            except json.JSONDecodeError as exc:
                raise ConfigurationError(f"mapping is not valid JSON: {exc}") from exc
        entry = log_store.add_bytes(data, name, fmt, csv_mapping)
        return entry.to_dict()

    @app.get("/api/logs")
    def list_logs():
        return [entry.to_dict() for entry in log_store.list_entries()]

    @app.get("/api/logs/{log_id}/schema")
    def log_schema(log_id: str):
        log = log_store.get_log(log_id)
        if log is None:
            raise NotFoundError(f"unknown log id {log_id!r}")
        return describe_filter_options(log).to_dict()

    # -- sessions -----------------------------------------------------------

    @app.post("/api/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        return session_store.create(body.log_id).to_dict()

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        return session_store.get(session_id).to_dict()

    @app.post("/api/sessions/{session_id}/slices", status_code=201)
    def add_slice(session_id: str, body: AddSliceBody):
        spec = FilterSpec.from_dict(body.filter)
        index, slice_ = session_store.add_slice(session_id, body.label, spec)
        return {"index": index, "slice": slice_.to_dict()}

    @app.put("/api/sessions/{session_id}/active_pair")
    def set_active_pair(session_id: str, body: ActivePairBody):
        session_store.set_active_pair(session_id, body.left_index, body.right_index)
        return session_store.get(session_id).to_dict()

    @app.get("/api/sessions/{session_id}/comparison")
    def get_comparison(session_id: str, metric: str = "frequency"):
        result = session_store.get_result(session_id)
        return comparison_to_dict(result, metric)

    # -- exports ------------------------------------------------------------

    @app.get("/api/sessions/{session_id}/export")
    def export(session_id: str, kind: str, metric: str = "frequency"):
        result = session_store.get_result(session_id)
        (left_slice, left_log), (right_slice, right_log) = session_store.get_slice_pair(session_id)

        if kind == "report":
            return Response(export_comparison_report(result, metric), media_type="text/html",
                            headers=_attachment("comparison-report.html"))
        if kind in ("dot_left", "dot_right"):
            side = "left" if kind == "dot_left" else "right"
            slice_ = left_slice if side == "left" else right_slice
            text = export_dot(slice_.dfg, metric, highlight_classes(result, side))
            return Response(text, media_type="text/vnd.graphviz",
                            headers=_attachment(f"model-{side}.dot"))
        if kind in ("variants_left", "variants_right"):
            side_log = left_log if kind == "variants_left" else right_log
            side = kind.removeprefix("variants_")
            return Response(export_variants_csv(side_log), media_type="text/csv",
                            headers=_attachment(f"variants-{side}.csv"))
        if kind in ("log_left", "log_right"):
            side_log = left_log if kind == "log_left" else right_log
            side = kind.removeprefix("log_")
            return Response(write_xes(side_log), media_type="application/xml",
                            headers=_attachment(f"log-{side}.xes"))
        raise ValidationError(
            f"unknown export kind {kind!r}; expected report|dot_left|dot_right|"
            f"variants_left|variants_right|log_left|log_right")

    if ui_dir is not None and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def _attachment(filename: str) -> dict[str, str]:
    return {"Content-Disposition": f'attachment; filename="{filename}"'}
