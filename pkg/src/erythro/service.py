"""HTTP facade over the pipeline for interactive use.

The workflow mirrors the bench routine: upload the smear photograph once,
then probe many cells with small analyze calls. Sessions only cache the
decoded image; they are read-only after upload, so concurrent analyze
requests are safe, and reports are never persisted server-side.

  POST /api/v1/images                    image/png or image/x-portable-pixmap
                                         body (raw or multipart field "file")
  POST /api/v1/images/{id}/analyze       {"roi": {x,y,w,h},
                                          "thresholds": {...}, "min_area": n}
  GET  /healthz
"""
from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .analysis import AnalysisConfig, analyze_roi, serialize_report
from .classifier import ClassificationThresholds
from .errors import (CorruptFile, NoCellFound, RoiOutOfBounds,
                     UnsupportedFormat)
from .raster import RasterImage, Roi, decode_image

DEFAULT_MAX_UPLOAD = 32 * 1024 * 1024
DEFAULT_IDLE_TIMEOUT = 30 * 60.0

_IMAGE_CONTENT_TYPES = ("image/png", "image/x-portable-pixmap")


@dataclass
class Session:
    image: RasterImage
    last_used: float


@dataclass
class SessionStore:
    """Uploaded images by id, expired after an idle timeout."""

    idle_timeout: float = DEFAULT_IDLE_TIMEOUT
    _sessions: dict[str, Session] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def put(self, image: RasterImage) -> str:
        sid = uuid.uuid4().hex
        with self._lock:
            self._sessions[sid] = Session(image, time.monotonic())
        return sid

    def get(self, sid: str) -> RasterImage | None:
        now = time.monotonic()
        with self._lock:
            self._purge(now)
            session = self._sessions.get(sid)
            if session is None:
                return None
            session.last_used = now
            return session.image

    def _purge(self, now: float) -> None:
        dead = [sid for sid, s in self._sessions.items()
                if now - s.last_used > self.idle_timeout]
        for sid in dead:
            del self._sessions[sid]


class RoiBody(BaseModel):
    x: int
    y: int
    w: int
    h: int


class AnalyzeBody(BaseModel):
    roi: RoiBody
    thresholds: dict[str, float] | None = None
    min_area: int | None = None


def create_app(max_upload: int = DEFAULT_MAX_UPLOAD,
               idle_timeout: float = DEFAULT_IDLE_TIMEOUT) -> FastAPI:
    app = FastAPI(title="erythro", version="1")
    store = SessionStore(idle_timeout=idle_timeout)
    app.state.sessions = store

    def _error(status: int, kind: str, detail: str) -> JSONResponse:
        return JSONResponse(status_code=status,
                            content={"error": kind, "detail": detail})

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok"}

    @app.post("/api/v1/images", status_code=201)
    async def upload(request: Request) -> Response:
        content_type = request.headers.get("content-type", "").split(";")[0]
        body = await request.body()
        if len(body) > max_upload:
            return _error(413, "TooLarge",
                          f"upload exceeds {max_upload} byte limit")
        if content_type.startswith("multipart/"):
            data = _first_multipart_file(body, request.headers.get(
                "content-type", ""))
            if data is None:
                return _error(415, "UnsupportedFormat",
                              "multipart body carries no file part")
        elif content_type in _IMAGE_CONTENT_TYPES or not content_type:
            data = body
        else:
            return _error(415, "UnsupportedFormat",
                          f"unsupported content type {content_type!r}")
        try:
            image = decode_image(data)
        except (UnsupportedFormat, CorruptFile) as exc:
            return _error(415, type(exc).__name__, str(exc))
        sid = store.put(image)
        return JSONResponse(status_code=201, content={
            "session": sid, "width": image.width, "height": image.height})

    @app.post("/api/v1/images/{sid}/analyze")
    def analyze(sid: str, body: AnalyzeBody) -> Response:
        image = store.get(sid)
        if image is None:
            return _error(404, "UnknownSession", f"no session {sid!r}")
        try:
            roi = Roi(body.roi.x, body.roi.y, body.roi.w, body.roi.h)
            roi.validate_within(image)
        except (ValueError, RoiOutOfBounds) as exc:
            return _error(422, "RoiOutOfBounds", str(exc))
        try:
            thresholds = ClassificationThresholds().replaced(
                body.thresholds or {})
            config = AnalysisConfig(
                min_area=body.min_area if body.min_area is not None
                else AnalysisConfig().min_area,
                thresholds=thresholds)
        except ValueError as exc:
            return _error(422, "BadThresholds", str(exc))
        try:
            report = analyze_roi(image, roi, config)
        except NoCellFound as exc:
            return _error(409, "NoCellFound", str(exc))
        return Response(content=serialize_report(report),
                        media_type="application/json")

    return app


def _first_multipart_file(body: bytes, content_type: str) -> bytes | None:
    """Extract the first file part of a multipart/form-data body."""
    marker = "boundary="
    idx = content_type.find(marker)
    if idx < 0:
        return None
    boundary = content_type[idx + len(marker):].split(";")[0].strip().strip('"')
    delim = b"--" + boundary.encode("utf-8")
    for part in body.split(delim):
        if b"\r\n\r\n" not in part:
            continue
        head, _, payload = part.partition(b"\r\n\r\n")
        if b"content-disposition" not in head.lower():
            continue
        return payload.rstrip(b"\r\n")
    return None


app = create_app()
