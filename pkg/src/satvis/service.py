"""Session-oriented HTTP API.

A session holds one parsed log: the immutable derivation plus the current
view.  Reads are lock-free (they snapshot the view reference once), the
single writer swaps the view atomically under the session lock, and layout
computations are cancelled when a newer transformation supersedes them.
Sessions live in memory with LRU eviction.
"""

from __future__ import annotations

import os
import secrets
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .derivation import Derivation, build, find_refutation, state_at
from .errors import LayoutCancelled, UnknownNodeError
from .layout import CancelToken, Layout, layout as compute_layout
from .log_parser import ParseReport, parse_log
from .search import full_text_search
from .serialization import to_document
from .transformations import (
    GraphView,
    TRANSFORM_OPS,
    apply_transformation,
    common_consequences,
    full_view,
)

MEGABYTE = 1024 * 1024


@dataclass
class ServiceConfig:
    max_log_bytes: int = 64 * MEGABYTE
    max_sessions: int = 32
    max_total_bytes: int = 512 * MEGABYTE

    @classmethod
    def from_env(cls) -> "ServiceConfig":
        config = cls()
        max_sessions = os.environ.get("SATVIS_MAX_SESSIONS")
        if max_sessions:
            config.max_sessions = int(max_sessions)
        return config


class Session:
    def __init__(
        self, session_id: str, derivation: Derivation, report: ParseReport, size: int
    ):
        self.session_id = session_id
        self.derivation = derivation
        self.report = report
        self.size_bytes = size
        self.created_at = time.time()
        self.lock = threading.Lock()
        self.current_view: GraphView = full_view(derivation)
        self._layouts: dict[tuple, Layout] = {}
        self._inflight: list[CancelToken] = []

    def layout_for(self, view: GraphView) -> Layout:
        """Lazily computed layout, cached by the view's provenance."""
        key = view.provenance
        cached = self._layouts.get(key)
        if cached is not None:
            return cached
        token = CancelToken()
        with self.lock:
            self._inflight.append(token)
        try:
            result = compute_layout(view, cancel=token)
        finally:
            with self.lock:
                self._inflight.remove(token)
        self._layouts[key] = result
        return result

    def swap_view(self, new_view: GraphView, cancel_layouts: bool = True) -> None:
        with self.lock:
            self.current_view = new_view
            if cancel_layouts:
                for token in self._inflight:
                    token.cancel()


class SessionStore:
    """In-memory LRU store bounded by session count and aggregate log size."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self._sessions: "OrderedDict[str, Session]" = OrderedDict()
        self._lock = threading.Lock()

    def create(self, text: str, size: int) -> Session:
        report = parse_log(text)
        derivation = build(report.events)
        session = Session(secrets.token_hex(8), derivation, report, size)
        with self._lock:
            self._sessions[session.session_id] = session
            self._evict()
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            self._sessions.move_to_end(session_id)
            return session

    def _evict(self) -> None:
        while len(self._sessions) > self.config.max_sessions or (
            len(self._sessions) > 1
            and sum(s.size_bytes for s in self._sessions.values())
            > self.config.max_total_bytes
        ):
            self._sessions.popitem(last=False)


class TransformRequest(BaseModel):
    op: str
    ids: list[int] | None = None


class HighlightRequest(BaseModel):
    ids: list[int]


def create_app(config: ServiceConfig | None = None, ui_dir: str | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    app = FastAPI(title="satvis", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = SessionStore(config)
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    @app.exception_handler(UnknownNodeError)
    async def unknown_node(request: Request, exc: UnknownNodeError):
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    async def bad_value(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.post("/api/sessions")
    async def create_session(request: Request):
        body = await request.body()
        if len(body) > config.max_log_bytes:
            raise HTTPException(status_code=413, detail="log exceeds size cap")
        session = store.create(body.decode("utf-8", errors="replace"), len(body))
        return {
            "session_id": session.session_id,
            "node_count": len(session.derivation.nodes),
            "violation_count": len(session.derivation.violations),
            "event_count": session.derivation.event_count,
            "skipped_lines": len(session.report.skipped_lines),
        }

    def graph_document(session: Session) -> dict:
        # A transform may cancel our layout mid-flight; retry on the view
        # that superseded it.
        for _ in range(8):
            view = session.current_view
            try:
                computed = session.layout_for(view)
            except LayoutCancelled:
                continue
            return to_document(session.derivation, view, computed)
        view = session.current_view
        return to_document(session.derivation, view, compute_layout(view))

    @app.get("/api/sessions/{session_id}/graph")
    def get_graph(session_id: str):
        return graph_document(store.get(session_id))

    @app.get("/api/sessions/{session_id}/node/{node_id}")
    def get_node(session_id: str, node_id: int):
        session = store.get(session_id)
        node = session.derivation.nodes.get(node_id)
        if node is None:
            raise HTTPException(status_code=404, detail=f"unknown node id {node_id}")
        view = session.current_view
        return {
            "id": node.id,
            "clause": node.clause_text,
            "rule": node.rule,
            "premises": list(node.premises),
            "children": session.derivation.children_of(node.id),
            "new_at": node.new_at,
            "passive_at": node.passive_at,
            "active_at": node.active_at,
            "is_root": node.is_root,
            "visible": node.id in view.visible,
            "highlighted": node.id in view.highlighted,
        }

    @app.post("/api/sessions/{session_id}/transform")
    def transform(session_id: str, body: TransformRequest):
        session = store.get(session_id)
        if body.op not in TRANSFORM_OPS:
            raise HTTPException(status_code=400, detail=f"unknown transformation {body.op!r}")
        with session.lock:
            new_view = apply_transformation(session.current_view, body.op, body.ids)
            session.current_view = new_view
            for token in session._inflight:
                token.cancel()
        return graph_document(session)

    @app.get("/api/sessions/{session_id}/search")
    def search(session_id: str, q: str = "", mode: str = "text", case: bool = False):
        session = store.get(session_id)
        derivation = session.derivation
        if mode == "text":
            ids = full_text_search(derivation, q, case_sensitive=case)
        elif mode == "consequences":
            selected = _parse_id_list(q)
            if not selected:
                raise HTTPException(
                    status_code=400, detail="consequences search requires node ids in q"
                )
            ids = sorted(common_consequences(derivation, selected))
        else:
            raise HTTPException(status_code=400, detail=f"unknown search mode {mode!r}")
        visible = session.current_view.visible
        return {"ids": ids, "visible_ids": [i for i in ids if i in visible]}

    @app.post("/api/sessions/{session_id}/highlight")
    def highlight(session_id: str, body: HighlightRequest):
        session = store.get(session_id)
        for node_id in body.ids:
            if node_id not in session.derivation.nodes:
                raise HTTPException(status_code=404, detail=f"unknown node id {node_id}")
        with session.lock:
            new_view = session.current_view.with_highlight(body.ids)
            session.current_view = new_view
        return {"ok": True, "highlighted": sorted(new_view.highlighted)}

    @app.get("/api/sessions/{session_id}/state")
    def saturation_state(session_id: str, event_index: int | None = None):
        session = store.get(session_id)
        if event_index is None:
            event_index = session.derivation.event_count
        try:
            state = state_at(session.derivation, event_index)
        except IndexError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "active": sorted(state.active),
            "passive": sorted(state.passive),
            "event_index": state.event_index,
        }

    @app.get("/api/sessions/{session_id}/refutation")
    def refutation(session_id: str, falsum: str = "$false"):
        session = store.get(session_id)
        node_id = find_refutation(session.derivation, falsum)
        return {"found": node_id is not None, "node_id": node_id}

    if ui_dir and os.path.isdir(ui_dir):
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _parse_id_list(raw: str) -> list[int]:
    parts = [part.strip() for part in raw.split(",") if part.strip()]
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise HTTPException(status_code=400, detail="expected comma-separated node ids")
