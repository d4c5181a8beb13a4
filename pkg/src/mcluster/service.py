"""JSON-over-HTTP session service for the interactive explorer.

Sessions are in-memory.  A session holds a coloured quiver, optionally kept
in lockstep with an angulation; every move is recorded and the current
state is always reproducible by replaying the history from the seed.  One
mutating request per session at a time; concurrent ones get 409.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .mutclass import dynkin_plain_quiver
from .polygon import (
    Angulation,
    PolygonError,
    diagonal_label,
    label_to_diagonal,
    quiver_of_angulation,
)
from .quiver import ColouredQuiver, QuiverError, mutate_procedural, seed_from_acyclic


class MoveError(ValueError):
    pass


@dataclass
class Session:
    sid: str
    m: int
    seed_kind: str  # "quiver" | "angulation"
    seed_payload: dict
    quiver: ColouredQuiver
    angulation: Angulation | None
    history: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def seed_state(self) -> tuple[ColouredQuiver, Angulation | None]:
        if self.seed_kind == "angulation":
            ang = Angulation.from_json_dict(self.seed_payload)
            return quiver_of_angulation(ang), ang
        return ColouredQuiver.from_json_dict(self.seed_payload), None

    def replay(self, history) -> tuple[ColouredQuiver, Angulation | None]:
        quiver, ang = self.seed_state()
        for move in history:
            quiver, ang = apply_move(quiver, ang, move)
        return quiver, ang


def apply_move(quiver: ColouredQuiver, ang: Angulation | None, move: dict):
    kind = move.get("type")
    if kind == "mutate":
        vertex = move.get("vertex")
        labels = {str(v): v for v in quiver.vertices}
        if str(vertex) not in labels:
            raise MoveError(f"unknown vertex {vertex!r}")
        v = labels[str(vertex)]
        new_quiver = mutate_procedural(quiver, v)
        if ang is None:
            return new_quiver, None
        # linked sessions step the angulation alongside, the vertex label
        # following the exchanged diagonal
        d = label_to_diagonal(str(v))
        succ = ang.next_complement(d)
        return new_quiver.rename_vertex(diagonal_label(d), diagonal_label(succ)), ang.exchange(d)
    if kind == "flip":
        if ang is None:
            raise MoveError("session has no linked angulation")
        d = tuple(move.get("diagonal", ()))
        choice = tuple(move.get("choice", ()))
        if len(d) != 2 or len(choice) != 2:
            raise MoveError("flip needs a diagonal and a choice, each a vertex pair")
        try:
            d = ang.polygon.diagonal(*d)
            choice = ang.polygon.diagonal(*choice)
        except PolygonError as exc:
            raise MoveError(str(exc)) from exc
        if d not in ang.diagonals:
            raise MoveError(f"diagonal {list(d)} is not part of the angulation")
        candidates = ang.flips(d)
        if choice not in candidates:
            raise MoveError(f"{list(choice)} is not a flip candidate for {list(d)}")
        # a flip to the k-th candidate is k single exchanges at the same slot
        steps = candidates.index(choice) + 1
        cur_q, cur_a, cur_d = quiver, ang, d
        for _ in range(steps):
            succ = cur_a.next_complement(cur_d)
            cur_q = mutate_procedural(cur_q, diagonal_label(cur_d)).rename_vertex(
                diagonal_label(cur_d), diagonal_label(succ))
            cur_a = cur_a.exchange(cur_d)
            cur_d = succ
        return cur_q, cur_a
    raise MoveError(f"unknown move type {kind!r}")


def session_state(sess: Session) -> dict:
    quiver = sess.quiver
    moves: dict = {"vertices": [str(v) for v in quiver.vertices]}
    ang_doc = None
    if sess.angulation is not None:
        ang_doc = sess.angulation.to_json_dict()
        moves["flips"] = [
            {
                "diagonal": list(d),
                "candidates": [list(c) for c in sess.angulation.flips(d)],
            }
            for d in sorted(sess.angulation.diagonals)
        ]
    return {
        "id": sess.sid,
        "m": sess.m,
        "n": quiver.n,
        "quiver": quiver.to_json_dict(),
        "angulation": ang_doc,
        "legal_moves": moves,
        "history": list(sess.history),
    }


def export_session(sess: Session) -> dict:
    return {
        "version": 1,
        "m": sess.m,
        "kind": sess.seed_kind,
        "seed": sess.seed_payload,
        "history": list(sess.history),
    }


def create_app(ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="mcluster explorer")
    sessions: dict[str, Session] = {}
    app.state.sessions = sessions
    counter = itertools.count(1)

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    def error(status: int, message: str) -> JSONResponse:
        return JSONResponse(status_code=status, content={"detail": message})

    def get_session(sid: str) -> Session | None:
        return sessions.get(sid)

    def build_session(body: dict) -> Session:
        sid = f"s{next(counter)}"
        if "import" in body:
            doc = body["import"]
            if not isinstance(doc, dict) or doc.get("version") != 1:
                raise MoveError("unrecognised session export")
            sess = Session(sid, doc["m"], doc["kind"], doc["seed"], None, None)
            sess.quiver, sess.angulation = sess.replay(doc.get("history", []))
            sess.history = list(doc.get("history", []))
            return sess
        if "angulation" in body:
            ang = Angulation.from_json_dict(body["angulation"])
            sess = Session(sid, ang.polygon.m, "angulation", ang.to_json_dict(),
                           quiver_of_angulation(ang), ang)
            return sess
        m = body.get("m")
        if not isinstance(m, int):
            raise MoveError("field 'm' (int) is required for quiver sessions")
        seed = body.get("seed")
        if isinstance(seed, str):
            quiver = seed_from_acyclic(dynkin_plain_quiver(seed), m)
        elif isinstance(seed, dict):
            quiver = ColouredQuiver.from_json_dict(seed)
            if quiver.m != m:
                raise MoveError("seed quiver and body disagree on m")
        else:
            raise MoveError("field 'seed' must be a Dynkin name or a quiver document")
        return Session(sid, m, "quiver", quiver.to_json_dict(), quiver, None)

    @app.get("/health")
    async def health():
        return {"ok": True}

    @app.post("/session")
    async def create_session(body: dict):
        try:
            sess = build_session(body)
        except (MoveError, QuiverError, PolygonError, KeyError, TypeError) as exc:
            return error(400, f"cannot create session: {exc}")
        sessions[sess.sid] = sess
        return {"id": sess.sid, "state": session_state(sess)}

    @app.get("/session/{sid}")
    async def get_state(sid: str):
        sess = get_session(sid)
        if sess is None:
            return error(404, "unknown session")
        return session_state(sess)

    @app.get("/session/{sid}/export")
    async def get_export(sid: str):
        sess = get_session(sid)
        if sess is None:
            return error(404, "unknown session")
        return export_session(sess)

    def run_move(sid: str, move: dict):
        sess = get_session(sid)
        if sess is None:
            return error(404, "unknown session")
        if not sess.lock.acquire(blocking=False):
            return error(409, "another move is in flight for this session")
        try:
            quiver, ang = apply_move(sess.quiver, sess.angulation, move)
            sess.quiver, sess.angulation = quiver, ang
            sess.history.append(move)
            return session_state(sess)
        except (MoveError, QuiverError, PolygonError) as exc:
            return error(409, str(exc))
        finally:
            sess.lock.release()

    @app.post("/session/{sid}/mutate")
    async def post_mutate(sid: str, body: dict):
        if "vertex" not in body:
            return error(400, "field 'vertex' is required")
        return run_move(sid, {"type": "mutate", "vertex": body["vertex"]})

    @app.post("/session/{sid}/flip")
    async def post_flip(sid: str, body: dict):
        if "diagonal" not in body or "choice" not in body:
            return error(400, "fields 'diagonal' and 'choice' are required")
        return run_move(sid, {"type": "flip", "diagonal": list(body["diagonal"]),
                              "choice": list(body["choice"])})

    @app.post("/session/{sid}/undo")
    async def post_undo(sid: str):
        sess = get_session(sid)
        if sess is None:
            return error(404, "unknown session")
        if not sess.lock.acquire(blocking=False):
            return error(409, "another move is in flight for this session")
        try:
            if not sess.history:
                return error(409, "nothing to undo")
            history = sess.history[:-1]
            sess.quiver, sess.angulation = sess.replay(history)
            sess.history = history
            return session_state(sess)
        finally:
            sess.lock.release()

    candidates = [Path(ui_dir)] if ui_dir else [Path("frontend/dist"), Path("frontend")]
    for cand in candidates:
        if cand.is_dir() and (cand / "index.html").exists():
            from fastapi.staticfiles import StaticFiles

            app.mount("/", StaticFiles(directory=str(cand), html=True), name="ui")
            break

    return app
