"""Session-oriented JSON-over-HTTP play service.

One session holds one match; the human plays either side and the engine
opponent answers or queries. All rule decisions happen here on the server:
clients render the view payload and never re-derive legality.

Sessions live in memory behind a per-session lock (one writer at a time;
a second writer either waits or gets 409, per configuration). With a
persistence directory every move is checkpointed as a replayable JSON
document so a restarted server can rebuild the session on demand.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .bounds import bound_report
from .descriptors import make_algy, make_strategist, parse_algy, parse_strategist
from .engine import (
    FORCED,
    GameError,
    GameState,
    apply_answer,
    edge_status,
    empty_state,
    extension_count,
    is_terminal,
)
from .graph import (
    EdgeListError,
    GeneratorSpec,
    Graph,
    GuardError,
    generate,
    parse_graph,
    serialize_graph,
)
from .solver import Solver


class CreateSession(BaseModel):
    graph: str | dict
    role: str = "algy"
    opponent: str = "greedy"
    seed: int = 0


class QueryBody(BaseModel):
    edge: tuple[int, int]


class AnswerBody(BaseModel):
    dir: tuple[int, int]


@dataclass
class Session:
    id: str
    graph: Graph
    role: str
    opponent_desc: str
    seed: int
    state: GameState
    opponent: object
    moves: list = field(default_factory=list)
    pending: tuple[int, int] | None = None
    bounds: dict | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)
    solver: Solver | None = None
    solver_failed: bool = False

    def view(self) -> dict:
        edges = []
        for e in self.graph.edges:
            status = edge_status(self.state, e)
            entry = {"e": list(e), "status": status.kind}
            if status.direction is not None:
                entry["dir"] = list(status.direction)
            edges.append(entry)
        return {
            "edges": edges,
            "total": self.state.queries,
            "terminal": is_terminal(self.state),
            "bounds": self.bounds,
            "pending": list(self.pending) if self.pending else None,
        }

    def get_solver(self) -> Solver | None:
        if self.solver is None and not self.solver_failed:
            try:
                self.solver = Solver(self.graph)
            except GuardError:
                self.solver_failed = True
        return self.solver


def _build_graph(spec: str | dict) -> Graph:
    if isinstance(spec, str):
        return parse_graph(spec)
    parts = tuple(spec["parts"]) if "parts" in spec and spec["parts"] else None
    return generate(
        GeneratorSpec(
            kind=spec["kind"],
            parts=parts,
            n=spec.get("n"),
            p=spec.get("p"),
            seed=spec.get("seed"),
        )
    )


def create_app(persist_dir: str | None = None, busy_mode: str = "wait") -> FastAPI:
    app = FastAPI(title="orientgame")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    sessions: dict[str, Session] = {}
    persist = Path(persist_dir) if persist_dir else None
    if persist:
        persist.mkdir(parents=True, exist_ok=True)

    def save(session: Session):
        if not persist:
            return
        doc = {
            "id": session.id,
            "graph": serialize_graph(session.graph),
            "role": session.role,
            "opponent": session.opponent_desc,
            "seed": session.seed,
            "moves": [
                {"edge": list(e), "dir": list(d)} for e, d in session.moves
            ],
        }
        (persist / f"{session.id}.json").write_text(json.dumps(doc))

    def build_session(
        sid: str, graph: Graph, role: str, opponent_desc: str, seed: int
    ) -> Session:
        if role not in ("algy", "strategist"):
            raise HTTPException(400, "role must be 'algy' or 'strategist'")
        try:
            if role == "algy":
                opponent = make_strategist(parse_strategist(opponent_desc), graph)
            else:
                opponent = make_algy(parse_algy(opponent_desc), graph, seed=seed)
        except GuardError as exc:
            raise HTTPException(400, f"guard violation: {exc}")
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        session = Session(
            id=sid,
            graph=graph,
            role=role,
            opponent_desc=opponent_desc,
            seed=seed,
            state=empty_state(graph),
            opponent=opponent,
            bounds=bound_report(graph).to_json_dict(),
        )
        if role == "strategist" and not is_terminal(session.state):
            session.pending = session.opponent.next_edge(session.state)
        return session

    def restore(sid: str) -> Session | None:
        if not persist:
            return None
        path = persist / f"{sid}.json"
        if not path.exists():
            return None
        doc = json.loads(path.read_text())
        session = build_session(
            sid,
            parse_graph(doc["graph"]),
            doc["role"],
            doc["opponent"],
            doc["seed"],
        )
        for move in doc["moves"]:
            edge, d = tuple(move["edge"]), tuple(move["dir"])
            session.state = apply_answer(session.state, edge, d)
            session.moves.append((edge, d))
        if session.role == "strategist":
            session.pending = (
                None
                if is_terminal(session.state)
                else session.opponent.next_edge(session.state)
            )
        sessions[sid] = session
        return session

    def get_session(sid: str) -> Session:
        session = sessions.get(sid) or restore(sid)
        if session is None:
            raise HTTPException(404, "unknown session")
        return session

    class _Hold:
        """Per-session write lock honoring the busy-mode setting."""

        def __init__(self, session: Session):
            self.session = session

        def __enter__(self):
            if busy_mode == "busy":
                if not self.session.lock.acquire(blocking=False):
                    raise HTTPException(409, "session busy")
            else:
                self.session.lock.acquire()
            return self.session

        def __exit__(self, *exc):
            self.session.lock.release()

    @app.post("/sessions")
    def create(body: CreateSession):
        try:
            graph = _build_graph(body.graph)
        except (EdgeListError, ValueError, KeyError) as exc:
            raise HTTPException(400, f"bad graph: {exc}")
        sid = secrets.token_hex(8)
        session = build_session(sid, graph, body.role, body.opponent, body.seed)
        sessions[sid] = session
        save(session)
        return {"id": sid, "view": session.view()}

    @app.get("/sessions/{sid}")
    def view(sid: str):
        return get_session(sid).view()

    @app.post("/sessions/{sid}/query")
    def query(sid: str, body: QueryBody):
        with _Hold(get_session(sid)) as session:
            if session.role != "algy":
                raise HTTPException(400, "session human side is not the questioner")
            if is_terminal(session.state):
                raise HTTPException(409, "game over")
            edge = (min(body.edge), max(body.edge))
            if not session.graph.has_edge(*edge):
                raise HTTPException(400, f"{list(edge)} is not an edge")
            if edge in session.state.oriented:
                raise HTTPException(409, "already queried")
            try:
                d = session.opponent.answer(session.state, edge)
                session.state = apply_answer(session.state, edge, d)
            except GameError as exc:
                raise HTTPException(500, f"engine opponent broke the rules: {exc}")
            session.moves.append((edge, d))
            save(session)
            return {"dir": list(d), "view": session.view()}

    @app.post("/sessions/{sid}/answer")
    def answer(sid: str, body: AnswerBody):
        with _Hold(get_session(sid)) as session:
            if session.role != "strategist":
                raise HTTPException(400, "session human side is not the answerer")
            if session.pending is None:
                raise HTTPException(409, "no pending query")
            edge = session.pending
            d = tuple(body.dir)
            status = edge_status(session.state, edge)
            try:
                session.state = apply_answer(session.state, edge, d)
            except GameError as exc:
                detail = {"error": str(exc)}
                if status.kind == FORCED:
                    detail["forced"] = list(status.direction)
                raise HTTPException(409, detail)
            session.moves.append((edge, d))
            session.pending = (
                None
                if is_terminal(session.state)
                else session.opponent.next_edge(session.state)
            )
            save(session)
            return {
                "next_query": list(session.pending) if session.pending else None,
                "view": session.view(),
            }

    @app.get("/sessions/{sid}/hint")
    def hint(sid: str):
        session = get_session(sid)
        state = session.state
        if is_terminal(state):
            return {
                "message": "game over",
                "total": state.queries,
                "bounds": session.bounds,
            }
        solver = session.get_solver()
        extensions = None
        if session.graph.m - len(state.oriented) <= 20:
            extensions = extension_count(state)
        if session.role == "algy":
            if solver is not None:
                suggestion = solver.optimal_move(state)
                source = "optimal"
            else:
                from .algy import GreedyForcingAlgy

                suggestion = GreedyForcingAlgy().next_edge(state)
                source = "heuristic"
            kind = "edge"
        else:
            edge = session.pending
            if solver is not None:
                suggestion = solver.optimal_answer(state, edge)
                source = "optimal"
            else:
                from .strategist import GreedyAdversary

                suggestion = GreedyAdversary().answer(state, edge)
                source = "heuristic"
            kind = "direction"
        return {
            "suggestion": {"kind": kind, "value": list(suggestion)},
            "source": source,
            "bounds": session.bounds,
            "extensions": extensions,
        }

    return app
