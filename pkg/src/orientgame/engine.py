"""Rules of the edge-query orientation game.

A state is a partial acyclic orientation of the board graph together with
the reflexive-transitive closure of its arcs. The closure is the single
source of truth: an unqueried edge is *forced* exactly when its endpoints
are comparable in the closure (every acyclic completion then agrees on it,
by the linear-extension argument), *open* when they are incomparable
(completions exist with either direction). The game ends when every edge
is queried or forced, i.e. exactly one acyclic completion remains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Edge, Graph, GuardError, graph_hash, parse_graph, serialize_graph

Direction = tuple[int, int]

OPEN = "open"
QUERIED = "queried"
FORCED = "forced"


class GameError(Exception):
    """Illegal interaction with the game engine."""


class NonEdgeError(GameError):
    pass


class AlreadyQueriedError(GameError):
    pass


class IllegalDirectionError(GameError):
    pass


@dataclass(frozen=True)
class EdgeStatus:
    kind: str
    direction: Direction | None = None


@dataclass(frozen=True)
class GameState:
    """Immutable snapshot: oriented maps each queried edge to its answer,
    reach[u] has bit v set iff a directed path u -> ... -> v exists
    (including the trivial u = v)."""

    graph: Graph
    oriented: dict[Edge, Direction]
    reach: tuple[int, ...]
    queries: int


def empty_state(g: Graph) -> GameState:
    return GameState(g, {}, tuple(1 << v for v in range(g.n)), 0)


def canonical_edge(e) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


def apply_answer(s: GameState, e, d: Direction) -> GameState:
    """New state with the arc d added and the closure updated; the input
    state is unchanged. Rejects re-queries and cycle-creating directions."""
    e = canonical_edge(e)
    u, v = e
    if not s.graph.has_edge(u, v):
        raise NonEdgeError(f"{e} is not an edge")
    if e in s.oriented:
        raise AlreadyQueriedError(f"edge {e} was already queried")
    x, y = d
    if {x, y} != {u, v}:
        raise IllegalDirectionError(f"direction {d} does not orient edge {e}")
    if s.reach[y] >> x & 1:
        raise IllegalDirectionError(f"direction {d} would close a directed cycle")
    ry = s.reach[y]
    rows = [row | ry if row >> x & 1 else row for row in s.reach]
    oriented = dict(s.oriented)
    oriented[e] = (x, y)
    return GameState(s.graph, oriented, tuple(rows), s.queries + 1)


def edge_status(s: GameState, e) -> EdgeStatus:
    e = canonical_edge(e)
    u, v = e
    if not s.graph.has_edge(u, v):
        raise NonEdgeError(f"{e} is not an edge")
    d = s.oriented.get(e)
    if d is not None:
        return EdgeStatus(QUERIED, d)
    if s.reach[u] >> v & 1:
        return EdgeStatus(FORCED, (u, v))
    if s.reach[v] >> u & 1:
        return EdgeStatus(FORCED, (v, u))
    return EdgeStatus(OPEN)


def open_edges(s: GameState) -> list[Edge]:
    """Edges whose endpoints are incomparable in the closure (queried edges
    are always comparable, so they never appear)."""
    reach = s.reach
    return [
        (u, v)
        for u, v in s.graph.edges
        if not (reach[u] >> v | reach[v] >> u) & 1
    ]


def is_terminal(s: GameState) -> bool:
    reach = s.reach
    return all((reach[u] >> v | reach[v] >> u) & 1 for u, v in s.graph.edges)


def extension_count(s: GameState) -> int:
    """Number of acyclic orientations of the whole graph compatible with s,
    by enumeration over the open edges."""
    remaining = s.graph.m - len(s.oriented)
    if remaining > 20:
        raise GuardError(f"extension enumeration guard: {remaining} unqueried edges > 20")
    edges = open_edges(s)

    def rec(reach: tuple[int, ...], idx: int) -> int:
        while idx < len(edges):
            u, v = edges[idx]
            idx += 1
            if (reach[u] >> v | reach[v] >> u) & 1:
                continue  # became forced along this branch
            total = 0
            for x, y in ((u, v), (v, u)):
                ry = reach[y]
                rows = tuple(row | ry if row >> x & 1 else row for row in reach)
                total += rec(rows, idx)
            return total
        return 1

    return rec(s.reach, 0)


# ---------------------------------------------------------------------------
# strategies and matches

class AlgyStrategy:
    """Question side: emits the next edge to query, or None at terminal."""

    name = "algy"

    def next_edge(self, state: GameState) -> Edge | None:
        raise NotImplementedError


class StrategistStrategy:
    """Answer side: orients a queried edge. Replies must never close a
    directed cycle; on a forced edge only the unique legal direction is
    accepted by the engine."""

    name = "strategist"

    def answer(self, state: GameState, edge: Edge) -> Direction:
        raise NotImplementedError


@dataclass(frozen=True)
class Move:
    edge: Edge
    direction: Direction
    forced: bool


@dataclass
class Transcript:
    """Ordered record of one match; replays from the empty state."""

    graph: Graph
    moves: list[Move]
    total: int
    meta: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "graph": serialize_graph(self.graph),
                "moves": [
                    {"edge": list(m.edge), "dir": list(m.direction), "forced": m.forced}
                    for m in self.moves
                ],
                "total": self.total,
                "meta": self.meta,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Transcript":
        doc = json.loads(text)
        moves = [
            Move(tuple(m["edge"]), tuple(m["dir"]), bool(m["forced"]))
            for m in doc["moves"]
        ]
        return cls(parse_graph(doc["graph"]), moves, doc["total"], doc.get("meta", {}))

    def replay(self) -> GameState:
        """Re-run the moves, validating legality and the forced flags."""
        state = empty_state(self.graph)
        for move in self.moves:
            status = edge_status(state, move.edge)
            if (status.kind == FORCED) != move.forced:
                raise GameError(f"forced flag mismatch on {move.edge}")
            state = apply_answer(state, move.edge, move.direction)
        if self.total != len(self.moves):
            raise GameError("total does not match the move count")
        return state


class MatchAbort(GameError):
    """A strategy broke the rules; carries the diagnostic transcript."""

    def __init__(self, reason: str, transcript: Transcript):
        super().__init__(reason)
        self.transcript = transcript


def play_match(
    g: Graph,
    algy: AlgyStrategy,
    strategist: StrategistStrategy,
    meta: dict | None = None,
) -> Transcript:
    """Run until the orientation is determined. Querying a forced edge is
    legal, costs one query, and records was_forced; duplicate queries and
    illegal replies abort with a diagnostic transcript."""
    base_meta = {
        "algy": algy.name,
        "strategist": strategist.name,
        "graph_hash": graph_hash(g),
    }
    if meta:
        base_meta.update(meta)
    state = empty_state(g)
    moves: list[Move] = []

    def abort(reason: str):
        diag = dict(base_meta)
        diag["aborted"] = reason
        raise MatchAbort(reason, Transcript(g, moves, len(moves), diag))

    while not is_terminal(state):
        try:
            e = algy.next_edge(state)
        except GameError as exc:
            abort(f"algy failed to move: {exc}")
        if e is None:
            abort("algy stopped before the orientation was determined")
        e = canonical_edge(e)
        if not g.has_edge(*e):
            abort(f"algy queried a non-edge {e}")
        if e in state.oriented:
            abort(f"algy re-queried {e}")
        status = edge_status(state, e)
        try:
            d = tuple(strategist.answer(state, e))
            state = apply_answer(state, e, d)
        except GameError as exc:
            abort(f"strategist reply on {e} rejected: {exc}")
        moves.append(Move(e, d, status.kind == FORCED))
    return Transcript(g, moves, len(moves), base_meta)
