"""Answer-side strategies: committed-order oracles, the layered bipartite
adversary, the tripartite commitment adversary, a greedy information-hiding
heuristic, and the exact minimax answerer.

All strategies here are stateless functions of (state, edge): adaptive
commitments are recovered from the arcs already on the board, so one
instance can serve branching game-tree walks without cloning.
"""

from __future__ import annotations

from .engine import (
    Direction,
    GameError,
    GameState,
    StrategistStrategy,
    apply_answer,
    open_edges,
)
from .graph import Edge, Graph
from .poset import Poset
from .solver import Solver


class PosetStrategist(StrategistStrategy):
    """Answers every query by a fixed partial order; legal by construction
    and non-adaptive. The order must cover every edge it is asked about."""

    def __init__(self, order: Poset, name: str = "poset"):
        self.order = order
        self.name = name

    def answer(self, state: GameState, edge: Edge) -> Direction:
        u, v = edge
        if self.order.less(u, v):
            return (u, v)
        if self.order.less(v, u):
            return (v, u)
        raise GameError(f"committed order does not cover edge {edge}")


def linear_order_strategist(order) -> PosetStrategist:
    """Total-order oracle; ``order`` lists the vertices from smallest up."""
    order = list(order)
    return PosetStrategist(
        Poset.from_order(order), name="order:" + ",".join(map(str, order))
    )


def cut_poset_strategist(p: Poset, name: str = "cutposet") -> PosetStrategist:
    return PosetStrategist(p, name=name)


def turan_h_strategist(g: Graph, u1, v1=None) -> PosetStrategist:
    """Adversary for a Turan graph with an extra bipartite layer inside one
    part: orients everything out of u1 and everything from the other part
    into the rest of v1, which keeps every cross edge unforceable.

    v1 defaults to the generator's layout (leading floor(n/2) indices).
    The expected structure is validated up front.
    """
    n = g.n
    v1set = set(v1) if v1 is not None else set(range(n // 2))
    u1set = set(u1)
    if not u1set <= v1set:
        raise ValueError("u1 must be a subset of v1")
    v2set = set(range(n)) - v1set
    for a in range(n):
        for b in range(a + 1, n):
            cross = (a in v1set) != (b in v1set)
            if cross and not g.has_edge(a, b):
                raise ValueError(f"missing Turan edge ({a},{b})")
            if not cross and g.has_edge(a, b):
                if a in v2set:
                    raise ValueError(f"unexpected edge inside the second part: ({a},{b})")
                if (a in u1set) == (b in u1set):
                    raise ValueError(
                        f"edge ({a},{b}) inside v1 must join u1 to its complement"
                    )
    rank = {v: 0 if v in u1set else (1 if v in v2set else 2) for v in range(n)}
    arcs = [
        (a, b) if rank[a] < rank[b] else (b, a)
        for a in range(n)
        for b in range(a + 1, n)
        if rank[a] != rank[b]
    ]
    name = "turanh:u1=" + ",".join(map(str, sorted(u1set)))
    return PosetStrategist(Poset.from_arcs(n, arcs), name=name)


class TripartiteAdversary(StrategistStrategy):
    """Adversary for complete tripartite boards. Edges between the first
    two parts are oriented first-part -> second-part. Each third-part
    vertex z commits on the first query it sees: a query from the first
    part turns z into a sink for both parts, one from the second part into
    a source. Commitments are read back from the arcs on the board, so the
    strategy itself carries no match state."""

    def __init__(self, g: Graph, parts: tuple[int, int, int]):
        if len(parts) != 3 or any(p <= 0 for p in parts):
            raise ValueError("need three positive part sizes")
        if sum(parts) != g.n:
            raise ValueError("part sizes must cover the vertex set")
        a, b, c = parts
        self._part = [0] * a + [1] * b + [2] * c
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if (self._part[u] == self._part[v]) == g.has_edge(u, v):
                    raise ValueError("graph is not complete tripartite with these parts")
        self.name = "tripartite:" + ",".join(map(str, parts))

    def answer(self, state: GameState, edge: Edge) -> Direction:
        u, v = edge
        pu, pv = self._part[u], self._part[v]
        if 2 not in (pu, pv):
            return (u, v) if pu == 0 else (v, u)
        z, w = (u, v) if pu == 2 else (v, u)
        committed = None
        for (_, _), (x, y) in state.oriented.items():
            if y == z:
                committed = "sink"
                break
            if x == z:
                committed = "source"
                break
        if committed is None:
            committed = "sink" if self._part[w] == 0 else "source"
        return (w, z) if committed == "sink" else (z, w)


class GreedyAdversary(StrategistStrategy):
    """Picks the legal direction that newly determines the fewest open
    edges; ties break toward the lower-index source. A heuristic stand-in
    for optimal play beyond solver sizes, with no optimality claim."""

    name = "greedy"

    def answer(self, state: GameState, edge: Edge) -> Direction:
        u, v = min(edge), max(edge)
        legal = [
            (x, y) for x, y in ((u, v), (v, u)) if not state.reach[y] >> x & 1
        ]
        if len(legal) == 1:
            return legal[0]
        before = open_edges(state)
        best = None
        best_count = None
        for d in legal:
            child = apply_answer(state, (u, v), d)
            count = sum(
                1
                for a, b in before
                if (a, b) != (u, v) and (child.reach[a] >> b | child.reach[b] >> a) & 1
            )
            if best_count is None or count < best_count:
                best_count = count
                best = d
        return best


class OptimalStrategist(StrategistStrategy):
    """Answers with the exact minimax policy (guarded graph sizes only)."""

    name = "optimal"

    def __init__(self, graph: Graph, solver: Solver | None = None, **kwargs):
        self._solver = solver if solver is not None else Solver(graph, **kwargs)

    def answer(self, state: GameState, edge: Edge) -> Direction:
        return self._solver.optimal_answer(state, edge)
