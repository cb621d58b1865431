"""Hardness construction tying the game value to 3*e(G) + Max-Cut(G).

From a source graph G and a block size l, the reduced board consists of a
clique on the original vertices, one pendant partner per original vertex,
and one l-vertex gadget block per source edge, each block completely
joined to the edge's endpoints and their partners. A cut of G yields a
committed partial order whose Hasse diagram pins 3l queries per non-cut
edge and 4l per cut edge, while the clique-first walkthrough answers the
whole board within sort(n) + n + 3l*m + l*cut extra queries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Cut, Edge, Graph, max_cut
from .poset import Poset


@dataclass(frozen=True)
class ReducedGraph:
    """Reduced board plus the role labels tying it back to the source.

    Vertex layout: originals 0..n-1, partner of x is n+x, gadget blocks
    occupy 2n onward in lexicographic source-edge order.
    """

    h: Graph
    source: Graph
    l: int

    def prime(self, x: int) -> int:
        return self.source.n + x

    def block(self, e: Edge) -> tuple[int, ...]:
        e = (min(e), max(e))
        k = self.source.edges.index(e)
        start = 2 * self.source.n + k * self.l
        return tuple(range(start, start + self.l))

    @property
    def gadget_vertices(self) -> tuple[int, ...]:
        return tuple(range(2 * self.source.n, self.h.n))

    def role(self, v: int) -> tuple:
        n = self.source.n
        if v < n:
            return ("orig", v)
        if v < 2 * n:
            return ("prime", v - n)
        k, i = divmod(v - 2 * n, self.l)
        return ("gadget", self.source.edges[k], i)

    def roles_json(self) -> dict:
        n = self.source.n
        return {
            "orig": list(range(n)),
            "prime": list(range(n, 2 * n)),
            "gadget": {
                f"{u}-{v}": list(self.block((u, v))) for u, v in self.source.edges
            },
        }


def build_reduction(g: Graph, l: int) -> ReducedGraph:
    if l < 1:
        raise ValueError("block size l must be >= 1")
    n, m = g.n, g.m
    edges: list[Edge] = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges.extend((x, n + x) for x in range(n))
    for k, (x, y) in enumerate(g.edges):
        start = 2 * n + k * l
        for u in range(start, start + l):
            edges.extend(((x, u), (y, u), (n + x, u), (n + y, u)))
    h = Graph(2 * n + l * m, tuple(edges))
    assert h.n == 2 * n + l * m
    assert h.m == n * (n - 1) // 2 + n + 4 * l * m
    return ReducedGraph(h, g, l)


def load_roles(h: Graph, doc: dict) -> ReducedGraph:
    """Rebuild a ReducedGraph from its edge list and role map; the pair is
    validated by reconstructing the board from the inferred source."""
    orig = doc["orig"]
    n = len(orig)
    source_edges = []
    l = None
    for key, ids in doc["gadget"].items():
        u, v = map(int, key.split("-"))
        source_edges.append((u, v))
        if l is None:
            l = len(ids)
        elif l != len(ids):
            raise ValueError("gadget blocks must share one size")
    source = Graph(n, tuple(source_edges))
    reduced = build_reduction(source, l if l is not None else 1)
    if reduced.h != h:
        raise ValueError("role map does not describe this graph")
    return reduced


# ---------------------------------------------------------------------------
# committed-order adversary construction

def cut_poset_arcs(g: Graph, cut: Cut, l: int) -> list[tuple[int, int]]:
    """Generating arcs of the committed order for a given cut: two vertex
    chains (cut side 0, then side 1; partners reversed), pendant arcs down
    into side 0 and up out of side 1, and one three- or four-arc gadget
    placement per source edge. Inter-chain links are omitted when a side is
    empty."""
    if len(cut.side) != g.n:
        raise ValueError("cut must assign every vertex a side")
    n = g.n
    xs = [v for v in range(n) if cut.side[v] == 0]
    ys = [v for v in range(n) if cut.side[v] == 1]
    pos_x = {v: i for i, v in enumerate(xs)}
    pos_y = {v: i for i, v in enumerate(ys)}
    prime = lambda v: n + v
    arcs: list[tuple[int, int]] = []
    for chain in (xs, ys):
        for a, b in zip(chain, chain[1:]):
            arcs.append((a, b))
            arcs.append((prime(a), prime(b)))
    arcs.extend((x, prime(x)) for x in xs)
    arcs.extend((prime(y), y) for y in ys)
    if xs and ys:
        arcs.append((xs[-1], ys[0]))
        arcs.append((prime(ys[-1]), prime(xs[0])))
    red = build_reduction(g, l)
    for x, y in g.edges:
        block = red.block((x, y))
        sx, sy = cut.side[x], cut.side[y]
        if sx == 0 and sy == 0:
            i, j = (x, y) if pos_x[x] < pos_x[y] else (y, x)
            for u in block:
                arcs.extend(((i, u), (u, j), (u, prime(i))))
        elif sx == 1 and sy == 1:
            i, j = (x, y) if pos_y[x] < pos_y[y] else (y, x)
            for u in block:
                arcs.extend(((i, u), (prime(j), u), (u, j)))
        else:
            a, b = (x, y) if sx == 0 else (y, x)  # a on side 0
            for u in block:
                arcs.extend(((a, u), (prime(b), u), (u, prime(a)), (u, b)))
    return arcs


def build_cut_poset(g: Graph, cut: Cut, l: int) -> Poset:
    """Transitive closure of the committed arcs; the result must order every
    adjacent pair of the reduced board, i.e. fix a full acyclic orientation."""
    red = build_reduction(g, l)
    p = Poset.from_arcs(red.h.n, cut_poset_arcs(g, cut, l))
    for u, v in red.h.edges:
        if not p.comparable(u, v):
            raise AssertionError(f"committed order leaves edge ({u},{v}) open")
    return p


def hasse_cross_check(p: Poset, arcs, gadget_vertices) -> list[tuple[int, int]]:
    """Violations of the key structural property: every generating arc with
    exactly one endpoint in a gadget block must be a Hasse arc of the
    committed order (no element strictly between its endpoints)."""
    gadget = set(gadget_vertices)
    cols = p.columns()
    bad = []
    for a, b in arcs:
        if (a in gadget) == (b in gadget):
            continue
        if not p.is_hasse_arc(a, b, cols):
            bad.append((a, b))
    return bad


# ---------------------------------------------------------------------------
# two-sided bound check

@dataclass
class SandwichReport:
    lower: int
    upper: int
    exact: int | None
    algy_total: int
    adversary_total: int
    cut_value: int

    def to_json_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "algy_total": self.algy_total,
            "adversary_total": self.adversary_total,
            "cut_value": self.cut_value,
        }


def sandwich_check(g: Graph, l: int, solve: bool = False, seed: int = 0) -> SandwichReport:
    """Run the committed-cut adversary against the stock questioners and the
    clique-first walkthrough against the stock answerers; optionally solve
    the reduced board exactly and assert lower <= exact <= upper."""
    from .algy import (
        ExhaustiveAlgy,
        GreedyForcingAlgy,
        ReductionAlgy,
        TwoRoundAlgy,
        sorting_comparison_count,
    )
    from .engine import play_match
    from .solver import Solver
    from .strategist import GreedyAdversary, cut_poset_strategist, linear_order_strategist

    red = build_reduction(g, l)
    cut = max_cut(g)
    t = cut.value
    lower = 3 * l * g.m + l * t
    upper = lower + sorting_comparison_count(g.n, "merge-insertion") + g.n if g.n >= 1 else lower
    adversary = cut_poset_strategist(build_cut_poset(g, cut, l))

    def algy_lineup():
        return [
            ExhaustiveAlgy(),
            GreedyForcingAlgy(),
            TwoRoundAlgy(red.h, seed=seed),
            ReductionAlgy(red, method="merge-insertion"),
        ]

    adversary_total = min(
        play_match(red.h, a, adversary).total for a in algy_lineup()
    )
    strategists = [
        linear_order_strategist(range(red.h.n)),
        GreedyAdversary(),
        adversary,
    ]
    algy_total = max(
        play_match(red.h, ReductionAlgy(red, method="merge-insertion"), s).total
        for s in strategists
    )
    exact = None
    if solve:
        exact = Solver(red.h).game_value().value
        assert lower <= exact <= upper
    return SandwichReport(lower, upper, exact, algy_total, adversary_total, t)
