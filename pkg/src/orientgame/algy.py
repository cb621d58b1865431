"""Question-side strategies.

Sorting schedules are written as generators that yield "is a before b?"
comparison requests; a driver answers them from the game closure when the
relation is already determined and otherwise surfaces the pair as the next
edge to query. That lets the same schedule run standalone on cliques and
as phase one of the reduction walkthrough.
"""

from __future__ import annotations

import math
import random

from .engine import (
    OPEN,
    AlgyStrategy,
    GameState,
    Move,
    StrategistStrategy,
    Transcript,
    apply_answer,
    edge_status,
    empty_state,
    is_terminal,
    open_edges,
)
from .graph import Edge, Graph, graph_hash
from .solver import Solver


class ExhaustiveAlgy(AlgyStrategy):
    """Queries open edges in lexicographic order."""

    name = "exhaustive"

    def next_edge(self, state: GameState) -> Edge | None:
        for e in open_edges(state):
            return e
        return None


class GreedyForcingAlgy(AlgyStrategy):
    """Queries the open edge whose endpoints have the largest combined
    comparability in-degree; ties break lexicographically."""

    name = "greedy"

    def next_edge(self, state: GameState) -> Edge | None:
        n = state.graph.n
        indeg = [0] * n
        for row in state.reach:
            bits = row
            while bits:
                low = bits & -bits
                indeg[low.bit_length() - 1] += 1
                bits ^= low
        # every column counts its own reflexive bit once; constant shift,
        # irrelevant to the argmax
        best = None
        best_score = -1
        for u, v in open_edges(state):
            score = indeg[u] + indeg[v]
            if score > best_score:
                best_score = score
                best = (u, v)
        return best


class OptimalAlgy(AlgyStrategy):
    """Plays the exact minimax policy (guarded graph sizes only)."""

    name = "optimal"

    def __init__(self, graph: Graph, solver: Solver | None = None, **kwargs):
        self._solver = solver if solver is not None else Solver(graph, **kwargs)

    def next_edge(self, state: GameState) -> Edge | None:
        if is_terminal(state):
            return None
        return self._solver.optimal_move(state)


# ---------------------------------------------------------------------------
# comparison schedules

def known_relation(state: GameState, a: int, b: int) -> bool | None:
    """True if a precedes b in the closure, False for the reverse, None if
    the pair is still incomparable."""
    if state.reach[a] >> b & 1:
        return True
    if state.reach[b] >> a & 1:
        return False
    return None


class ComparisonDriver:
    """Runs a comparison-schedule generator against the live closure."""

    def __init__(self, gen):
        self._gen = gen
        self._pending: tuple[int, int] | None = None
        self._started = False
        self.finished = False
        self.result = None

    def _advance(self, answer=None):
        try:
            if not self._started:
                self._started = True
                self._pending = next(self._gen)
            else:
                self._pending = self._gen.send(answer)
        except StopIteration as stop:
            self.finished = True
            self.result = stop.value
            self._pending = None

    def next_query(self, state: GameState) -> Edge | None:
        if not self._started:
            self._advance()
        while not self.finished:
            a, b = self._pending
            rel = known_relation(state, a, b)
            if rel is None:
                return (a, b) if a < b else (b, a)
            self._advance(rel)
        return None


def binary_insertion_schedule(items):
    """Insert each item into the sorted chain by binary search; yields
    (a, b) requests meaning "is a before b?", returns the sorted chain."""
    items = list(items)
    if not items:
        return []
    chain = [items[0]]
    for v in items[1:]:
        lo, hi = 0, len(chain)
        while lo < hi:
            mid = (lo + hi) // 2
            if (yield (v, chain[mid])):
                hi = mid
            else:
                lo = mid + 1
        chain.insert(lo, v)
    return chain


def _fj_insertion_order(k: int) -> list[int]:
    # group sizes 2, 2, 6, 10, 22, ...: adjacent sizes sum to powers of two,
    # and each group is inserted in reverse index order
    order: list[int] = []
    start = 0
    prev = 0
    power = 2
    while start < k:
        size = power - prev
        order.extend(reversed(range(start, min(start + size, k))))
        prev = size
        power *= 2
        start += size
    return order


def ford_johnson_schedule(items):
    """Merge-insertion: pair, recursively sort the larger elements, then
    insert the followers in the group order that keeps every binary search
    inside a power-of-two window."""
    items = list(items)
    n = len(items)
    if n <= 1:
        return items
    smaller_of: dict[int, int] = {}
    for i in range(0, n - 1, 2):
        a, b = items[i], items[i + 1]
        if (yield (a, b)):
            smaller_of[b] = a
        else:
            smaller_of[a] = b
    leftover = items[-1] if n % 2 else None
    upper = yield from ford_johnson_schedule(list(smaller_of))
    chain = [smaller_of[upper[0]]] + upper
    pending: list[tuple[int, int | None]] = [(smaller_of[x], x) for x in upper[1:]]
    if leftover is not None:
        pending.append((leftover, None))
    for idx in _fj_insertion_order(len(pending)):
        item, anchor = pending[idx]
        hi = chain.index(anchor) if anchor is not None else len(chain)
        lo = 0
        while lo < hi:
            mid = (lo + hi) // 2
            if (yield (item, chain[mid])):
                hi = mid
            else:
                lo = mid + 1
        chain.insert(lo, item)
    return chain


_SCHEDULES = {
    "binary": binary_insertion_schedule,
    "binary-insertion": binary_insertion_schedule,
    "fj": ford_johnson_schedule,
    "merge-insertion": ford_johnson_schedule,
}


def sorting_comparison_count(n: int, method: str) -> int:
    """Worst-case comparisons: binary insertion is sum of ceil(log2 i) for
    i = 2..n; merge-insertion is sum of ceil(log2(3k/4)) for k = 1..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if method in ("binary", "binary-insertion"):
        return sum((i - 1).bit_length() for i in range(2, n + 1))
    if method in ("fj", "merge-insertion"):
        # ceil(log2(3k/4)) = ceil_log2(3k) - 2
        return sum((3 * k - 1).bit_length() - 2 for k in range(1, n + 1))
    raise ValueError(f"unknown sorting method {method!r}")


class SortingAlgy(AlgyStrategy):
    """Determines the clique on ``items`` via the chosen comparison
    schedule. On a complete graph this settles the whole orientation."""

    def __init__(self, graph: Graph, method: str = "binary", items=None):
        if method not in _SCHEDULES:
            raise ValueError(f"unknown sorting method {method!r}")
        items = list(items) if items is not None else list(range(graph.n))
        for i, a in enumerate(items):
            for b in items[i + 1 :]:
                if not graph.has_edge(a, b):
                    raise ValueError("sorting strategy needs a clique on its items")
        self.name = f"sort:{'fj' if method in ('fj', 'merge-insertion') else 'binary'}"
        self._driver = ComparisonDriver(_SCHEDULES[method](items))

    def next_edge(self, state: GameState) -> Edge | None:
        q = self._driver.next_query(state)
        if q is not None:
            return q
        for e in open_edges(state):  # off-clique leftovers, if any
            return e
        return None

    @property
    def order(self):
        """Sorted chain, available once the schedule has finished."""
        return self._driver.result


# ---------------------------------------------------------------------------
# two-round strategy

def default_two_round_p(n: int, C: float = 2.0) -> float:
    """p = min(1, C*sqrt(ln n / n)); the analysed constant is astronomically
    conservative, so C defaults to 2 and both knobs stay exposed."""
    if n <= 1:
        return 0.0
    return min(1.0, C * math.sqrt(math.log(n) / n))


def sample_first_round(g: Graph, p: float, seed: int) -> list[Edge]:
    """Include each edge independently with probability p; lexicographic
    order, reproducible for a fixed seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0,1]")
    rng = random.Random(seed)
    return [e for e in g.edges if rng.random() < p]


def _resolve_p(g: Graph, p: float | None, C: float | None) -> float:
    if p is not None:
        return p
    return default_two_round_p(g.n, C if C is not None else 2.0)


class TwoRoundAlgy(AlgyStrategy):
    """Round one queries a random edge sample (even edges that become
    forced mid-round); round two queries everything still open."""

    def __init__(self, graph: Graph, p: float | None = None, C: float | None = None, seed: int = 0):
        self.p = _resolve_p(graph, p, C)
        self.seed = seed
        self.name = f"tworound:p={self.p:g}:seed={seed}"
        self._round1 = sample_first_round(graph, self.p, seed)
        self._idx = 0
        self._round2: list[Edge] | None = None

    def next_edge(self, state: GameState) -> Edge | None:
        while self._idx < len(self._round1):
            e = self._round1[self._idx]
            if e in state.oriented:
                self._idx += 1
                continue
            return e
        if self._round2 is None:
            self._round2 = open_edges(state)
        while self._round2:
            e = self._round2[0]
            if e in state.oriented:
                self._round2.pop(0)
                continue
            return e
        return None


def run_two_round(
    g: Graph,
    strategist: StrategistStrategy,
    p: float | None = None,
    seed: int = 0,
    C: float | None = None,
    meta: dict | None = None,
    sample: list[Edge] | None = None,
) -> tuple[Transcript, int, int]:
    """One-shot round semantics: every sampled edge is queried (forced or
    not), then every edge left open after round one. Unlike play_match this
    keeps querying after the orientation is already determined, so the
    total is exactly |D| + e(H). Returns (transcript, |D|, e(H)).

    ``sample`` overrides the random first round with an explicit edge set.
    """
    p = _resolve_p(g, p, C)
    if sample is None:
        sample = sample_first_round(g, p, seed)
    state = empty_state(g)
    moves = []

    def ask(edge: Edge):
        nonlocal state
        status = edge_status(state, edge)
        d = tuple(strategist.answer(state, edge))
        state = apply_answer(state, edge, d)
        moves.append((edge, d, status.kind == "forced"))

    for e in sample:
        ask(e)
    undetermined = open_edges(state)
    for e in undetermined:
        ask(e)
    assert is_terminal(state)
    full_meta = {
        "algy": f"tworound:p={p:g}:seed={seed}",
        "strategist": strategist.name,
        "graph_hash": graph_hash(g),
        "round1": len(sample),
        "round2": len(undetermined),
    }
    if meta:
        full_meta.update(meta)
    transcript = Transcript(
        g, [Move(e, d, f) for e, d, f in moves], len(moves), full_meta
    )
    return transcript, len(sample), len(undetermined)


# ---------------------------------------------------------------------------
# reduction walkthrough

class ReductionAlgy(AlgyStrategy):
    """Plays reduced graphs: sorts the core clique, splits the originals by
    their pendant answers, then sweeps each gadget block. For a block on a
    same-side edge the anchor query is chosen so either answer determines a
    second block edge, which caps the block at three queries per gadget
    vertex; cut-edge blocks take all four. Already-determined block edges
    are skipped."""

    def __init__(self, reduced, method: str = "binary"):
        if method not in _SCHEDULES:
            raise ValueError(f"unknown sorting method {method!r}")
        self.reduced = reduced
        self.name = f"claim2:{'fj' if method in ('fj', 'merge-insertion') else 'binary'}"
        self._driver = ComparisonDriver(_SCHEDULES[method](range(reduced.source.n)))
        self._pendants = [(x, reduced.prime(x)) for x in range(reduced.source.n)]
        self._pend_idx = 0
        self._program: list[Edge] | None = None
        self._prog_idx = 0
        self.phase_queries = {"sort": 0, "pendant": 0, "gadget": 0}

    def next_edge(self, state: GameState) -> Edge | None:
        q = self._driver.next_query(state)
        if q is not None:
            self.phase_queries["sort"] += 1
            return q
        while self._pend_idx < len(self._pendants):
            e = self._pendants[self._pend_idx]
            if edge_status(state, e).kind != OPEN:
                self._pend_idx += 1
                continue
            self.phase_queries["pendant"] += 1
            return e
        if self._program is None:
            self._program = self._build_program(state)
        while self._prog_idx < len(self._program):
            e = self._program[self._prog_idx]
            if edge_status(state, e).kind != OPEN:
                self._prog_idx += 1
                continue
            self.phase_queries["gadget"] += 1
            return e
        return None

    def _build_program(self, state: GameState) -> list[Edge]:
        red = self.reduced
        reach = state.reach
        in_x = {
            x
            for x in range(red.source.n)
            if reach[x] >> red.prime(x) & 1  # pendant answered x -> x'
        }
        program: list[Edge] = []
        for x, y in red.source.edges:
            xp, yp = red.prime(x), red.prime(y)
            same_side = (x in in_x) == (y in in_x)
            for u in red.block((x, y)):
                all_edges = sorted([(x, u), (y, u), (xp, u), (yp, u)])
                if same_side:
                    lo, hi = (x, y) if reach[x] >> y & 1 else (y, x)
                    first = (hi, u) if x in in_x else (lo, u)
                    program.append(first)
                    program.extend(e for e in all_edges if e != first)
                else:
                    program.extend(all_edges)
        return program
