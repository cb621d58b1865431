"""Exact game values by memoized adversarial search.

The memo keys on the packed reachability closure: legality, forcing, and
termination depend only on which ordered pairs are comparable, so states
with equal closures have equal remaining-game values. Forced and queried
edges are pruned from the questioner's move list (querying one costs a
query and changes nothing, so it is never strictly optimal).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import permutations

from .engine import (
    FORCED,
    QUERIED,
    Direction,
    GameError,
    GameState,
    edge_status,
    empty_state,
)
from .graph import Edge, Graph, GuardError, count_acyclic_orientations


@dataclass(frozen=True)
class SolveResult:
    value: int
    best_first_query: Edge | None
    nodes: int
    memo_hits: int

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "best": list(self.best_first_query) if self.best_first_query else None,
            "nodes": self.nodes,
            "memo_hits": self.memo_hits,
        }


def pack_reach(reach: tuple[int, ...], n: int) -> int:
    """Row-major packing of the closure matrix into one integer."""
    key = 0
    for u in range(n):
        key |= reach[u] << (u * n)
    return key


class Solver:
    """Minimax over closure states for one fixed graph.

    The memo table is shared by every query against this instance, so the
    optimal-policy calls amortize across a match. Single-threaded; results
    are deterministic (lexicographically smallest optimal edge, answer ties
    break toward the lower-index source).
    """

    def __init__(
        self,
        graph: Graph,
        max_edges: int = 16,
        max_vertices: int = 7,
        canonicalize: bool = False,
        use_info_bound: bool = False,
    ):
        if not (graph.m <= max_edges or graph.n <= max_vertices):
            raise GuardError(
                f"solver guard: m={graph.m} > {max_edges} and n={graph.n} > {max_vertices}"
            )
        self.graph = graph
        self.nodes = 0
        self.memo_hits = 0
        self._memo: dict[int, int] = {}
        self._canon = canonicalize
        self._perms = list(permutations(range(graph.n))) if canonicalize else None
        self._use_info_bound = use_info_bound
        if graph.m + 50 > sys.getrecursionlimit():
            sys.setrecursionlimit(graph.m + 200)

    # -- state keys ---------------------------------------------------------

    def _key(self, reach: tuple[int, ...]) -> int:
        n = self.graph.n
        if not self._canon:
            return pack_reach(reach, n)
        best = None
        for perm in self._perms:
            rows = [0] * n
            for u in range(n):
                row = reach[u]
                target = 0
                while row:
                    low = row & -row
                    target |= 1 << perm[low.bit_length() - 1]
                    row ^= low
                rows[perm[u]] = target
            packed = pack_reach(tuple(rows), n)
            if best is None or packed < best:
                best = packed
        return best

    # -- search -------------------------------------------------------------

    def _children(self, reach: tuple[int, ...], x: int, y: int) -> tuple[int, ...]:
        ry = reach[y]
        return tuple(row | ry if row >> x & 1 else row for row in reach)

    def _open(self, reach: tuple[int, ...]) -> list[Edge]:
        return [
            (u, v)
            for u, v in self.graph.edges
            if not (reach[u] >> v | reach[v] >> u) & 1
        ]

    def _info_bound(self, reach: tuple[int, ...], cap: int = 4096) -> int | None:
        """ceil(log2(#extensions)) when the count stays under cap."""
        edges = self._open(reach)

        def rec(rows, idx, budget):
            while idx < len(edges):
                u, v = edges[idx]
                idx += 1
                if (rows[u] >> v | rows[v] >> u) & 1:
                    continue
                total = 0
                for x, y in ((u, v), (v, u)):
                    sub = rec(self._children(rows, x, y), idx, budget - total)
                    if sub is None:
                        return None
                    total += sub
                    if total > budget:
                        return None
                return total
            return 1

        count = rec(reach, 0, cap)
        if count is None:
            return None
        return (count - 1).bit_length()

    def _value(self, reach: tuple[int, ...]) -> int:
        key = self._key(reach)
        hit = self._memo.get(key)
        if hit is not None:
            self.memo_hits += 1
            return hit
        self.nodes += 1
        best = None
        lower = None
        for u, v in self.graph.edges:
            if (reach[u] >> v | reach[v] >> u) & 1:
                continue
            worst = max(
                self._value(self._children(reach, u, v)),
                self._value(self._children(reach, v, u)),
            )
            if best is None or worst + 1 < best:
                best = worst + 1
                if self._use_info_bound and best > 1:
                    if lower is None:
                        lower = self._info_bound(reach)
                    if lower is not None and best <= lower:
                        break
        if best is None:
            best = 0  # terminal: every edge determined
        self._memo[key] = best
        return best

    # -- public api ---------------------------------------------------------

    def game_value(self) -> SolveResult:
        state = empty_state(self.graph)
        value = self._value(state.reach)
        best_edge = None if value == 0 else self.optimal_move(state)
        if self.graph.m <= 40:
            info = (count_acyclic_orientations(self.graph) - 1).bit_length()
            assert info <= value <= self.graph.m
        return SolveResult(value, best_edge, self.nodes, self.memo_hits)

    def value_of(self, state: GameState) -> int:
        return self._value(state.reach)

    def optimal_move(self, state: GameState) -> Edge:
        """Lexicographically smallest open edge achieving the minimax value."""
        target = self._value(state.reach)
        if target == 0:
            raise GameError("terminal state has no move")
        for u, v in self.graph.edges:
            reach = state.reach
            if (reach[u] >> v | reach[v] >> u) & 1:
                continue
            worst = max(
                self._value(self._children(reach, u, v)),
                self._value(self._children(reach, v, u)),
            )
            if worst + 1 == target:
                return (u, v)
        raise AssertionError("no open edge achieves the minimax value")

    def optimal_answer(self, state: GameState, edge: Edge) -> Direction:
        """Legal direction maximizing the remaining value; unique direction
        on forced edges; ties break toward the lower-index source."""
        status = edge_status(state, edge)
        if status.kind == QUERIED:
            raise GameError(f"edge {edge} was already queried")
        if status.kind == FORCED:
            return status.direction
        u, v = min(edge), max(edge)
        best_dir = None
        best_val = -1
        for x, y in ((u, v), (v, u)):
            val = self._value(self._children(state.reach, x, y))
            if val > best_val:
                best_val = val
                best_dir = (x, y)
        return best_dir


def game_value(g: Graph, **kwargs) -> SolveResult:
    return Solver(g, **kwargs).game_value()
