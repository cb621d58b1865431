"""Independent oracles the engine and solver are checked against.

Nothing here may lean on the package's closure machinery: legality is
re-derived by topological sorting raw arc sets, full orientations come
from vertex permutations, and game values come from minimax over exact
move histories.
"""

from __future__ import annotations

from itertools import combinations, permutations

from orientgame.graph import Edge, Graph


def acyclic(n: int, arcs) -> bool:
    """Kahn's algorithm on the raw arc list."""
    outs: dict[int, list[int]] = {}
    indeg = [0] * n
    for x, y in arcs:
        outs.setdefault(x, []).append(y)
        indeg[y] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in outs.get(v, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def orientation_masks(g: Graph) -> list[int]:
    """Every acyclic orientation of g, encoded as one bit per edge
    (bit i set = edge i oriented low-to-high). Derived from vertex
    permutations: acyclic orientations are exactly the orders' images."""
    masks = set()
    for perm in permutations(range(g.n)):
        mask = 0
        for i, (u, v) in enumerate(g.edges):
            if perm[u] < perm[v]:
                mask |= 1 << i
        masks.add(mask)
    return sorted(masks)


def count_orientations_by_enumeration(g: Graph) -> int:
    """2^m sweep with a raw acyclicity check per assignment."""
    count = 0
    for mask in range(1 << g.m):
        arcs = [
            (u, v) if mask >> i & 1 else (v, u)
            for i, (u, v) in enumerate(g.edges)
        ]
        if acyclic(g.n, arcs):
            count += 1
    return count


def determined_by_extensions(g: Graph, oriented: dict[Edge, tuple[int, int]],
                             all_masks: list[int] | None = None):
    """For each edge: the direction every compatible completion agrees on,
    or None if completions disagree. Returns (list indexed like g.edges,
    extension count)."""
    if all_masks is None:
        all_masks = orientation_masks(g)
    det_mask = 0
    det_bits = 0
    for i, e in enumerate(g.edges):
        d = oriented.get(e)
        if d is not None:
            det_mask |= 1 << i
            if d == e:
                det_bits |= 1 << i
    exts = [o for o in all_masks if o & det_mask == det_bits]
    agree_and = ~0
    agree_or = 0
    for o in exts:
        agree_and &= o
        agree_or |= o
    out = []
    for i, (u, v) in enumerate(g.edges):
        if agree_and >> i & 1:
            out.append((u, v))
        elif not agree_or >> i & 1:
            out.append((v, u))
        else:
            out.append(None)
    return out, len(exts)


def minimax_value(g: Graph, memo_on_history: bool = False) -> int:
    """Game value by minimax over explicit move histories. The questioner
    may query any unqueried edge (even a forced one); legality is a raw
    cycle check on the arc set. Independent of closure keying and of the
    forced-edge pruning used by the solver."""
    all_masks = orientation_masks(g)
    edge_index = {e: i for i, e in enumerate(g.edges)}
    memo: dict[frozenset, int] = {}

    def extensions(arcs: frozenset) -> int:
        det_mask = 0
        det_bits = 0
        for x, y in arcs:
            i = edge_index[(x, y) if x < y else (y, x)]
            det_mask |= 1 << i
            if x < y:
                det_bits |= 1 << i
        return sum(1 for o in all_masks if o & det_mask == det_bits)

    def value(arcs: frozenset) -> int:
        if memo_on_history:
            hit = memo.get(arcs)
            if hit is not None:
                return hit
        if extensions(arcs) == 1:
            result = 0
        else:
            queried = {(x, y) if x < y else (y, x) for x, y in arcs}
            best = None
            for e in g.edges:
                if e in queried:
                    continue
                u, v = e
                worst = -1
                for d in ((u, v), (v, u)):
                    if not acyclic(g.n, list(arcs) + [d]):
                        continue
                    worst = max(worst, value(arcs | {d}))
                assert worst >= 0, "every unqueried edge admits a legal answer"
                if best is None or worst + 1 < best:
                    best = worst + 1
            result = best
        if memo_on_history:
            memo[arcs] = result
        return result

    return value(frozenset())


def brute_force_cut_value(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        val = sum(1 for u, v in g.edges if (mask >> u & 1) != (mask >> v & 1))
        best = max(best, val)
    return best


def triangle_count(g: Graph) -> int:
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    )


def all_graphs_on(n: int):
    """Every labeled graph on n vertices, by edge-subset enumeration."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def closure_oracle_sweep(g: Graph, masks: list[int] | None = None) -> int:
    """Walk every reachable game state of g (every acyclic partial
    orientation, keyed by the exact query history) and check the engine's
    per-edge status against the all-extensions oracle: a determined edge
    must carry the direction every compatible completion agrees on, an open
    edge must have disagreeing completions. Returns the state count.

    Extensions are filtered by the queried arcs alone (the ground truth),
    so the check assumes nothing about the engine's closure logic.
    """
    from orientgame.engine import apply_answer, edge_status, empty_state

    if masks is None:
        masks = orientation_masks(g)
    seen = {(0, 0)}
    stack = [(empty_state(g), 0, 0)]
    states = 0
    while stack:
        state, qmask, dbits = stack.pop()
        states += 1
        exts = [o for o in masks if o & qmask == dbits]
        assert exts, "a legally reached state must extend"
        agree_and, agree_or = ~0, 0
        for o in exts:
            agree_and &= o
            agree_or |= o
        for i, e in enumerate(g.edges):
            status = edge_status(state, e)
            if agree_and >> i & 1:
                oracle = e
            elif not agree_or >> i & 1:
                oracle = (e[1], e[0])
            else:
                oracle = None
            if status.kind == "open":
                assert oracle is None, f"{e}: engine open, completions agree on {oracle}"
            else:
                assert status.direction == oracle, (
                    f"{e}: engine {status}, completions say {oracle}"
                )
        for i, (u, v) in enumerate(g.edges):
            if qmask >> i & 1:
                continue
            status = edge_status(state, (u, v))
            dirs = ((u, v), (v, u)) if status.kind == "open" else (status.direction,)
            for x, y in dirs:
                nq = qmask | 1 << i
                nd = dbits | ((1 << i) if x < y else 0)
                if (nq, nd) in seen:
                    continue
                seen.add((nq, nd))
                stack.append((apply_answer(state, (u, v), (x, y)), nq, nd))
    return states
