"""Undirected simple graphs: representation, generators, serialization, and
the exact combinatorial baselines (max-cut, acyclic-orientation count,
min-degree core) the rest of the workbench is tested against.

Vertices are dense integers 0..n-1. Neighborhoods are kept as one bit row
per vertex so closure and search code can operate on whole rows at once.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

Edge = tuple[int, int]


class GuardError(Exception):
    """An input exceeds the practical size guard of an exact routine."""


class EdgeListError(ValueError):
    """Malformed edge-list document. Carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1.

    ``edges`` is stored sorted lexicographically with u < v in every pair.
    ``adj[u]`` has bit v set iff uv is an edge; rows are symmetric.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = [0] * self.n
        seen: set[Edge] = set()
        norm: list[Edge] = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            norm.append((u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adj", tuple(rows))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)


@dataclass(frozen=True)
class Cut:
    """Bipartition of the vertex set and its crossing-edge count."""

    side: tuple[int, ...]
    value: int


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for the stock graph families.

    kind is one of complete, complete-multipartite, turan, path, cycle,
    star, gnp. ``parts`` is used by complete-multipartite, ``n`` by the
    rest, ``p``/``seed`` by gnp only.
    """

    kind: str
    parts: tuple[int, ...] | None = None
    n: int | None = None
    p: float | None = None
    seed: int | None = None


# ---------------------------------------------------------------------------
# parsing / serialization

def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: "n m" header, then m lines "u v" with
    0 <= u < v < n, LF separated. Errors report the offending line."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # tolerate a single trailing LF
    if not lines:
        raise EdgeListError("empty document", 1)
    head = lines[0].split(" ")
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise EdgeListError("header must be 'n m'", 1)
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise EdgeListError(
            f"header announces {m} edges, found {len(lines) - 1}", len(lines)
        )
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        toks = raw.split(" ")
        if len(toks) != 2 or not all(tok.isdigit() for tok in toks):
            raise EdgeListError("edge line must be 'u v'", lineno)
        u, v = int(toks[0]), int(toks[1])
        if u == v:
            raise EdgeListError(f"loop at vertex {u}", lineno)
        if u > v:
            raise EdgeListError(f"edge must be written with u < v, got {u} {v}", lineno)
        if v >= n:
            raise EdgeListError(f"vertex index {v} out of range (n={n})", lineno)
        if (u, v) in seen:
            raise EdgeListError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph; edges emitted in sorted order, no trailing LF."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out)


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()[:12]


# ---------------------------------------------------------------------------
# generators

def complete_multipartite(parts: list[int] | tuple[int, ...]) -> Graph:
    """All cross-part edges, none inside a part. Parts occupy consecutive
    index blocks in the given order."""
    if not parts or any(p <= 0 for p in parts):
        raise ValueError("part sizes must be positive")
    n = sum(parts)
    bounds = []
    start = 0
    for p in parts:
        bounds.append((start, start + p))
        start += p
    edges = [
        (u, v)
        for i, (a0, a1) in enumerate(bounds)
        for b0, b1 in bounds[i + 1 :]
        for u in range(a0, a1)
        for v in range(b0, b1)
    ]
    return Graph(n, tuple(edges))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def turan(n: int) -> Graph:
    """Complete bipartite graph with parts floor(n/2) and ceil(n/2)."""
    if n < 2:
        raise ValueError("turan graph needs n >= 2")
    return complete_multipartite([n // 2, (n + 1) // 2])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def star(n: int) -> Graph:
    """Star on n vertices, center 0."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n, tuple((0, v) for v in range(1, n)))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Include each pair independently with probability p; reproducible
    for a fixed seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0,1]")
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, tuple(edges))


def generate(spec: GeneratorSpec) -> Graph:
    kind = spec.kind
    if kind == "complete":
        return complete(_need(spec.n, "n"))
    if kind == "complete-multipartite":
        if spec.parts is None:
            raise ValueError("complete-multipartite needs part sizes")
        return complete_multipartite(list(spec.parts))
    if kind == "turan":
        return turan(_need(spec.n, "n"))
    if kind == "path":
        return path(_need(spec.n, "n"))
    if kind == "cycle":
        return cycle(_need(spec.n, "n"))
    if kind == "star":
        return star(_need(spec.n, "n"))
    if kind == "gnp":
        if spec.p is None:
            raise ValueError("gnp needs an edge probability")
        return gnp(_need(spec.n, "n"), spec.p, spec.seed if spec.seed is not None else 0)
    raise ValueError(f"unknown generator kind {kind!r}")


def _need(value, name):
    if value is None:
        raise ValueError(f"generator needs parameter {name}")
    return value


# ---------------------------------------------------------------------------
# transformations

def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Image of g under the vertex permutation perm (perm[v] = new label)."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


def contract_edge(g: Graph, e: Edge) -> Graph:
    """Simple contraction of e=(u,v): v merges into u, parallel edges
    collapse, indices above v shift down by one."""
    u, v = min(e), max(e)
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    out: set[Edge] = set()
    for a, b in g.edges:
        if (a, b) == (u, v):
            continue
        a2 = u if a == v else (a - 1 if a > v else a)
        b2 = u if b == v else (b - 1 if b > v else b)
        if a2 != b2:
            out.add((min(a2, b2), max(a2, b2)))
    return Graph(g.n - 1, tuple(sorted(out)))


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = min(e), max(e)
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    return Graph(g.n, tuple(x for x in g.edges if x != (u, v)))


def strip_isolated(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Drop degree-0 vertices; returns the relabeled graph and the kept
    original indices in ascending order."""
    kept = tuple(v for v in range(g.n) if g.adj[v])
    index = {v: i for i, v in enumerate(kept)}
    return Graph(len(kept), tuple((index[u], index[v]) for u, v in g.edges)), kept


def induced_subgraph(g: Graph, vertices) -> Graph:
    kept = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(kept)}
    edges = tuple(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(kept), edges)


# ---------------------------------------------------------------------------
# exact baselines

def cut_value(g: Graph, side) -> int:
    return sum(1 for u, v in g.edges if side[u] != side[v])


def max_cut(g: Graph) -> Cut:
    """Exhaustive max-cut with vertex 0 pinned to side 0. Ties break to the
    lexicographically smallest side tuple."""
    if g.n > 30:
        raise GuardError(f"max_cut enumeration guard: n={g.n} > 30")
    if g.n == 0:
        return Cut((), 0)
    best_val = -1
    best_side: tuple[int, ...] = ()
    free = g.n - 1
    for mask in range(1 << free):
        # bit (free-1-k) drives side[k+1] so ascending mask = lex order
        side = [0] * g.n
        ones = 0
        for v in range(1, g.n):
            if mask >> (free - v) & 1:
                side[v] = 1
                ones |= 1 << v
        val = sum((g.adj[v] & ones).bit_count() for v in range(g.n) if not side[v])
        if val > best_val:
            best_val = val
            best_side = tuple(side)
    return Cut(best_side, best_val)


def count_acyclic_orientations(g: Graph) -> int:
    """a(G) by the deletion-contraction recurrence a(G) = a(G-e) + a(G/e),
    contracting to a simple graph. Exact arbitrary-precision count."""
    if g.m > 40:
        raise GuardError(f"deletion-contraction guard: m={g.m} > 40")
    memo: dict[tuple[Edge, ...], int] = {}

    def canon(edges: tuple[Edge, ...]) -> tuple[Edge, ...]:
        verts = sorted({x for e in edges for x in e})
        index = {v: i for i, v in enumerate(verts)}
        return tuple(sorted((index[u], index[v]) for u, v in edges))

    def rec(edges: tuple[Edge, ...]) -> int:
        if not edges:
            return 1
        key = canon(edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        u, v = edges[0]
        rest = edges[1:]
        contracted: set[Edge] = set()
        for a, b in rest:
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                contracted.add((min(a2, b2), max(a2, b2)))
        result = rec(rest) + rec(tuple(sorted(contracted)))
        memo[key] = result
        return result

    return rec(g.edges)


def min_degree_core(g: Graph) -> tuple[tuple[int, ...], int]:
    """Iteratively peel vertices of degree below ceil(m/n) (lowest index
    first); returns the surviving set and its induced minimum degree.
    Callers strip isolated vertices beforehand."""
    if g.n == 0:
        return (), 0
    if any(g.adj[v] == 0 for v in range(g.n)):
        raise ValueError("min_degree_core requires a graph without isolated vertices")
    threshold = -(-g.m // g.n)
    alive = list(range(g.n))
    alive_mask = (1 << g.n) - 1
    deg = [g.degree(v) for v in range(g.n)]
    changed = True
    while changed:
        changed = False
        for v in alive:
            if deg[v] < threshold:
                alive.remove(v)
                alive_mask &= ~(1 << v)
                for w in alive:
                    if g.adj[v] >> w & 1:
                        deg[w] -= 1
                changed = True
                break
    # the averaging argument guarantees the core is nonempty
    assert alive, "peeling emptied the graph"
    d = min((g.adj[v] & alive_mask).bit_count() for v in alive)
    return tuple(alive), d
