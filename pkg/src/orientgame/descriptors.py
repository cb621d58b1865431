"""Descriptor strings naming strategies on the CLI and over HTTP.

Questioners: "exhaustive", "greedy", "sort:binary", "sort:fj",
"tworound[:p=F][:C=F][:seed=N]", "claim2:binary", "claim2:fj", "optimal".
Answerers: "order[:2,0,1]", "greedy", "turanh:u1=0,1[:v1=...]",
"tripartite:2,2,1", "cutposet:FILE", "optimal".
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .algy import (
    ExhaustiveAlgy,
    GreedyForcingAlgy,
    OptimalAlgy,
    ReductionAlgy,
    SortingAlgy,
    TwoRoundAlgy,
)
from .engine import AlgyStrategy, StrategistStrategy
from .graph import Graph
from .poset import load_poset
from .reduction import ReducedGraph
from .strategist import (
    GreedyAdversary,
    OptimalStrategist,
    TripartiteAdversary,
    cut_poset_strategist,
    linear_order_strategist,
    turan_h_strategist,
)

_SORT_METHODS = {"binary": "binary", "fj": "merge-insertion"}


@dataclass(frozen=True)
class AlgyDescriptor:
    kind: str
    method: str | None = None
    p: float | None = None
    C: float | None = None
    seed: int | None = None


@dataclass(frozen=True)
class StrategistDescriptor:
    kind: str
    order: tuple[int, ...] | None = None
    u1: tuple[int, ...] | None = None
    v1: tuple[int, ...] | None = None
    parts: tuple[int, ...] | None = None
    poset_file: str | None = None


def parse_algy(text: str) -> AlgyDescriptor:
    head, *rest = text.split(":")
    if head == "exhaustive" and not rest:
        return AlgyDescriptor("exhaustive")
    if head == "greedy" and not rest:
        return AlgyDescriptor("greedy-forcing")
    if head == "optimal" and not rest:
        return AlgyDescriptor("optimal")
    if head == "sort":
        if len(rest) != 1 or rest[0] not in _SORT_METHODS:
            raise ValueError("sorting descriptor must be sort:binary or sort:fj")
        return AlgyDescriptor("sorting", method=_SORT_METHODS[rest[0]])
    if head == "claim2":
        method = rest[0] if rest else "binary"
        if len(rest) > 1 or method not in _SORT_METHODS:
            raise ValueError("reduction descriptor must be claim2:binary or claim2:fj")
        return AlgyDescriptor("claim2", method=_SORT_METHODS[method])
    if head == "tworound":
        p = C = seed = None
        for tok in rest:
            key, _, val = tok.partition("=")
            if key == "p":
                p = float(val)
            elif key == "C":
                C = float(val)
            elif key == "seed":
                seed = int(val)
            else:
                raise ValueError(f"unknown tworound parameter {key!r}")
        return AlgyDescriptor("two-round", p=p, C=C, seed=seed)
    raise ValueError(f"unknown questioner descriptor {text!r}")


def make_algy(
    d: AlgyDescriptor,
    g: Graph,
    reduced: ReducedGraph | None = None,
    seed: int = 0,
) -> AlgyStrategy:
    if d.kind == "exhaustive":
        return ExhaustiveAlgy()
    if d.kind == "greedy-forcing":
        return GreedyForcingAlgy()
    if d.kind == "optimal":
        return OptimalAlgy(g)
    if d.kind == "sorting":
        return SortingAlgy(g, method=d.method)
    if d.kind == "claim2":
        if reduced is None:
            raise ValueError("claim2 needs the reduction's role labels")
        if reduced.h != g:
            raise ValueError("role labels do not match the graph")
        return ReductionAlgy(reduced, method=d.method)
    if d.kind == "two-round":
        return TwoRoundAlgy(g, p=d.p, C=d.C, seed=d.seed if d.seed is not None else seed)
    raise ValueError(f"unknown questioner kind {d.kind!r}")


def parse_strategist(text: str) -> StrategistDescriptor:
    head, *rest = text.split(":")
    if head == "greedy" and not rest:
        return StrategistDescriptor("greedy-adversary")
    if head == "optimal" and not rest:
        return StrategistDescriptor("optimal")
    if head == "order":
        if not rest:
            return StrategistDescriptor("linear-order", order=None)
        if len(rest) != 1:
            raise ValueError("order descriptor is order:v0,v1,...")
        return StrategistDescriptor(
            "linear-order", order=tuple(int(t) for t in rest[0].split(","))
        )
    if head == "turanh":
        u1 = v1 = None
        for tok in rest:
            key, _, val = tok.partition("=")
            ids = tuple(int(t) for t in val.split(",")) if val else ()
            if key == "u1":
                u1 = ids
            elif key == "v1":
                v1 = ids
            else:
                raise ValueError(f"unknown turanh parameter {key!r}")
        if u1 is None:
            raise ValueError("turanh descriptor needs u1=...")
        return StrategistDescriptor("turan-h", u1=u1, v1=v1)
    if head == "tripartite":
        if len(rest) != 1:
            raise ValueError("tripartite descriptor is tripartite:a,b,c")
        return StrategistDescriptor(
            "tripartite", parts=tuple(int(t) for t in rest[0].split(","))
        )
    if head == "cutposet":
        if len(rest) != 1 or not rest[0]:
            raise ValueError("cutposet descriptor is cutposet:FILE")
        return StrategistDescriptor("cut-poset", poset_file=rest[0])
    raise ValueError(f"unknown answerer descriptor {text!r}")


def make_strategist(d: StrategistDescriptor, g: Graph) -> StrategistStrategy:
    if d.kind == "greedy-adversary":
        return GreedyAdversary()
    if d.kind == "optimal":
        return OptimalStrategist(g)
    if d.kind == "linear-order":
        order = d.order if d.order is not None else tuple(range(g.n))
        return linear_order_strategist(order)
    if d.kind == "turan-h":
        return turan_h_strategist(g, d.u1, v1=d.v1)
    if d.kind == "tripartite":
        return TripartiteAdversary(g, d.parts)
    if d.kind == "cut-poset":
        text = Path(d.poset_file).read_text()
        p = load_poset(text)
        if p.n != g.n:
            raise ValueError("poset ground set does not match the graph")
        return cut_poset_strategist(p)
    raise ValueError(f"unknown answerer kind {d.kind!r}")
