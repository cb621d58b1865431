"""Command-line entry point.

Exit codes: 0 ok, 2 usage or input error, 3 size-guard violation,
4 illegal move detected mid-match.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
from pathlib import Path

from .bounds import bound_report
from .descriptors import make_algy, make_strategist, parse_algy, parse_strategist
from .engine import (
    GameError,
    MatchAbort,
    apply_answer,
    edge_status,
    empty_state,
    is_terminal,
    play_match,
)
from .graph import (
    Cut,
    EdgeListError,
    GeneratorSpec,
    Graph,
    GuardError,
    cut_value,
    generate,
    max_cut,
    parse_graph,
    serialize_graph,
)
from .poset import save_poset
from .reduction import build_cut_poset, build_reduction, load_roles
from .seeds import split_seed
from .solver import Solver


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _load_reduced(args, g):
    """Role labels for claim2 questioners: --roles wins, else the sidecar
    <graph-stem>.roles.json written by the reduce command."""
    if not args.algy.startswith("claim2"):
        return None
    roles_path = args.roles
    if roles_path is None and args.graph != "-":
        sibling = Path(str(Path(args.graph).with_suffix("")) + ".roles.json")
        if sibling.exists():
            roles_path = str(sibling)
    if roles_path is None:
        return None
    return load_roles(g, json.loads(Path(roles_path).read_text()))


def _cmd_gen(args) -> int:
    parts = tuple(int(t) for t in args.parts.split(",")) if args.parts else None
    spec = GeneratorSpec(kind=args.kind, parts=parts, n=args.n, p=args.p, seed=args.seed)
    text = serialize_graph(generate(spec))
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    solver = Solver(
        g,
        max_edges=args.guard_edges,
        max_vertices=args.guard_vertices,
        canonicalize=args.canonical,
    )
    print(json.dumps(solver.game_value().to_json_dict()))
    return 0


def _cmd_bounds(args) -> int:
    g = _read_graph(args.graph)
    print(json.dumps(bound_report(g, C=args.C).to_json_dict()))
    return 0


def _run_one(g, args, reduced, rep: int):
    seed = split_seed(args.seed, f"match:{rep}")
    algy = make_algy(parse_algy(args.algy), g, reduced=reduced, seed=seed)
    strategist = make_strategist(parse_strategist(args.strategist), g)
    return play_match(g, algy, strategist, meta={"seed": args.seed, "rep": rep})


def _cmd_simulate(args) -> int:
    g = _read_graph(args.graph)
    reduced = _load_reduced(args, g)
    if args.repeat <= 1:
        print(_run_one(g, args, reduced, 0).to_json())
        return 0
    totals = [_run_one(g, args, reduced, rep).total for rep in range(args.repeat)]
    print(
        json.dumps(
            {
                "repeats": args.repeat,
                "totals": totals,
                "mean": statistics.fmean(totals),
                "min": min(totals),
                "max": max(totals),
                "edges": g.m,
                "seed": args.seed,
            }
        )
    )
    return 0


def _cmd_reduce(args) -> int:
    g = _read_graph(args.graph)
    reduced = build_reduction(g, args.l)
    if args.cut == "auto":
        cut = max_cut(g)
    else:
        side = tuple(int(t) for t in Path(args.cut).read_text().split())
        if len(side) != g.n or any(s not in (0, 1) for s in side):
            raise ValueError(
                f"cut file must list {g.n} space-separated 0/1 side assignments"
            )
        cut = Cut(side, cut_value(g, side))
    poset = build_cut_poset(g, cut, args.l)
    out = Path(args.out)
    el_path = out.with_suffix(".el")
    roles_path = Path(str(out) + ".roles.json")
    poset_path = out.with_suffix(".poset")
    el_path.write_text(serialize_graph(reduced.h) + "\n")
    roles_path.write_text(json.dumps(reduced.roles_json()))
    poset_path.write_text(save_poset(poset) + "\n")
    print(
        json.dumps(
            {
                "n": reduced.h.n,
                "m": reduced.h.m,
                "l": args.l,
                "cut_value": cut.value,
                "files": [str(el_path), str(roles_path), str(poset_path)],
            }
        )
    )
    return 0


def _cmd_play(args) -> int:
    g = _read_graph(args.graph)
    state = empty_state(g)
    total = 0
    if args.role == "algy":
        strategist = make_strategist(parse_strategist(args.opponent), g)
        print(f"board: {serialize_graph(g)!r}; you query edges as 'u v'")
        while not is_terminal(state):
            line = input("query> ").strip()
            if not line:
                continue
            u, v = map(int, line.split())
            try:
                d = strategist.answer(state, (min(u, v), max(u, v)))
                state = apply_answer(state, (u, v), d)
            except GameError as exc:
                print(f"rejected: {exc}")
                continue
            total += 1
            print(f"answer: {d[0]} -> {d[1]} (total {total})")
        print(f"orientation determined after {total} queries")
    else:
        algy = make_algy(parse_algy(args.opponent), g, seed=args.seed)
        while not is_terminal(state):
            e = algy.next_edge(state)
            status = edge_status(state, e)
            if status.kind == "forced":
                print(f"query {e}: forced, answering {status.direction}")
                state = apply_answer(state, e, status.direction)
                total += 1
                continue
            line = input(f"orient {e} as 'x y'> ").strip()
            try:
                state = apply_answer(state, e, tuple(map(int, line.split())))
            except GameError as exc:
                print(f"rejected: {exc}")
                continue
            total += 1
        print(f"orientation determined after {total} queries")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    app = create_app(persist_dir=args.persist, busy_mode=args.busy_mode)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orientgame")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("--kind", required=True,
                   choices=["complete", "complete-multipartite", "turan", "path",
                            "cycle", "star", "gnp"])
    p.add_argument("--n", type=int)
    p.add_argument("--parts", help="comma-separated part sizes")
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="exact game value")
    p.add_argument("--graph", required=True)
    p.add_argument("--guard-edges", type=int, default=16)
    p.add_argument("--guard-vertices", type=int, default=7)
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("simulate", help="run strategy-vs-strategy matches")
    p.add_argument("--graph", required=True)
    p.add_argument("--algy", required=True)
    p.add_argument("--strategist", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--roles", help="role-map JSON for claim2 questioners")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("bounds", help="bound report")
    p.add_argument("--graph", required=True)
    p.add_argument("--C", type=float, default=8.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("reduce", help="build the hardness reduction")
    p.add_argument("--graph", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--cut", default="auto", help="'auto' or a side-assignment file")
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("play", help="interactive match on stdin/stdout")
    p.add_argument("--graph", required=True)
    p.add_argument("--role", choices=["algy", "strategist"], default="algy")
    p.add_argument("--opponent", default="greedy")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_play)

    p = sub.add_parser("serve", help="start the HTTP play service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--persist", help="directory for session persistence")
    p.add_argument("--busy-mode", choices=["wait", "busy"], default="wait")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"guard violation: {exc}", file=sys.stderr)
        return 3
    except MatchAbort as exc:
        print(exc.transcript.to_json())
        print(f"illegal move: {exc}", file=sys.stderr)
        return 4
    except (EdgeListError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
