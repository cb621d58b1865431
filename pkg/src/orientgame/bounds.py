"""Closed-form lower and upper bounds on the game value, plus the
polynomial-time estimator sandwiching it within a factor O(n / log n).

Isolated vertices are stripped before anything is computed: they change
neither the game nor its value, and the per-vertex bound only holds
without them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, count_acyclic_orientations, min_degree_core, strip_isolated

AO_COUNT_GUARD = 40


@dataclass(frozen=True)
class BoundReport:
    n_half: int
    info: int | None
    degeneracy: int
    thm51: float
    edge_upper: int
    jiang_upper: float
    moon_moser_triangles: float
    best_lower: float
    best_upper: float

    def to_json_dict(self) -> dict:
        return {
            "n_half": self.n_half,
            "info": self.info,
            "degeneracy": self.degeneracy,
            "thm51": self.thm51,
            "edge_upper": self.edge_upper,
            "jiang_upper": self.jiang_upper,
            "moon_moser_triangles": self.moon_moser_triangles,
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
        }

    @property
    def thm51_dominated(self) -> bool:
        """True when another lower entry beats the degree-averaged one,
        a sign the chosen C is too conservative for this graph."""
        others = [self.n_half, self.degeneracy]
        if self.info is not None:
            others.append(self.info)
        return max(others) > self.thm51


def _ceil_log2(x: int) -> int:
    """Smallest t with 2**t >= x, for x >= 1."""
    return (x - 1).bit_length()


def bound_report(g: Graph, C: float = 8.0) -> BoundReport:
    """All bound entries at once. ``C`` scales the degree-averaged lower
    bound; it is never pinned by theory, and the default 8 is calibrated so
    the entry stays below the exact value on every solver-verified graph."""
    if C <= 0:
        raise ValueError("C must be positive")
    g, _ = strip_isolated(g)
    n, m = g.n, g.m
    n_half = (n + 1) // 2
    info: int | None = None
    if m <= AO_COUNT_GUARD:
        info = _ceil_log2(count_acyclic_orientations(g))
    if m == 0:
        degeneracy = 0
    else:
        _, d = min_degree_core(g)
        # ceil(log2((d+1)!/2^n)) computed exactly in integers
        degeneracy = max(0, _ceil_log2(math.factorial(d + 1)) - n)
    thm51 = m * math.log2(n) / (C * n) if n >= 2 and m > 0 else 0.0
    jiang = n * n / 4 + 2 * n ** 1.75 * math.log(n) ** 0.25 if n >= 1 else 0.0
    moon_moser = max(0.0, (m / (3 * n)) * (4 * m - n * n)) if n > 0 else 0.0
    lowers = [n_half, degeneracy, thm51]
    if info is not None:
        lowers.append(info)
    best_lower = max(lowers)
    best_upper = min(m, jiang)
    return BoundReport(
        n_half=n_half,
        info=info,
        degeneracy=degeneracy,
        thm51=thm51,
        edge_upper=m,
        jiang_upper=jiang,
        moon_moser_triangles=moon_moser,
        best_lower=best_lower,
        best_upper=best_upper,
    )


def approx_estimate(g: Graph, C: float) -> tuple[float, int, float]:
    """(lower, upper, ratio): e*log2(n)/(C*n) <= value <= e, an
    O(n / log n)-factor estimate."""
    if C <= 0:
        raise ValueError("C must be positive")
    if g.n < 2:
        raise ValueError("estimate needs n >= 2")
    lower = g.m * math.log2(g.n) / (C * g.n)
    ratio = C * g.n / math.log2(g.n)
    return lower, g.m, ratio
