"""Strict partial orders on dense integer ground sets, stored as bit rows."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Poset:
    """Strict order on 0..n-1: bit j of lt[i] set iff i precedes j.

    The relation must be irreflexive, antisymmetric, and transitively
    closed; the constructor verifies all three.
    """

    n: int
    lt: tuple[int, ...]

    def __post_init__(self):
        if len(self.lt) != self.n:
            raise ValueError("lt must have one row per element")
        for i, row in enumerate(self.lt):
            if row >> i & 1:
                raise ValueError(f"order is reflexive at {i}")
            if row >> self.n:
                raise ValueError(f"row {i} has bits beyond the ground set")
            j_bits = row
            while j_bits:
                j = (j_bits & -j_bits).bit_length() - 1
                j_bits &= j_bits - 1
                if self.lt[j] >> i & 1:
                    raise ValueError(f"order is not antisymmetric on ({i},{j})")
                if self.lt[j] & ~row:
                    raise ValueError(f"order is not transitively closed at ({i},{j})")

    def less(self, i: int, j: int) -> bool:
        return bool(self.lt[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return bool((self.lt[i] >> j | self.lt[j] >> i) & 1)

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Poset":
        """Transitive closure of an arc list; rejects directed cycles."""
        rows = [0] * n
        for a, b in arcs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"arc ({a},{b}) out of range")
            rows[a] |= 1 << b
        for k in range(n):
            rk = rows[k]
            for i in range(n):
                if rows[i] >> k & 1:
                    rows[i] |= rk
        for i in range(n):
            if rows[i] >> i & 1:
                raise ValueError("arc set contains a directed cycle")
        return cls(n, tuple(rows))

    @classmethod
    def from_order(cls, order) -> "Poset":
        """Chain poset of a total order (earlier elements are smaller)."""
        order = list(order)
        n = len(order)
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation of 0..n-1")
        rows = [0] * n
        below = 0
        for v in order:
            for w in _bits(below):
                rows[w] |= 1 << v
            below |= 1 << v
        return cls(n, tuple(rows))

    def columns(self) -> tuple[int, ...]:
        """cols[j] has bit i set iff i precedes j."""
        cols = [0] * self.n
        for i, row in enumerate(self.lt):
            for j in _bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def is_hasse_arc(self, i: int, j: int, cols: tuple[int, ...] | None = None) -> bool:
        """True iff i < j with no element strictly between them."""
        if not self.less(i, j):
            return False
        if cols is None:
            cols = self.columns()
        return (self.lt[i] & cols[j]) == 0

    def hasse_arcs(self) -> list[tuple[int, int]]:
        cols = self.columns()
        return [
            (i, j)
            for i in range(self.n)
            for j in _bits(self.lt[i])
            if (self.lt[i] & cols[j]) == 0
        ]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def linear_extension(p: Poset) -> list[int]:
    """Total order extending p: repeated minimal-element extraction,
    lowest index first."""
    cols = p.columns()
    remaining = (1 << p.n) - 1
    out: list[int] = []
    while remaining:
        for v in _bits(remaining):
            if cols[v] & remaining == 0:
                out.append(v)
                remaining &= ~(1 << v)
                break
    return out


# ---------------------------------------------------------------------------
# poset file format: line 1 "N", then generator lines "u v" meaning u < v;
# the closure is taken on load.

def load_poset(text: str) -> Poset:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise ValueError("empty poset document")
    n = int(lines[0])
    arcs = []
    for ln in lines[1:]:
        a, b = ln.split()
        arcs.append((int(a), int(b)))
    return Poset.from_arcs(n, arcs)


def save_poset(p: Poset) -> str:
    """Emit the Hasse arcs as generators."""
    out = [str(p.n)]
    out.extend(f"{a} {b}" for a, b in sorted(p.hasse_arcs()))
    return "\n".join(out)
