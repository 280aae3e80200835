#!/usr/bin/env python3
"""
Exhaustive ground truth for small graphs.

- exists_decomposition: backtracking over connected balanced parts
- bdn_exact: balanced decomposition number by trying every balanced coloring

Both are exponential; the size bounds are explicit and raise ResourceLimitError.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from coloring import (
    BalancedColoring,
    Decomposition,
    coloring_to_dict,
    enumerate_balanced_colorings,
    validate_coloring,
)
from errors import DomainError, ResourceLimitError
from graph_core import Graph, VertexSet

DEFAULT_MAX_N = 10
DEFAULT_BDN_MAX_N = 8

INFINITY = math.inf


@dataclass(frozen=True)
class BdnResult:
    value: Union[int, float]
    witness: Optional[BalancedColoring]
    colorings: int

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITY

    def to_dict(self) -> dict:
        return {
            "bdn": "infinity" if self.is_infinite else self.value,
            "witness": coloring_to_dict(self.witness) if self.witness else None,
            "colorings": self.colorings,
        }


def _weights(c: BalancedColoring) -> dict[int, int]:
    w = {v: 1 for v in c.p1}
    w.update({v: -1 for v in c.p2})
    return w


def _balanced_parts(g: Graph, seed: int, free: VertexSet, s: int, weight: dict[int, int]) -> list[VertexSet]:
    """Connected balanced parts of G[free] containing ``seed`` with at most s vertices.

    A partial part is dropped once its imbalance exceeds the room left to repair it.
    """
    start = frozenset([seed])
    seen: set[VertexSet] = set()
    found: set[VertexSet] = set()
    stack = [(start, weight.get(seed, 0))]
    while stack:
        part, balance = stack.pop()
        if part in seen:
            continue
        seen.add(part)
        if balance == 0:
            found.add(part)
        if len(part) >= s:
            continue
        room = s - len(part) - 1
        frontier: set[int] = set()
        for v in part:
            frontier.update(g.adjacency[v])
        for u in sorted((frontier & free) - part):
            grown_balance = balance + weight.get(u, 0)
            if abs(grown_balance) > room:
                continue
            grown = part | {u}
            if grown not in seen:
                stack.append((grown, grown_balance))
    return sorted(found, key=lambda p: (len(p), sorted(p)))


def exists_decomposition(
    g: Graph,
    c: BalancedColoring,
    s: int,
    max_n: int = DEFAULT_MAX_N,
) -> Optional[Decomposition]:
    """A balanced decomposition with parts of at most s vertices, or None.

    The smallest unassigned vertex always seeds the next part, and candidate parts
    are tried smallest first, so the witness returned is deterministic.
    """
    if g.n > max_n:
        raise ResourceLimitError(f"exhaustive search limited to n <= {max_n}, got n = {g.n}")
    if s < 1:
        raise DomainError(f"part size bound must be positive, got {s}")
    check = validate_coloring(g, c)
    if not check:
        raise DomainError(f"invalid coloring: {check.message}")

    weight = _weights(c)
    dead_ends: set[VertexSet] = set()

    def solve(free: VertexSet) -> Optional[list[VertexSet]]:
        if not free:
            return []
        if free in dead_ends:
            return None
        for part in _balanced_parts(g, min(free), free, s, weight):
            rest = solve(free - part)
            if rest is not None:
                return [part] + rest
        dead_ends.add(free)
        return None

    parts = solve(frozenset(range(g.n)))
    return None if parts is None else Decomposition.of(parts)


def min_part_size(g: Graph, c: BalancedColoring, max_n: int = DEFAULT_MAX_N, start: int = 1) -> Optional[int]:
    """Least s >= start admitting a decomposition for this coloring, None if even s = n fails."""
    for s in range(max(start, 1), max(g.n, 1) + 1):
        if exists_decomposition(g, c, s, max_n) is not None:
            return s
    return None


def bdn_exact(g: Graph, max_n: int = DEFAULT_BDN_MAX_N) -> BdnResult:
    if g.n == 0:
        raise DomainError("balanced decomposition number is undefined for the empty graph")
    if g.n > max_n:
        raise ResourceLimitError(f"bdn_exact limited to n <= {max_n}, got n = {g.n}")

    best = 1
    witness: Optional[BalancedColoring] = None
    count = 0
    for coloring in enumerate_balanced_colorings(g):
        count += 1
        if witness is None:
            witness = coloring
        if exists_decomposition(g, coloring, best, max_n) is not None:
            continue
        needed = min_part_size(g, coloring, max_n, start=best + 1)
        if needed is None:
            return BdnResult(INFINITY, coloring, count)
        best, witness = needed, coloring
    return BdnResult(best, witness, count)
