#!/usr/bin/env python3
"""
Maximum bipartite matching and Hall-violator extraction.

Free side-1 vertices are augmented in ascending order and neighbors are scanned
in ascending order, so the matching (and every certificate derived from it) is
reproducible. The solver seeds the search with the copy edges of H, which keeps
X vertices in singleton parts unless a pebble needs them.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, FrozenSet, Iterable, Iterator, Optional

from errors import ContractViolation, DomainError
from graph_core import VertexSet

if TYPE_CHECKING:
    from reduction import AuxBipartite

FREE = -1


@dataclass(frozen=True)
class BipartiteGraph:
    left: int
    right: int
    edges: FrozenSet[tuple[int, int]] = frozenset()
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj: list[list[int]] = [[] for _ in range(self.left)]
        for i, j in self.edges:
            if not (0 <= i < self.left and 0 <= j < self.right):
                raise DomainError(f"edge ({i}, {j}) outside sides {self.left} x {self.right}")
            adj[i].append(j)
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def of(cls, left: int, right: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        return cls(left, right, frozenset(edges))

    def left_neighborhood(self, rows: Iterable[int]) -> FrozenSet[int]:
        out: set[int] = set()
        for i in rows:
            out.update(self.adjacency[i])
        return frozenset(out)


@dataclass(frozen=True)
class Matching:
    pairs: FrozenSet[tuple[int, int]] = frozenset()

    @property
    def size(self) -> int:
        return len(self.pairs)

    def mate_left(self) -> dict[int, int]:
        return {i: j for i, j in self.pairs}

    def mate_right(self) -> dict[int, int]:
        return {j: i for i, j in self.pairs}

    def is_matching_of(self, bg: BipartiteGraph) -> bool:
        lefts = [i for i, _ in self.pairs]
        rights = [j for _, j in self.pairs]
        return (
            self.pairs <= bg.edges
            and len(set(lefts)) == len(lefts)
            and len(set(rights)) == len(rights)
        )

    def is_perfect(self, bg: BipartiteGraph) -> bool:
        return bg.left == bg.right and self.size == bg.left and self.is_matching_of(bg)


@dataclass(frozen=True)
class HallViolator:
    """A ⊆ P1 and B ⊆ X (as side-1 copies) whose H-neighborhood is too small.

    ``nh_p2`` and ``nh_x2`` split N_H(A ∪ B) into P2 vertices and side-2 X copies.
    """
    a: VertexSet
    b: VertexSet
    nh_p2: VertexSet
    nh_x2: VertexSet
    unmatched: int = 1

    @property
    def deficiency(self) -> int:
        return len(self.a) + len(self.b) - len(self.nh_p2) - len(self.nh_x2)


def _augment(root: int, adjacency: tuple[tuple[int, ...], ...], mate_l: list[int], mate_r: list[int]) -> bool:
    """Iterative form of the recursive augmenting search (same visiting order)."""
    seen: set[int] = set()
    stack: list[tuple[int, Iterator[int]]] = [(root, iter(adjacency[root]))]
    via: list[int] = []
    while stack:
        u, neighbors = stack[-1]
        for v in neighbors:
            if v in seen:
                continue
            seen.add(v)
            if mate_r[v] == FREE:
                chosen = via + [v]
                for (left, _), right in zip(stack, chosen):
                    mate_l[left] = right
                    mate_r[right] = left
                return True
            via.append(v)
            stack.append((mate_r[v], iter(adjacency[mate_r[v]])))
            break
        else:
            stack.pop()
            if via:
                via.pop()
    return False


def max_matching(bg: BipartiteGraph, initial: Optional[Matching] = None) -> Matching:
    """Maximum matching; free side-1 vertices are augmented in ascending order.

    ``initial`` seeds the search. Matched vertices stay matched, so trying each
    initially free vertex once still reaches a maximum matching.
    """
    mate_l = [FREE] * bg.left
    mate_r = [FREE] * bg.right
    if initial is not None:
        if not initial.is_matching_of(bg):
            raise DomainError("initial pairs are not a matching of the bipartite graph")
        for i, j in initial.pairs:
            mate_l[i], mate_r[j] = j, i
    for u in range(bg.left):
        if mate_l[u] == FREE:
            _augment(u, bg.adjacency, mate_l, mate_r)
    return Matching(frozenset((i, j) for i, j in enumerate(mate_l) if j != FREE))


def deficiency_set(bg: BipartiteGraph, m: Matching) -> tuple[FrozenSet[int], FrozenSet[int]]:
    """Side-1/side-2 vertices reachable by alternating paths from every unmatched side-1 vertex."""
    mate_l, mate_r = m.mate_left(), m.mate_right()
    z1 = {i for i in range(bg.left) if i not in mate_l}
    z2: set[int] = set()
    queue = deque(sorted(z1))
    while queue:
        i = queue.popleft()
        for j in bg.adjacency[i]:
            if j in z2:
                continue
            z2.add(j)
            if j not in mate_r:
                raise ContractViolation(f"matching is not maximum: side-2 vertex {j} is reachable and free")
            partner = mate_r[j]
            if partner not in z1:
                z1.add(partner)
                queue.append(partner)
    return frozenset(z1), frozenset(z2)


def hall_violator(h: "AuxBipartite", m: Matching) -> HallViolator:
    if m.is_perfect(h.graph):
        raise ContractViolation("matching is perfect; no Hall violator exists")
    z1, z2 = deficiency_set(h.graph, m)
    a = frozenset(h.side1[i].vertex for i in z1 if h.side1[i].kind == "p1")
    b = frozenset(h.side1[i].vertex for i in z1 if h.side1[i].kind == "x")
    nh_p2 = frozenset(h.side2[j].vertex for j in z2 if h.side2[j].kind == "p2")
    nh_x2 = frozenset(h.side2[j].vertex for j in z2 if h.side2[j].kind == "x")
    return HallViolator(a, b, nh_p2, nh_x2, unmatched=h.graph.left - m.size)
