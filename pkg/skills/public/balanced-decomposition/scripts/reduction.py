#!/usr/bin/env python3
"""
Auxiliary bipartite graph H of a balanced coloring.

Sides: V1(H) = P1 ⊎ X1 and V2(H) = P2 ⊎ X2, where X1/X2 are copies (x, 1)/(x, 2)
of X. Edges:

- {p1, p2}     for G-edges between P1 and P2
- {p1, (x,2)}  for G-edges between P1 and X
- {(x,1), p2}  for G-edges between X and P2
- {(x,1), (x,2)} for every x in X

Perfect matchings of H are exactly the decompositions into the canonical parts
{x}, {p1, p2} and {p1, x, p2}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from coloring import BalancedColoring, Decomposition, validate_coloring, verify_decomposition
from errors import ConsistencyError, ContractViolation, DomainError
from graph_core import Graph, VertexSet
from matching import BipartiteGraph, Matching

KIND_P1 = "p1"
KIND_P2 = "p2"
KIND_X = "x"


@dataclass(frozen=True)
class AuxVertex:
    kind: str
    vertex: int
    side: int

    @property
    def tag(self) -> str:
        if self.kind == KIND_X:
            return f"({self.vertex},{self.side})"
        return f"{self.kind.upper()}({self.vertex})"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex, "side": self.side}


@dataclass(frozen=True)
class AuxBipartite:
    coloring: BalancedColoring
    side1: tuple[AuxVertex, ...]
    side2: tuple[AuxVertex, ...]
    graph: BipartiteGraph
    _index1: dict = field(init=False, repr=False, compare=False)
    _index2: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index1", {(a.kind, a.vertex): i for i, a in enumerate(self.side1)})
        object.__setattr__(self, "_index2", {(a.kind, a.vertex): j for j, a in enumerate(self.side2)})

    @property
    def edges(self) -> frozenset:
        return self.graph.edges

    def index1(self, kind: str, vertex: int) -> int:
        return self._index1[(kind, vertex)]

    def index2(self, kind: str, vertex: int) -> int:
        return self._index2[(kind, vertex)]


def build_aux(g: Graph, c: BalancedColoring) -> AuxBipartite:
    check = validate_coloring(g, c)
    if not check:
        raise DomainError(f"invalid coloring: {check.message}")

    side1 = tuple(
        [AuxVertex(KIND_P1, p, 1) for p in sorted(c.p1)] + [AuxVertex(KIND_X, x, 1) for x in sorted(c.x)]
    )
    side2 = tuple(
        [AuxVertex(KIND_P2, p, 2) for p in sorted(c.p2)] + [AuxVertex(KIND_X, x, 2) for x in sorted(c.x)]
    )
    index1 = {(a.kind, a.vertex): i for i, a in enumerate(side1)}
    index2 = {(a.kind, a.vertex): j for j, a in enumerate(side2)}

    edges: set[tuple[int, int]] = set()
    for u, v in sorted(g.edges):
        for a, b in ((u, v), (v, u)):
            if a in c.p1 and b in c.p2:
                edges.add((index1[(KIND_P1, a)], index2[(KIND_P2, b)]))
            elif a in c.p1 and b in c.x:
                edges.add((index1[(KIND_P1, a)], index2[(KIND_X, b)]))
            elif a in c.x and b in c.p2:
                edges.add((index1[(KIND_X, a)], index2[(KIND_P2, b)]))
    for x in c.x:
        edges.add((index1[(KIND_X, x)], index2[(KIND_X, x)]))

    return AuxBipartite(c, side1, side2, BipartiteGraph(len(side1), len(side2), frozenset(edges)))


def copy_matching(h: AuxBipartite) -> Matching:
    """The copy edges (x,1)-(x,2); the solver seeds its matching search with them."""
    return Matching(frozenset((h.index1(KIND_X, x), h.index2(KIND_X, x)) for x in h.coloring.x))


def matching_to_decomposition(g: Graph, c: BalancedColoring, h: AuxBipartite, m: Matching) -> Decomposition:
    if not m.is_perfect(h.graph):
        raise ContractViolation(f"matching of size {m.size} is not perfect on H with sides of size {h.graph.left}")

    parts: list[set[int]] = []
    x2_partner: dict[int, int] = {}
    x1_partner: dict[int, int] = {}
    for i, j in sorted(m.pairs):
        left, right = h.side1[i], h.side2[j]
        if left.kind == KIND_P1 and right.kind == KIND_P2:
            parts.append({left.vertex, right.vertex})
        elif left.kind == KIND_P1:
            x2_partner[right.vertex] = left.vertex
        elif right.kind == KIND_P2:
            x1_partner[left.vertex] = right.vertex
        elif left.vertex == right.vertex:
            parts.append({left.vertex})
        else:
            raise ContractViolation(f"pair {left.tag}-{right.tag} is not an edge of H")

    for x in sorted(c.x):
        if (x in x1_partner) != (x in x2_partner):
            raise ConsistencyError(f"copies of {x} are matched inconsistently")
        if x in x1_partner:
            parts.append({x2_partner[x], x, x1_partner[x]})

    d = Decomposition.of(parts)
    check = verify_decomposition(g, c, d, 3)
    if not check:
        raise ConsistencyError(f"decomposition from perfect matching failed verification: {check.message}")
    return d


def canonical_shape(g: Graph, c: BalancedColoring, part: VertexSet) -> Optional[str]:
    """'x', 'pair' or 'path' for the three canonical part shapes, None otherwise."""
    xs, ones, twos = part & c.x, part & c.p1, part & c.p2
    if len(part) == 1 and len(xs) == 1:
        return "x"
    if len(part) == 2 and len(ones) == 1 and len(twos) == 1:
        (p1,), (p2,) = ones, twos
        return "pair" if g.has_edge(p1, p2) else None
    if len(part) == 3 and len(ones) == 1 and len(twos) == 1 and len(xs) == 1:
        (p1,), (p2,), (x,) = ones, twos, xs
        return "path" if g.has_edge(p1, x) and g.has_edge(x, p2) else None
    return None


def normalize_decomposition(g: Graph, c: BalancedColoring, d: Decomposition) -> Decomposition:
    """Rewrite a decomposition with parts <= 3 into canonical shapes only.

    Canonical parts are kept as they are. {x, x'} and {x, x', x''} split into
    singletons; {p1, p2, x} that is not a p1-x-p2 path must hold the p1-p2 edge
    and splits into {p1, p2} and {x}.
    """
    check = verify_decomposition(g, c, d, 3)
    if not check:
        raise ContractViolation(f"normalize needs a decomposition with parts <= 3: {check.message}")

    parts: list[VertexSet] = []
    for part in d.parts:
        xs = part & c.x
        if canonical_shape(g, c, part) is not None:
            parts.append(part)
        elif xs == part:
            parts.extend(frozenset([x]) for x in sorted(xs))
        else:
            pebbles = part - xs
            parts.extend([pebbles, xs])

    out = Decomposition.of(parts)
    for part in out.parts:
        if canonical_shape(g, c, part) is None:
            raise ConsistencyError(f"part {sorted(part)} is not canonical after normalization")
    return out


def matching_from_decomposition(h: AuxBipartite, g: Graph, d: Decomposition) -> Matching:
    """Perfect matching of H corresponding to a canonical decomposition."""
    c = h.coloring
    pairs: set[tuple[int, int]] = set()
    for part in d.parts:
        shape = canonical_shape(g, c, part)
        if shape == "x":
            (x,) = part
            pairs.add((h.index1(KIND_X, x), h.index2(KIND_X, x)))
        elif shape == "pair":
            (p1,), (p2,) = part & c.p1, part & c.p2
            pairs.add((h.index1(KIND_P1, p1), h.index2(KIND_P2, p2)))
        elif shape == "path":
            (p1,), (p2,), (x,) = part & c.p1, part & c.p2, part & c.x
            pairs.add((h.index1(KIND_P1, p1), h.index2(KIND_X, x)))
            pairs.add((h.index1(KIND_X, x), h.index2(KIND_P2, p2)))
        else:
            raise ContractViolation(f"part {sorted(part)} is not canonical")

    m = Matching(frozenset(pairs))
    if not m.is_perfect(h.graph):
        raise ContractViolation("decomposition does not cover H with a perfect matching")
    return m


def aux_to_dict(h: AuxBipartite) -> dict:
    return {
        "side1": [a.to_dict() for a in h.side1],
        "side2": [a.to_dict() for a in h.side2],
        "edges": [list(e) for e in sorted(h.edges)],
    }
