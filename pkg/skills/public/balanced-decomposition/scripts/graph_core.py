#!/usr/bin/env python3
"""
Graph core: simple undirected graphs on vertices 0..n-1.

- parsing (JSON or plain-text edge list) and serialization
- open neighborhoods, induced subgraphs, components
- vertex cuts, k-connectivity and lexicographically smallest minimum cuts
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import FrozenSet, Iterable, Optional

import networkx as nx

from errors import ConsistencyError, DomainError, GraphParseError

VertexSet = FrozenSet[int]

EMPTY: VertexSet = frozenset()

# Past this many candidate subsets the minimum cut comes from networkx instead
# of the lexicographic scan (the size stays exact, the tie-break does not).
MIN_CUT_ENUMERATION_LIMIT = 200_000


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[tuple[int, int]] = frozenset()
    adjacency: tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"vertex count must be a non-negative integer, got {self.n!r}")
        normalized: set[tuple[int, int]] = set()
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge ({u}, {v}) out of range [0, {self.n})")
            a, b = (u, v) if u < v else (v, u)
            normalized.add((a, b))
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in adj))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class CutCheck:
    """Answer of is_vertex_cut; ``side1``/``side2`` are empty when ``is_cut`` is False."""
    is_cut: bool
    side1: VertexSet = EMPTY
    side2: VertexSet = EMPTY

    def __bool__(self) -> bool:
        return self.is_cut


# ---------------------------------------------------------------------------
# 解析 & 序列化
# ---------------------------------------------------------------------------

def _as_int(value: object, line: Optional[int], field_name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphParseError(f"expected an integer, got {value!r}", line=line, field=field_name)
    return value


def _build(n: int, pairs: list[tuple[int, int, Optional[int], str]]) -> Graph:
    if n < 0:
        raise GraphParseError(f"vertex count must be non-negative, got {n}", field="n")
    seen: set[tuple[int, int]] = set()
    for u, v, line, field_name in pairs:
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", line=line, field=field_name)
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphParseError(f"endpoint {w} out of range [0, {n})", line=line, field=field_name)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphParseError(f"duplicate edge ({key[0]}, {key[1]})", line=line, field=field_name)
        seen.add(key)
    return Graph(n, frozenset(seen))


def _parse_json_graph(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(payload, dict):
        raise GraphParseError("graph JSON must be an object")
    if "n" not in payload:
        raise GraphParseError("missing key", field="n")
    n = _as_int(payload["n"], None, "n")
    edges = payload.get("edges", [])
    if not isinstance(edges, list):
        raise GraphParseError("edges must be a list", field="edges")
    pairs = []
    for i, edge in enumerate(edges):
        field_name = f"edges[{i}]"
        if not isinstance(edge, list) or len(edge) != 2:
            raise GraphParseError(f"edge must be a pair [u, v], got {edge!r}", field=field_name)
        pairs.append((_as_int(edge[0], None, field_name), _as_int(edge[1], None, field_name), None, field_name))
    return _build(n, pairs)


def _parse_text_graph(text: str) -> Graph:
    rows = [
        (number, raw.split())
        for number, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not rows:
        raise GraphParseError("empty graph text", line=1)
    header_line, header = rows[0]
    if len(header) != 2:
        raise GraphParseError("header must be 'n m'", line=header_line, field="header")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphParseError("header must contain two integers", line=header_line, field="header") from exc
    body = rows[1:]
    if len(body) != m:
        raise GraphParseError(f"header declares {m} edges, found {len(body)}", line=header_line, field="m")
    pairs = []
    for number, tokens in body:
        if len(tokens) != 2:
            raise GraphParseError("edge line must be 'u v'", line=number, field="edge")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise GraphParseError("edge endpoints must be integers", line=number, field="edge") from exc
        pairs.append((u, v, number, "edge"))
    return _build(n, pairs)


def parse_graph(text: str) -> Graph:
    """Parse ``{"n": .., "edges": [[u, v], ..]}`` or the plain ``n m`` + ``u v`` lines format."""
    if text.lstrip().startswith("{"):
        return _parse_json_graph(text)
    return _parse_text_graph(text)


def serialize_graph(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# 邻域 / 子图 / 连通性
# ---------------------------------------------------------------------------

def check_members(g: Graph, s: Iterable[int]) -> VertexSet:
    members = frozenset(s)
    bad = sorted(v for v in members if not (isinstance(v, int) and 0 <= v < g.n))
    if bad:
        raise DomainError(f"vertices {bad} out of range [0, {g.n})")
    return members


def neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    members = check_members(g, s)
    out: set[int] = set()
    for v in members:
        out.update(g.adjacency[v])
    return frozenset(out - members)


def induced(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph, relabelling ``s`` to 0..|s|-1 in ascending order."""
    members = check_members(g, s)
    index = {v: i for i, v in enumerate(sorted(members))}
    edges = frozenset((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return Graph(len(index), edges)


def components(g: Graph, within: Optional[Iterable[int]] = None) -> list[VertexSet]:
    """Connected components of G[within], each listed once, ordered by smallest vertex."""
    pool = set(range(g.n)) if within is None else set(check_members(g, within))
    result: list[VertexSet] = []
    for start in sorted(pool):
        if start not in pool:
            continue
        pool.discard(start)
        stack = [start]
        comp = {start}
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w in pool:
                    pool.discard(w)
                    comp.add(w)
                    stack.append(w)
        result.append(frozenset(comp))
    return result


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(components(g)) == 1


def is_vertex_cut(g: Graph, y: Iterable[int]) -> CutCheck:
    cut = check_members(g, y)
    rest = frozenset(range(g.n)) - cut
    comps = components(g, rest)
    if len(comps) < 2:
        return CutCheck(False)
    return CutCheck(True, comps[0], rest - comps[0])


# ---------------------------------------------------------------------------
# 连通度
# ---------------------------------------------------------------------------

def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(sorted(g.edges))
    return graph


def node_connectivity(g: Graph) -> int:
    """kappa(G); complete graphs get n - 1, disconnected graphs and n <= 1 get 0."""
    if g.n <= 1 or not is_connected(g):
        return 0
    if g.is_complete():
        return g.n - 1
    return int(nx.node_connectivity(to_networkx(g)))


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    return g.n > k and node_connectivity(g) >= k


def min_vertex_cut(g: Graph, enumeration_limit: int = MIN_CUT_ENUMERATION_LIMIT) -> Optional[VertexSet]:
    """Lexicographically smallest minimum vertex cut, or None when no cut exists."""
    if g.n <= 1 or g.is_complete():
        return None
    if not is_connected(g):
        return EMPTY
    size = node_connectivity(g)
    if comb(g.n, size) > enumeration_limit:
        return frozenset(nx.minimum_node_cut(to_networkx(g)))
    for candidate in combinations(range(g.n), size):
        if is_vertex_cut(g, candidate):
            return frozenset(candidate)
    raise ConsistencyError(f"no vertex cut of size {size} found although kappa(G) = {size}")


# ---------------------------------------------------------------------------
# 常用图
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))
