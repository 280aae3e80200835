#!/usr/bin/env python3
"""
Balanced colorings and balanced decompositions.

A balanced coloring splits V(G) into P1, P2 and X with |P1| = |P2|. A balanced
decomposition partitions V(G) into connected parts, each holding as many P1
vertices as P2 vertices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from errors import ConsistencyError, GraphParseError, NotApplicableError
from graph_core import (
    MIN_CUT_ENUMERATION_LIMIT,
    EMPTY,
    Graph,
    VertexSet,
    components,
    is_connected,
    is_k_connected,
    is_vertex_cut,
    min_vertex_cut,
)

# label vector values, in enumeration order
LABEL_X, LABEL_P1, LABEL_P2 = 0, 1, 2


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    message: str

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BalancedColoring:
    p1: VertexSet
    p2: VertexSet
    x: VertexSet = EMPTY

    @classmethod
    def of(cls, p1: Iterable[int], p2: Iterable[int], x: Iterable[int] = ()) -> "BalancedColoring":
        return cls(frozenset(p1), frozenset(p2), frozenset(x))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "BalancedColoring":
        p1, p2, x = [], [], []
        for v, label in enumerate(labels):
            (p1 if label == LABEL_P1 else p2 if label == LABEL_P2 else x).append(v)
        return cls.of(p1, p2, x)

    def labels(self, n: int) -> tuple[int, ...]:
        return tuple(LABEL_P1 if v in self.p1 else LABEL_P2 if v in self.p2 else LABEL_X for v in range(n))

    @property
    def pebbles(self) -> int:
        return len(self.p1)


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[VertexSet, ...]

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]]) -> "Decomposition":
        frozen = [frozenset(p) for p in parts]
        frozen.sort(key=lambda p: (min(p) if p else -1, sorted(p)))
        return cls(tuple(frozen))

    @property
    def max_part_size(self) -> int:
        return max((len(p) for p in self.parts), default=0)


# ---------------------------------------------------------------------------
# 校验
# ---------------------------------------------------------------------------

def validate_coloring(g: Graph, c: BalancedColoring) -> CheckResult:
    for name, members in (("p1", c.p1), ("p2", c.p2), ("x", c.x)):
        bad = sorted(v for v in members if not 0 <= v < g.n)
        if bad:
            return CheckResult(False, f"{name} has vertices {bad} outside [0, {g.n})")
    for (a, sa), (b, sb) in ((("p1", c.p1), ("p2", c.p2)), (("p1", c.p1), ("x", c.x)), (("p2", c.p2), ("x", c.x))):
        overlap = sorted(sa & sb)
        if overlap:
            return CheckResult(False, f"{a} and {b} are not disjoint: {overlap}")
    missing = sorted(set(range(g.n)) - (c.p1 | c.p2 | c.x))
    if missing:
        return CheckResult(False, f"coloring does not cover vertices {missing}")
    if len(c.p1) != len(c.p2):
        return CheckResult(False, f"|p1| = {len(c.p1)} differs from |p2| = {len(c.p2)}")
    return CheckResult(True, "valid balanced coloring")


def verify_decomposition(g: Graph, c: BalancedColoring, d: Decomposition, s: int) -> CheckResult:
    if s < 1:
        return CheckResult(False, f"part size bound must be positive, got {s}")
    seen: set[int] = set()
    for i, part in enumerate(d.parts):
        if not part:
            return CheckResult(False, f"part {i} is empty")
        bad = sorted(v for v in part if not 0 <= v < g.n)
        if bad:
            return CheckResult(False, f"part {i} has vertices {bad} outside [0, {g.n})")
        overlap = sorted(seen & part)
        if overlap:
            return CheckResult(False, f"part {i} overlaps earlier parts at {overlap}")
        seen |= part
    missing = sorted(set(range(g.n)) - seen)
    if missing:
        return CheckResult(False, f"parts do not cover vertices {missing}")
    for i, part in enumerate(d.parts):
        if len(part) > s:
            return CheckResult(False, f"part {i} {sorted(part)} has {len(part)} > {s} vertices")
        if len(components(g, within=part)) != 1:
            return CheckResult(False, f"part {i} {sorted(part)} is not connected")
        ones, twos = len(part & c.p1), len(part & c.p2)
        if ones != twos:
            return CheckResult(False, f"part {i} {sorted(part)} is unbalanced ({ones} in p1, {twos} in p2)")
    return CheckResult(True, f"balanced decomposition with {len(d.parts)} parts of size <= {s}")


# ---------------------------------------------------------------------------
# 枚举
# ---------------------------------------------------------------------------

def count_balanced_colorings(n: int) -> int:
    return sum(comb(n, k) * comb(n - k, k) for k in range(n // 2 + 1))


def _label_vectors(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All vectors with k P1 labels and k P2 labels, lexicographically ascending."""
    vector = [LABEL_X] * n

    def fill(i: int, xs: int, ones: int, twos: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(vector)
            return
        for label, left in ((LABEL_X, xs), (LABEL_P1, ones), (LABEL_P2, twos)):
            if left == 0:
                continue
            vector[i] = label
            yield from fill(
                i + 1,
                xs - (label == LABEL_X),
                ones - (label == LABEL_P1),
                twos - (label == LABEL_P2),
            )

    yield from fill(0, n - 2 * k, k, k)


def enumerate_balanced_colorings(g: Graph) -> Iterator[BalancedColoring]:
    for k in range(g.n // 2 + 1):
        for labels in _label_vectors(g.n, k):
            yield BalancedColoring.from_labels(labels)


# ---------------------------------------------------------------------------
# 对抗着色
# ---------------------------------------------------------------------------

def adversarial_coloring(g: Graph, enumeration_limit: int = MIN_CUT_ENUMERATION_LIMIT) -> BalancedColoring:
    """Coloring built from a minimum vertex cut Y that forces a part with at least 4 vertices.

    With G1 the smaller side of the cut and l = min(|Y|, |G1| - 1): l vertices of
    Y go to P1 and the rest of Y to P2, l + 1 vertices of G1 go to P2, and P1 is
    filled up to |Y| + 1 from G2. Smallest indices are taken first everywhere.
    """
    if g.n < 3:
        raise NotApplicableError(f"graph needs at least 3 vertices, got {g.n}")
    if not is_connected(g):
        raise NotApplicableError("graph is disconnected")
    half = g.n // 2
    if is_k_connected(g, half):
        raise NotApplicableError(f"graph is {half}-connected (floor(n/2) with n = {g.n})")

    y = min_vertex_cut(g, enumeration_limit)
    if y is None:
        raise NotApplicableError("graph has no vertex cut")
    split = is_vertex_cut(g, y)
    g1, g2 = split.side1, split.side2
    if len(g2) < len(g1):
        g1, g2 = g2, g1

    cut, small, large = sorted(y), sorted(g1), sorted(g2)
    l = min(len(cut), len(small) - 1)
    top_up = len(cut) + 1 - l
    if len(large) < top_up:
        raise ConsistencyError(f"larger side has {len(large)} vertices, {top_up} needed for P1")

    p1 = cut[:l] + large[:top_up]
    p2 = cut[l:] + small[: l + 1]
    coloring = BalancedColoring.of(p1, p2, set(range(g.n)) - set(p1) - set(p2))
    check = validate_coloring(g, coloring)
    if not check:
        raise ConsistencyError(f"adversarial coloring is invalid: {check.message}")
    return coloring


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def _int_list(payload: dict, key: str) -> list[int]:
    value = payload.get(key)
    if not isinstance(value, list):
        raise GraphParseError("expected a list of vertices", field=key)
    for item in value:
        if isinstance(item, bool) or not isinstance(item, int):
            raise GraphParseError(f"expected an integer, got {item!r}", field=key)
    return value


def _load_object(text: str) -> dict:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(payload, dict):
        raise GraphParseError("expected a JSON object")
    return payload


def parse_coloring(text: str, n: int) -> BalancedColoring:
    """``{"p1": [..], "p2": [..], "x": [..]}``; a missing ``x`` becomes the complement."""
    payload = _load_object(text)
    p1, p2 = _int_list(payload, "p1"), _int_list(payload, "p2")
    if "x" in payload:
        x: Iterable[int] = _int_list(payload, "x")
    else:
        x = set(range(n)) - set(p1) - set(p2)
    if len(set(p1)) != len(p1) or len(set(p2)) != len(p2):
        raise GraphParseError("repeated vertex in a color class", field="p1" if len(set(p1)) != len(p1) else "p2")
    return BalancedColoring.of(p1, p2, x)


def coloring_to_dict(c: BalancedColoring) -> dict:
    return {"p1": sorted(c.p1), "p2": sorted(c.p2), "x": sorted(c.x)}


def parse_decomposition(text: str) -> Decomposition:
    payload = _load_object(text)
    parts = payload.get("parts")
    if not isinstance(parts, list):
        raise GraphParseError("expected a list of parts", field="parts")
    for i, part in enumerate(parts):
        if not isinstance(part, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in part):
            raise GraphParseError("part must be a list of vertices", field=f"parts[{i}]")
    return Decomposition.of(parts)


def decomposition_to_dict(d: Decomposition) -> dict:
    return {"parts": [sorted(p) for p in d.parts], "max_part_size": d.max_part_size}


def describe_coloring(c: BalancedColoring) -> str:
    return f"p1={sorted(c.p1)} p2={sorted(c.p2)} x={sorted(c.x)}"
