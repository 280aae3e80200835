#!/usr/bin/env python3
"""
Vertex-cut certificates built from Hall violators of H.

Given the violator A ⊆ P1, B ⊆ X with N_H(A ∪ B) too small, let
C = P2 \\ N_H(A ∪ B) and D = X \\ N_H(A ∪ B) (side-2 copies). Then

- K_C = (P1 \\ A) ∪ (P2 \\ C) ∪ (X \\ B) separates C from A ∪ B,
- K_A = (P1 \\ A) ∪ (P2 \\ C) ∪ (X \\ D) separates A from C ∪ D,

and |K_C| + |K_A| <= n - 2, so the smaller one has at most floor(n/2) - 1
vertices and G is not floor(n/2)-connected.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from coloring import BalancedColoring, CheckResult
from errors import ConsistencyError, DomainError, GraphParseError
from graph_core import EMPTY, Graph, VertexSet, is_vertex_cut, neighborhood
from matching import HallViolator

SIDE_C = "C"
SIDE_A = "A"


@dataclass(frozen=True)
class CutCertificate:
    n: int
    cut: VertexSet
    separated: VertexSet
    remainder: VertexSet
    a: VertexSet = EMPTY
    b: VertexSet = EMPTY
    c: VertexSet = EMPTY
    d: VertexSet = EMPTY
    chosen_side: str = SIDE_C
    cut_c: VertexSet = EMPTY
    cut_a: VertexSet = EMPTY
    counting: dict = field(default_factory=dict, compare=False)

    @property
    def floor_half_minus_one(self) -> int:
        return self.n // 2 - 1


def _adjacent(g: Graph, sources: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for v in sources:
        out.update(g.adjacency[v])
    return out


def violator_to_certificate(g: Graph, col: BalancedColoring, v: HallViolator) -> CutCertificate:
    p1, p2, xs = col.p1, col.p2, col.x
    if not (v.a <= p1 and v.b <= xs and v.nh_p2 <= p2 and v.nh_x2 <= xs):
        raise DomainError("violator sets do not fit the coloring classes")
    if v.deficiency < 1:
        raise DomainError(f"not a violator: |A| + |B| - |N_H(A ∪ B)| = {v.deficiency}")

    # N_H(A ∪ B) straight from G: P2-neighbors of A ∪ B, X-neighbors of A, and B's own copies
    expected_p2 = frozenset(_adjacent(g, v.a | v.b) & p2)
    expected_x2 = frozenset((_adjacent(g, v.a) & xs) | v.b)
    if expected_p2 != v.nh_p2 or expected_x2 != v.nh_x2:
        raise DomainError("violator neighborhood does not match H built from the graph")

    c = p2 - v.nh_p2
    d = xs - v.nh_x2
    if not v.a or not c:
        raise ConsistencyError(f"degenerate violator: |A| = {len(v.a)}, |C| = {len(c)}")

    sym = (_adjacent(g, c | d) & p1) | (_adjacent(g, c) & xs) | d
    if len(sym) > len(c) + len(d) - 1:
        raise ConsistencyError(f"|N_H(C ∪ D)| = {len(sym)} exceeds |C| + |D| - 1 = {len(c) + len(d) - 1}")

    slack = len(xs) - len(v.b) - len(d)
    slack_bound = len(v.a) + len(c) - len(p1) - 1
    if not 0 <= slack <= slack_bound:
        raise ConsistencyError(f"counting chain broken: 0 <= {slack} <= {slack_bound} does not hold")

    common = (p1 - v.a) | (p2 - c)
    cut_c = common | (xs - v.b)
    cut_a = common | (xs - d)
    if len(cut_c) + len(cut_a) > g.n - 2:
        raise ConsistencyError(f"|K_C| + |K_A| = {len(cut_c) + len(cut_a)} exceeds n - 2 = {g.n - 2}")

    if len(cut_a) < len(cut_c):
        side, cut, separated, remainder = SIDE_A, cut_a, v.a, c | d
    else:
        side, cut, separated, remainder = SIDE_C, cut_c, c, v.a | v.b

    cert = CutCertificate(
        n=g.n,
        cut=cut,
        separated=separated,
        remainder=remainder,
        a=v.a,
        b=v.b,
        c=c,
        d=d,
        chosen_side=side,
        cut_c=cut_c,
        cut_a=cut_a,
        counting={
            "k_c": len(cut_c),
            "k_a": len(cut_a),
            "sum": len(cut_c) + len(cut_a),
            "sum_bound": g.n - 2,
            "slack": slack,
            "slack_bound": slack_bound,
        },
    )
    check = verify_certificate(g, cert)
    if not check:
        raise ConsistencyError(f"certificate failed verification: {check.message}")
    return cert


def verify_certificate(g: Graph, cert: CutCertificate) -> CheckResult:
    """Re-check a certificate with graph primitives only (no matching involved)."""
    if cert.n != g.n:
        return CheckResult(False, f"certificate is for n = {cert.n}, graph has n = {g.n}")
    sets = (("cut", cert.cut), ("separated", cert.separated), ("remainder", cert.remainder))
    for name, members in sets:
        bad = sorted(x for x in members if not 0 <= x < g.n)
        if bad:
            return CheckResult(False, f"{name} has vertices {bad} outside [0, {g.n})")
    if cert.cut & cert.separated or cert.cut & cert.remainder or cert.separated & cert.remainder:
        return CheckResult(False, "cut, separated and remainder are not disjoint")
    if len(cert.cut) + len(cert.separated) + len(cert.remainder) != g.n:
        return CheckResult(False, "cut, separated and remainder do not cover V(G)")
    if not cert.separated or not cert.remainder:
        return CheckResult(False, "both sides of the cut must be nonempty")
    leaks = sorted(neighborhood(g, cert.separated) & cert.remainder)
    if leaks:
        return CheckResult(False, f"separated side has neighbors {leaks} in the remainder")
    if not is_vertex_cut(g, cert.cut):
        return CheckResult(False, f"{sorted(cert.cut)} is not a vertex cut")
    bound = g.n // 2 - 1
    if len(cert.cut) > bound:
        return CheckResult(False, f"|cut| = {len(cert.cut)} exceeds floor(n/2) - 1 = {bound}")
    return CheckResult(True, f"vertex cut of size {len(cert.cut)} <= {bound}; G is not {g.n // 2}-connected")


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def certificate_to_dict(cert: CutCertificate) -> dict:
    return {
        "cut": sorted(cert.cut),
        "separated": sorted(cert.separated),
        "remainder": sorted(cert.remainder),
        "a": sorted(cert.a),
        "b": sorted(cert.b),
        "c": sorted(cert.c),
        "d": sorted(cert.d),
        "chosen_side": cert.chosen_side,
        "floor_half_minus_one": cert.floor_half_minus_one,
        "n": cert.n,
        "cut_c": sorted(cert.cut_c),
        "cut_a": sorted(cert.cut_a),
        "counting": dict(cert.counting),
    }


def parse_certificate(text: str) -> CutCertificate:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(payload, dict):
        raise GraphParseError("certificate must be a JSON object")

    def members(key: str, required: bool = False) -> VertexSet:
        if key not in payload:
            if required:
                raise GraphParseError("missing key", field=key)
            return EMPTY
        value = payload[key]
        if not isinstance(value, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in value):
            raise GraphParseError("expected a list of vertices", field=key)
        return frozenset(value)

    cut, separated, remainder = members("cut", True), members("separated", True), members("remainder", True)
    n = payload.get("n", len(cut) + len(separated) + len(remainder))
    if isinstance(n, bool) or not isinstance(n, int):
        raise GraphParseError("expected an integer", field="n")
    side = payload.get("chosen_side", SIDE_C)
    if side not in (SIDE_C, SIDE_A):
        raise GraphParseError(f"chosen_side must be 'C' or 'A', got {side!r}", field="chosen_side")
    return CutCertificate(
        n=n,
        cut=cut,
        separated=separated,
        remainder=remainder,
        a=members("a"),
        b=members("b"),
        c=members("c"),
        d=members("d"),
        chosen_side=side,
        cut_c=members("cut_c") or cut,
        cut_a=members("cut_a") or cut,
        counting=payload.get("counting", {}) if isinstance(payload.get("counting"), dict) else {},
    )
