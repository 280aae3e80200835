#!/usr/bin/env python3
"""
Decide "parts of size <= 3" for one balanced coloring, constructively.

A perfect matching of H yields the decomposition; otherwise the Hall violator
of a maximum matching yields a small vertex cut. Every result is re-verified
before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from certificate import CutCertificate, certificate_to_dict, violator_to_certificate
from coloring import BalancedColoring, Decomposition, decomposition_to_dict, validate_coloring
from errors import InputError
from graph_core import Graph, is_connected
from matching import hall_violator, max_matching
from reduction import build_aux, copy_matching, matching_to_decomposition


@dataclass(frozen=True)
class Outcome:
    decomposition: Optional[Decomposition]
    certificate: Optional[CutCertificate]
    matching_size: int
    side_size: int

    @property
    def decomposed(self) -> bool:
        return self.decomposition is not None

    def to_dict(self) -> dict:
        payload: dict = {
            "outcome": "decomposition" if self.decomposed else "certificate",
            "matching_size": self.matching_size,
            "side_size": self.side_size,
        }
        if self.decomposition is not None:
            payload["decomposition"] = decomposition_to_dict(self.decomposition)
        if self.certificate is not None:
            payload["certificate"] = certificate_to_dict(self.certificate)
        return payload


def check_inputs(g: Graph, c: BalancedColoring) -> None:
    if g.n < 3:
        raise InputError(f"graph needs at least 3 vertices, got {g.n}")
    if not is_connected(g):
        raise InputError("graph is disconnected")
    check = validate_coloring(g, c)
    if not check:
        raise InputError(f"invalid coloring: {check.message}")


def decompose_or_certify(g: Graph, c: BalancedColoring) -> Outcome:
    check_inputs(g, c)
    h = build_aux(g, c)
    m = max_matching(h.graph, copy_matching(h))

    # both constructors verify what they return and raise ConsistencyError otherwise
    if m.is_perfect(h.graph):
        return Outcome(matching_to_decomposition(g, c, h, m), None, m.size, h.graph.left)

    cert = violator_to_certificate(g, c, hall_violator(h, m))
    return Outcome(None, cert, m.size, h.graph.left)


def explain(g: Graph, c: BalancedColoring) -> dict:
    """Matching-side diagnostics for ``certify``: violator sets and both candidate cuts."""
    check_inputs(g, c)
    h = build_aux(g, c)
    m = max_matching(h.graph, copy_matching(h))
    report: dict = {
        "side_size": h.graph.left,
        "aux_edges": len(h.edges),
        "matching_size": m.size,
        "perfect": m.is_perfect(h.graph),
    }
    if report["perfect"]:
        report["decomposition"] = decomposition_to_dict(matching_to_decomposition(g, c, h, m))
        report["note"] = "H has a perfect matching; no cut certificate exists for this coloring"
        return report

    v = hall_violator(h, m)
    report["violator"] = {
        "a": sorted(v.a),
        "b": sorted(v.b),
        "nh_p2": sorted(v.nh_p2),
        "nh_x2": sorted(v.nh_x2),
        "unmatched": v.unmatched,
        "deficiency": v.deficiency,
    }
    report["certificate"] = certificate_to_dict(violator_to_certificate(g, c, v))
    return report
