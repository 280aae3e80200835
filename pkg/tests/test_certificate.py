from __future__ import annotations

import json
from dataclasses import replace

import pytest
from hypothesis import given

from certificate import (
    SIDE_C,
    CutCertificate,
    certificate_to_dict,
    parse_certificate,
    verify_certificate,
    violator_to_certificate,
)
from coloring import BalancedColoring
from errors import DomainError, GraphParseError
from graph_core import Graph, path_graph
from graph_strategies import colored_graphs
from matching import HallViolator, hall_violator, max_matching
from reduction import build_aux, copy_matching


def _certificate(g: Graph, c: BalancedColoring) -> CutCertificate:
    h = build_aux(g, c)
    return violator_to_certificate(g, c, hall_violator(h, max_matching(h.graph, copy_matching(h))))


class TestViolatorToCertificate:
    def test_star(self, star: Graph, star_coloring: BalancedColoring) -> None:
        cert = _certificate(star, star_coloring)
        assert cert.cut == {0}
        assert cert.separated == {1}
        assert cert.remainder == {2, 3}
        assert cert.chosen_side == SIDE_C
        assert (cert.c, cert.d) == ({1}, set())
        assert cert.floor_half_minus_one == 1
        assert cert.counting == {"k_c": 1, "k_a": 1, "sum": 2, "sum_bound": 2, "slack": 0, "slack_bound": 0}

    def test_path(self, p4: Graph) -> None:
        cert = _certificate(p4, BalancedColoring.of({2, 3}, {0, 1}))
        assert cert.cut == {2}
        assert cert.separated == {0, 1}
        assert cert.remainder == {3}
        assert verify_certificate(p4, cert)

    def test_rejects_inconsistent_neighborhood(self, star: Graph, star_coloring: BalancedColoring) -> None:
        bogus = HallViolator(a=frozenset({2, 3}), b=frozenset(), nh_p2=frozenset({1}), nh_x2=frozenset())
        with pytest.raises(DomainError, match="neighborhood"):
            violator_to_certificate(star, star_coloring, bogus)

    def test_rejects_non_violator(self, star: Graph, star_coloring: BalancedColoring) -> None:
        bogus = HallViolator(a=frozenset({2}), b=frozenset(), nh_p2=frozenset({0}), nh_x2=frozenset())
        with pytest.raises(DomainError, match="not a violator"):
            violator_to_certificate(star, star_coloring, bogus)

    def test_rejects_sets_outside_classes(self, star: Graph, star_coloring: BalancedColoring) -> None:
        bogus = HallViolator(a=frozenset({0}), b=frozenset(), nh_p2=frozenset(), nh_x2=frozenset())
        with pytest.raises(DomainError):
            violator_to_certificate(star, star_coloring, bogus)

    @given(colored_graphs(max_n=7))
    def test_counting_bounds(self, case: tuple[Graph, BalancedColoring]) -> None:
        g, c = case
        h = build_aux(g, c)
        m = max_matching(h.graph, copy_matching(h))
        if m.is_perfect(h.graph):
            return
        cert = violator_to_certificate(g, c, hall_violator(h, m))
        assert verify_certificate(g, cert)
        assert len(cert.cut_c) + len(cert.cut_a) <= g.n - 2
        assert len(cert.cut) == min(len(cert.cut_c), len(cert.cut_a))
        assert len(cert.cut) <= g.n // 2 - 1


class TestVerifyCertificate:
    def test_star_cut(self, star: Graph) -> None:
        cert = CutCertificate(n=4, cut=frozenset({0}), separated=frozenset({1}), remainder=frozenset({2, 3}))
        check = verify_certificate(star, cert)
        assert check
        assert "not 2-connected" in check.message

    def test_wrong_n(self, star: Graph) -> None:
        cert = CutCertificate(n=5, cut=frozenset({0}), separated=frozenset({1}), remainder=frozenset({2, 3}))
        assert "n = 5" in verify_certificate(star, cert).message

    def test_leaking_sides(self) -> None:
        g = path_graph(4)
        cert = CutCertificate(n=4, cut=frozenset({0}), separated=frozenset({1}), remainder=frozenset({2, 3}))
        check = verify_certificate(g, cert)
        assert not check
        assert "[2]" in check.message

    def test_cut_too_large(self) -> None:
        g = path_graph(4)
        cert = CutCertificate(n=4, cut=frozenset({1, 2}), separated=frozenset({0}), remainder=frozenset({3}))
        check = verify_certificate(g, cert)
        assert not check
        assert "exceeds" in check.message

    def test_sides_must_cover(self, star: Graph) -> None:
        cert = CutCertificate(n=4, cut=frozenset({0}), separated=frozenset({1}), remainder=frozenset({2}))
        assert "cover" in verify_certificate(star, cert).message

    def test_empty_side(self, star: Graph) -> None:
        cert = CutCertificate(n=4, cut=frozenset({0}), separated=frozenset(), remainder=frozenset({1, 2, 3}))
        assert "nonempty" in verify_certificate(star, cert).message


class TestCertificateJson:
    def test_dump_and_read_back(self, star: Graph, star_coloring: BalancedColoring) -> None:
        cert = _certificate(star, star_coloring)
        payload = certificate_to_dict(cert)
        assert payload["cut"] == [0]
        assert payload["separated"] == [1]
        assert payload["remainder"] == [2, 3]
        assert payload["floor_half_minus_one"] == 1
        assert parse_certificate(json.dumps(payload)) == cert

    def test_minimal_certificate(self, star: Graph) -> None:
        cert = parse_certificate('{"cut": [0], "separated": [1], "remainder": [2, 3]}')
        assert cert.n == 4
        assert verify_certificate(star, cert)

    def test_missing_key(self) -> None:
        with pytest.raises(GraphParseError) as info:
            parse_certificate('{"cut": [0], "separated": [1]}')
        assert info.value.field == "remainder"

    def test_bad_side(self) -> None:
        with pytest.raises(GraphParseError):
            parse_certificate('{"cut": [0], "separated": [1], "remainder": [2], "chosen_side": "B"}')

    def test_tampered_cut_fails(self, star: Graph, star_coloring: BalancedColoring) -> None:
        cert = replace(_certificate(star, star_coloring), cut=frozenset({1}), separated=frozenset({0}))
        assert not verify_certificate(star, cert)
