from __future__ import annotations

import pytest
from hypothesis import given

from coloring import BalancedColoring, Decomposition, verify_decomposition
from errors import ContractViolation, DomainError
from graph_core import Graph, complete_graph, path_graph
from graph_strategies import colored_graphs
from matching import Matching, max_matching
from oracle import exists_decomposition
from reduction import (
    AuxVertex,
    aux_to_dict,
    build_aux,
    canonical_shape,
    copy_matching,
    matching_from_decomposition,
    matching_to_decomposition,
    normalize_decomposition,
)


def _count_families(g: Graph, c: BalancedColoring) -> int:
    count = len(c.x)
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            if (a in c.p1 and b in c.p2) or (a in c.p1 and b in c.x) or (a in c.x and b in c.p2):
                count += 1
    return count


class TestBuildAux:
    def test_sides_are_ordered(self, k4: Graph, k4_coloring: BalancedColoring) -> None:
        h = build_aux(k4, k4_coloring)
        assert h.side1 == (AuxVertex("p1", 0, 1), AuxVertex("x", 2, 1), AuxVertex("x", 3, 1))
        assert h.side2 == (AuxVertex("p2", 1, 2), AuxVertex("x", 2, 2), AuxVertex("x", 3, 2))
        assert len(h.edges) == 7

    def test_star_has_two_edges(self, star: Graph, star_coloring: BalancedColoring) -> None:
        h = build_aux(star, star_coloring)
        assert h.edges == {(0, 0), (1, 0)}

    def test_path_of_three(self, p3: Graph, p3_coloring: BalancedColoring) -> None:
        h = build_aux(p3, p3_coloring)
        assert h.edges == {(0, 1), (1, 0), (1, 1)}

    def test_invalid_coloring(self, p4: Graph) -> None:
        with pytest.raises(DomainError):
            build_aux(p4, BalancedColoring.of({0, 1}, {2}, {3}))

    def test_debug_dump(self, star: Graph, star_coloring: BalancedColoring) -> None:
        dump = aux_to_dict(build_aux(star, star_coloring))
        assert dump["side1"][0] == {"kind": "p1", "vertex": 2, "side": 1}
        assert dump["edges"] == [[0, 0], [1, 0]]

    def test_tags(self) -> None:
        assert AuxVertex("x", 4, 2).tag == "(4,2)"
        assert AuxVertex("p1", 3, 1).tag == "P1(3)"

    @given(colored_graphs(max_n=7))
    def test_edge_count_and_copy_edges(self, case: tuple[Graph, BalancedColoring]) -> None:
        g, c = case
        h = build_aux(g, c)
        assert len(h.side1) == len(h.side2) == len(c.p1) + len(c.x)
        assert len(h.edges) == _count_families(g, c)
        assert copy_matching(h).pairs <= h.edges


class TestMatchingToDecomposition:
    def test_path_of_three(self, p3: Graph, p3_coloring: BalancedColoring) -> None:
        h = build_aux(p3, p3_coloring)
        m = max_matching(h.graph, copy_matching(h))
        assert matching_to_decomposition(p3, p3_coloring, h, m) == Decomposition.of([{0, 1, 2}])

    def test_copy_edges_stay_singletons(self, k4: Graph, k4_coloring: BalancedColoring) -> None:
        h = build_aux(k4, k4_coloring)
        m = Matching(frozenset({(0, 0), (1, 1), (2, 2)}))
        assert matching_to_decomposition(k4, k4_coloring, h, m) == Decomposition.of([{0, 1}, {2}, {3}])

    def test_non_perfect_matching(self, star: Graph, star_coloring: BalancedColoring) -> None:
        h = build_aux(star, star_coloring)
        with pytest.raises(ContractViolation):
            matching_to_decomposition(star, star_coloring, h, max_matching(h.graph))


class TestNormalization:
    def test_canonical_is_unchanged(self, k4: Graph, k4_coloring: BalancedColoring) -> None:
        d = Decomposition.of([{0, 1}, {2}, {3}])
        assert normalize_decomposition(k4, k4_coloring, d) == d

    def test_all_x_part_splits(self, p3: Graph) -> None:
        c = BalancedColoring.of((), (), {0, 1, 2})
        out = normalize_decomposition(p3, c, Decomposition.of([{0, 1, 2}]))
        assert out == Decomposition.of([{0}, {1}, {2}])

    def test_triangle_with_pendant_x_splits(self) -> None:
        g = Graph(3, frozenset({(0, 1), (1, 2)}))
        c = BalancedColoring.of({1}, {0}, {2})
        out = normalize_decomposition(g, c, Decomposition.of([{0, 1, 2}]))
        assert out == Decomposition.of([{0, 1}, {2}])

    def test_path_with_chord_is_kept(self) -> None:
        g = complete_graph(3)
        c = BalancedColoring.of({0}, {1}, {2})
        d = Decomposition.of([{0, 1, 2}])
        assert canonical_shape(g, c, frozenset({0, 1, 2})) == "path"
        assert normalize_decomposition(g, c, d) == d

    def test_precondition(self, p4: Graph) -> None:
        c = BalancedColoring.of({0}, {3}, {1, 2})
        with pytest.raises(ContractViolation):
            normalize_decomposition(p4, c, Decomposition.of([{0, 1, 2, 3}]))

    def test_shapes(self, p4: Graph) -> None:
        c = BalancedColoring.of({0}, {2}, {1, 3})
        assert canonical_shape(p4, c, frozenset({3})) == "x"
        assert canonical_shape(p4, c, frozenset({0, 1, 2})) == "path"
        assert canonical_shape(p4, c, frozenset({0, 2})) is None
        assert canonical_shape(path_graph(2), BalancedColoring.of({0}, {1}), frozenset({0, 1})) == "pair"

    def test_non_canonical_part_has_no_matching(self, p3: Graph) -> None:
        c = BalancedColoring.of((), (), {0, 1, 2})
        h = build_aux(p3, c)
        with pytest.raises(ContractViolation):
            matching_from_decomposition(h, p3, Decomposition.of([{0, 1}, {2}]))

    @given(colored_graphs(max_n=6))
    def test_matching_equivalence(self, case: tuple[Graph, BalancedColoring]) -> None:
        g, c = case
        h = build_aux(g, c)
        m = max_matching(h.graph, copy_matching(h))
        witness = exists_decomposition(g, c, 3)
        assert m.is_perfect(h.graph) == (witness is not None)
        if witness is None:
            return
        d = matching_to_decomposition(g, c, h, m)
        assert normalize_decomposition(g, c, d) == d
        assert matching_from_decomposition(h, g, d) == m
        normal = normalize_decomposition(g, c, witness)
        assert verify_decomposition(g, c, normal, 3)
        assert matching_from_decomposition(h, g, normal).is_perfect(h.graph)
