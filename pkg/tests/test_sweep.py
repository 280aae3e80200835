from __future__ import annotations

import random

import pytest

import sweep
from coloring import BalancedColoring, adversarial_coloring, validate_coloring
from graph_core import Graph, is_connected
from sweep import iter_connected_graphs, iter_labeled_graphs, random_connected_graph, random_coloring, run_sweep


class TestGraphGeneration:
    @pytest.mark.parametrize(("n", "labeled", "connected"), [(1, 1, 1), (2, 2, 1), (3, 8, 4), (4, 64, 38)])
    def test_counts(self, n: int, labeled: int, connected: int) -> None:
        assert sum(1 for _ in iter_labeled_graphs(n)) == labeled
        assert sum(1 for _ in iter_connected_graphs(n)) == connected

    def test_random_graphs_are_connected_and_seeded(self) -> None:
        first = [random_connected_graph(7, random.Random(3), 0.2) for _ in range(5)]
        again = [random_connected_graph(7, random.Random(3), 0.2) for _ in range(5)]
        assert first == again
        assert all(is_connected(g) and g.n == 7 for g in first)

    def test_random_coloring_is_valid(self) -> None:
        rng = random.Random(11)
        g = random_connected_graph(8, rng)
        for _ in range(20):
            assert validate_coloring(g, random_coloring(8, rng))


class TestRunSweep:
    def test_small_exhaustive_sweep(self) -> None:
        report = run_sweep(nmax=4)
        assert report.ok, report.failures
        assert report.graphs == 4 + 38
        assert report.checks["enumeration"] == 4
        assert report.checks["converse"] > 0
        assert report.checks["equivalence"] == report.cases
        assert not report.incomplete

    def test_sampled_mode_reports_seed(self) -> None:
        report = run_sweep(nmax=7, samples=30, seed=5, exhaustive_max_n=3, colorings_max_n=3)
        assert report.ok, report.failures
        assert report.seed == 5
        assert report.graphs == 4 + 30
        payload = report.to_dict()
        assert payload["seed"] == 5
        assert payload["failure_count"] == 0

    def test_time_budget_marks_incomplete(self) -> None:
        report = run_sweep(nmax=5, max_seconds=1e-9)
        assert report.incomplete
        assert "time budget" in report.reason

    @pytest.mark.slow
    def test_all_graphs_on_five_vertices(self) -> None:
        report = run_sweep(nmax=5)
        assert report.ok, report.failures
        assert report.graphs == 4 + 38 + 728

    def test_vacuous_sweep_is_empty(self) -> None:
        report = run_sweep(nmax=0)
        assert report.ok
        assert report.graphs == 0
        assert report.cases == 0
        assert not report.checks
        assert not report.incomplete

    def test_uncovered_sizes_mark_incomplete(self) -> None:
        report = run_sweep(nmax=8, samples=0, exhaustive_max_n=3, colorings_max_n=3)
        assert report.ok
        assert report.incomplete
        assert "(3, 8]" in report.reason
        assert report.to_dict()["incomplete"] is True

    def test_sampling_covers_sizes_past_exhaustive_range(self) -> None:
        report = run_sweep(nmax=6, samples=5, seed=1, exhaustive_max_n=3, colorings_max_n=3)
        assert not report.incomplete

    def test_converse_uses_configured_cut_limit(self, monkeypatch: pytest.MonkeyPatch) -> None:
        limits: list[int] = []

        def recording(g: Graph, enumeration_limit: int) -> BalancedColoring:
            limits.append(enumeration_limit)
            return adversarial_coloring(g, enumeration_limit)

        monkeypatch.setattr(sweep, "adversarial_coloring", recording)
        report = run_sweep(nmax=4, colorings_max_n=3, min_cut_enumeration_limit=123)
        assert report.ok, report.failures
        assert limits and set(limits) == {123}

    @pytest.mark.slow
    def test_converse_on_every_graph_up_to_six_vertices(self) -> None:
        report = run_sweep(nmax=6)
        assert report.ok, report.failures
        assert report.graphs == 4 + 38 + 728 + 26704
        assert report.checks["converse"] > 0
        assert not report.incomplete

    @pytest.mark.slow
    def test_ten_thousand_samples_on_six_to_eight_vertices(self) -> None:
        report = run_sweep(nmax=8, samples=10_000, seed=3, exhaustive_max_n=5)
        assert report.ok, report.failures
        assert report.graphs == 4 + 38 + 728 + 10_000
        assert report.checks["certificate"] > 0
        assert not report.incomplete
