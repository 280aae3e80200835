from __future__ import annotations

import json
from pathlib import Path
from typing import Callable

import pytest
from hypothesis import HealthCheck, settings

from coloring import BalancedColoring
from graph_core import Graph, complete_graph, path_graph, star_graph

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def star() -> Graph:
    return star_graph(3)


@pytest.fixture
def star_coloring() -> BalancedColoring:
    return BalancedColoring.of({2, 3}, {0, 1})


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k4_coloring() -> BalancedColoring:
    return BalancedColoring.of({0}, {1}, {2, 3})


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p3_coloring() -> BalancedColoring:
    return BalancedColoring.of({0}, {2}, {1})


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, object], str]:
    def write(name: str, payload: object) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
