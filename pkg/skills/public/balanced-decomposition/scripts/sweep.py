#!/usr/bin/env python3
"""
Theorem sweep: exhaustive and sampled checks of the whole pipeline.

For every connected labeled graph with 3 <= n <= nmax (exhaustive up to
``exhaustive_max_n``) and, for small n, every balanced coloring:

- forward       floor(n/2)-connected graphs always get a decomposition
- certificate   every certificate verifies and |K_C| + |K_A| <= n - 2
- converse      otherwise the adversarial coloring admits no parts <= 3
- equivalence   perfect matching in H <=> oracle finds parts <= 3
- normalization oracle witnesses normalize to canonical parts that map back
                to a perfect matching of H
- enumeration   coloring count equals the closed form, no duplicates

Sampled mode draws random connected graphs and colorings with a reported seed.
"""
from __future__ import annotations

import random
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from certificate import verify_certificate
from coloring import (
    BalancedColoring,
    adversarial_coloring,
    coloring_to_dict,
    count_balanced_colorings,
    enumerate_balanced_colorings,
    verify_decomposition,
)
from errors import DecompositionError
from graph_core import MIN_CUT_ENUMERATION_LIMIT, Graph, is_connected, is_k_connected, serialize_graph
from oracle import exists_decomposition
from reduction import build_aux, canonical_shape, matching_from_decomposition, normalize_decomposition
from solver import decompose_or_certify

try:
    from tqdm import tqdm
    HAS_TQDM = True
except ImportError:
    HAS_TQDM = False

MAX_FAILURE_SAMPLES = 20


@dataclass
class SweepReport:
    nmax: int
    samples: int
    seed: int
    graphs: int = 0
    cases: int = 0
    checks: Counter = field(default_factory=Counter)
    failure_count: int = 0
    failures: list = field(default_factory=list)
    max_runtime: dict = field(default_factory=dict)
    incomplete: bool = False
    reason: str = ""
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def record(self, check: str, seconds: float) -> None:
        self.checks[check] += 1
        if seconds > self.max_runtime.get(check, 0.0):
            self.max_runtime[check] = seconds

    def fail(self, check: str, g: Graph, c: Optional[BalancedColoring], message: str) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURE_SAMPLES:
            self.failures.append({
                "check": check,
                "graph": serialize_graph(g),
                "coloring": coloring_to_dict(c) if c is not None else None,
                "message": message,
            })

    def to_dict(self) -> dict:
        return {
            "nmax": self.nmax,
            "samples": self.samples,
            "seed": self.seed,
            "graphs": self.graphs,
            "cases": self.cases,
            "checks": dict(sorted(self.checks.items())),
            "failure_count": self.failure_count,
            "failures": self.failures,
            "max_runtime_seconds": {k: round(v, 6) for k, v in sorted(self.max_runtime.items())},
            "incomplete": self.incomplete,
            "reason": self.reason,
            "elapsed_seconds": round(self.elapsed, 3),
        }


# ---------------------------------------------------------------------------
# 图生成
# ---------------------------------------------------------------------------

def iter_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, in edge-bitmask order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def iter_connected_graphs(n: int) -> Iterator[Graph]:
    return (g for g in iter_labeled_graphs(n) if is_connected(g))


def random_connected_graph(n: int, rng: random.Random, density: float = 0.3) -> Graph:
    """Random recursive tree on shuffled labels plus each other pair with probability ``density``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < density:
            edges.add((u, v))
    return Graph(n, frozenset(edges))


def random_coloring(n: int, rng: random.Random) -> BalancedColoring:
    k = rng.randint(0, n // 2)
    order = rng.sample(range(n), n)
    return BalancedColoring.of(order[:k], order[k:2 * k], order[2 * k:])


# ---------------------------------------------------------------------------
# 单项检查
# ---------------------------------------------------------------------------

def check_enumeration(report: SweepReport, n: int) -> None:
    g = Graph(n)
    start = time.perf_counter()
    seen = set()
    for c in enumerate_balanced_colorings(g):
        seen.add(c)
    expected = count_balanced_colorings(n)
    report.record("enumeration", time.perf_counter() - start)
    if len(seen) != expected:
        report.fail("enumeration", g, None, f"{len(seen)} distinct colorings, expected {expected}")


def check_converse(
    report: SweepReport,
    g: Graph,
    oracle_max_n: int,
    enumeration_limit: int = MIN_CUT_ENUMERATION_LIMIT,
) -> None:
    start = time.perf_counter()
    try:
        c = adversarial_coloring(g, enumeration_limit)
        witness = exists_decomposition(g, c, 3, oracle_max_n)
    except DecompositionError as exc:
        report.fail("converse", g, None, f"{type(exc).__name__}: {exc}")
        return
    report.record("converse", time.perf_counter() - start)
    if witness is not None:
        parts = [sorted(p) for p in witness.parts]
        report.fail("converse", g, c, f"adversarial coloring decomposes into parts <= 3: {parts}")


def check_coloring(
    report: SweepReport,
    g: Graph,
    c: BalancedColoring,
    half_connected: bool,
    use_oracle: bool,
    oracle_max_n: int,
) -> None:
    report.cases += 1
    start = time.perf_counter()
    try:
        outcome = decompose_or_certify(g, c)
    except DecompositionError as exc:
        report.fail("solver", g, c, f"{type(exc).__name__}: {exc}")
        return
    report.record("solver", time.perf_counter() - start)

    if outcome.decomposition is not None:
        check = verify_decomposition(g, c, outcome.decomposition, 3)
        if not check:
            report.fail("forward", g, c, check.message)
    else:
        cert = outcome.certificate
        report.record("certificate", 0.0)
        check = verify_certificate(g, cert)
        if not check:
            report.fail("certificate", g, c, check.message)
        elif len(cert.cut_c) + len(cert.cut_a) > g.n - 2:
            report.fail("certificate", g, c, f"|K_C| + |K_A| = {len(cert.cut_c) + len(cert.cut_a)} > n - 2")
    if half_connected:
        report.record("forward", 0.0)
        if outcome.decomposition is None:
            report.fail("forward", g, c, "certificate produced for a floor(n/2)-connected graph")

    if not use_oracle:
        return
    start = time.perf_counter()
    witness = exists_decomposition(g, c, 3, oracle_max_n)
    report.record("equivalence", time.perf_counter() - start)
    if (witness is not None) != outcome.decomposed:
        report.fail("equivalence", g, c, f"matching says {outcome.decomposed}, oracle says {witness is not None}")
        return
    if witness is None:
        return

    start = time.perf_counter()
    try:
        normal = normalize_decomposition(g, c, witness)
        if any(canonical_shape(g, c, p) is None for p in normal.parts):
            raise DecompositionError("non-canonical part after normalization")
        h = build_aux(g, c)
        matching_from_decomposition(h, g, normal)
        if normalize_decomposition(g, c, outcome.decomposition) != outcome.decomposition:
            raise DecompositionError("matching decomposition is not a normalization fixed point")
    except DecompositionError as exc:
        report.fail("normalization", g, c, f"{type(exc).__name__}: {exc}")
        return
    report.record("normalization", time.perf_counter() - start)


# ---------------------------------------------------------------------------
# 主流程
# ---------------------------------------------------------------------------

def run_sweep(
    nmax: int,
    samples: int = 0,
    seed: int = 7,
    exhaustive_max_n: int = 6,
    colorings_max_n: int = 5,
    oracle_equivalence_max_n: int = 5,
    oracle_max_n: int = 10,
    min_cut_enumeration_limit: int = MIN_CUT_ENUMERATION_LIMIT,
    max_seconds: float = 0.0,
    verbose: bool = False,
) -> SweepReport:
    report = SweepReport(nmax=nmax, samples=samples, seed=seed)
    began = time.perf_counter()
    deadline = began + max_seconds if max_seconds > 0 else None

    def out_of_time() -> bool:
        if deadline is not None and time.perf_counter() > deadline:
            report.incomplete = True
            report.reason = f"time budget of {max_seconds}s exceeded"
            return True
        return False

    for n in range(1, min(nmax, colorings_max_n) + 1):
        check_enumeration(report, n)

    for n in range(3, min(nmax, exhaustive_max_n) + 1):
        if verbose:
            print(f"sweep: exhaustive n = {n}", file=sys.stderr)
        graphs: Iterator[Graph] = iter_labeled_graphs(n)
        if verbose and HAS_TQDM:
            graphs = tqdm(graphs, total=1 << (n * (n - 1) // 2), desc=f"n={n}", file=sys.stderr)
        for g in graphs:
            if not is_connected(g):
                continue
            report.graphs += 1
            half_connected = is_k_connected(g, n // 2)
            if not half_connected:
                check_converse(report, g, oracle_max_n, min_cut_enumeration_limit)
            if n <= colorings_max_n:
                for c in enumerate_balanced_colorings(g):
                    check_coloring(report, g, c, half_connected, n <= oracle_equivalence_max_n, oracle_max_n)
            if out_of_time():
                break
        if report.incomplete:
            break

    if samples > 0 and nmax >= 3 and not report.incomplete:
        low = colorings_max_n + 1 if nmax > colorings_max_n else 3
        rng = random.Random(seed)
        if verbose:
            print(f"sweep: {samples} samples with n in [{low}, {nmax}], seed {seed}", file=sys.stderr)
        draws = range(samples)
        if verbose and HAS_TQDM:
            draws = tqdm(draws, desc="samples", file=sys.stderr)
        for _ in draws:
            n = rng.randint(low, nmax)
            g = random_connected_graph(n, rng, density=rng.random())
            c = random_coloring(n, rng)
            report.graphs += 1
            half_connected = is_k_connected(g, n // 2)
            if not half_connected and n <= oracle_max_n:
                check_converse(report, g, oracle_max_n, min_cut_enumeration_limit)
            check_coloring(report, g, c, half_connected, n <= oracle_equivalence_max_n, oracle_max_n)
            if out_of_time():
                break

    if samples == 0 and nmax > exhaustive_max_n and not report.incomplete:
        report.incomplete = True
        report.reason = (
            f"n in ({exhaustive_max_n}, {nmax}] not covered: exhaustive mode stops at n = {exhaustive_max_n}"
            " and sampling needs samples > 0"
        )

    report.elapsed = time.perf_counter() - began
    return report
