#!/usr/bin/env python3
"""
Balanced decomposition CLI entry point.

Usage:
    python run.py <command> [options]

Examples:
    python run.py decompose --graph k4.json --coloring c.json
    python run.py certify --graph star.json --coloring c.json --json
    python run.py adversary --graph p4.json --verify
    python run.py bdn --graph c4.json
    python run.py check --graph c5.json --k 2
    python run.py sweep --nmax 5 --samples 10000 --seed 3
    python run.py verify --graph g.json --coloring c.json --certificate cert.json

Exit codes: 0 decomposition found / property verified, 1 certificate produced /
counterexample found, 2 input error or incomplete sweep, 3 internal consistency
failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable, Optional

# Make sibling modules importable when run as a script
SCRIPT_DIR = Path(__file__).parent
sys.path.insert(0, str(SCRIPT_DIR))

from certificate import certificate_to_dict, parse_certificate, verify_certificate
from coloring import (
    BalancedColoring,
    Decomposition,
    adversarial_coloring,
    coloring_to_dict,
    describe_coloring,
    parse_coloring,
    parse_decomposition,
    verify_decomposition,
)
from config import Settings, load_settings
from errors import (
    ConsistencyError,
    ContractViolation,
    DecompositionError,
    DomainError,
    GraphParseError,
    InputError,
    NotApplicableError,
    ResourceLimitError,
)
from graph_core import (
    Graph,
    complete_graph,
    min_vertex_cut,
    node_connectivity,
    parse_graph,
    path_graph,
    star_graph,
    is_k_connected,
)
from oracle import bdn_exact, exists_decomposition
from reduction import aux_to_dict, build_aux
from solver import decompose_or_certify, explain
from sweep import run_sweep

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _log(verbose: bool, message: str) -> None:
    if verbose:
        print(message, file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _load_coloring(path: str, g: Graph) -> BalancedColoring:
    return parse_coloring(_read(path), g.n)


def _fmt_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def _print_table(rows: list[tuple[str, object]]) -> None:
    width = max((len(k) for k, _ in rows), default=0)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}")


def _emit(args: argparse.Namespace, payload: dict, rows: list[tuple[str, object]]) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        _print_table(rows)


def _decomposition_rows(d: Decomposition) -> list[tuple[str, object]]:
    return [
        ("parts", " ".join(_fmt_set(p) for p in d.parts)),
        ("max part size", d.max_part_size),
    ]


# ---------------------------------------------------------------------------
# 子命令
# ---------------------------------------------------------------------------

def cmd_decompose(args: argparse.Namespace, settings: Settings) -> int:
    g = _load_graph(args.graph)
    c = _load_coloring(args.coloring, g)
    _log(args.verbose, f"graph n={g.n} m={len(g.edges)}; coloring {describe_coloring(c)}")
    outcome = decompose_or_certify(g, c)
    rows: list[tuple[str, object]] = [
        ("outcome", "decomposition" if outcome.decomposed else "certificate"),
        ("matching", f"{outcome.matching_size}/{outcome.side_size}"),
    ]
    if outcome.decomposition is not None:
        rows += _decomposition_rows(outcome.decomposition)
    else:
        cert = outcome.certificate
        rows += [
            ("cut", _fmt_set(cert.cut)),
            ("separated", _fmt_set(cert.separated)),
            ("remainder", _fmt_set(cert.remainder)),
            ("bound", f"|cut| = {len(cert.cut)} <= floor(n/2) - 1 = {cert.floor_half_minus_one}"),
        ]
    _emit(args, outcome.to_dict(), rows)
    return EXIT_OK if outcome.decomposed else EXIT_NEGATIVE


def cmd_certify(args: argparse.Namespace, settings: Settings) -> int:
    g = _load_graph(args.graph)
    c = _load_coloring(args.coloring, g)
    report = explain(g, c)
    rows: list[tuple[str, object]] = [
        ("matching", f"{report['matching_size']}/{report['side_size']}"),
        ("aux edges", report["aux_edges"]),
    ]
    if report["perfect"]:
        rows.append(("note", report["note"]))
    else:
        v, cert = report["violator"], report["certificate"]
        rows += [
            ("violator A", _fmt_set(v["a"])),
            ("violator B", _fmt_set(v["b"])),
            ("N_H(A ∪ B)", f"P2 {_fmt_set(v['nh_p2'])}  X2 {_fmt_set(v['nh_x2'])}"),
            ("deficiency", v["deficiency"]),
            ("C / D", f"{_fmt_set(cert['c'])} / {_fmt_set(cert['d'])}"),
            ("K_C", _fmt_set(cert["cut_c"])),
            ("K_A", _fmt_set(cert["cut_a"])),
            ("chosen", cert["chosen_side"]),
            ("cut", _fmt_set(cert["cut"])),
            ("|K_C| + |K_A|", f"{cert['counting']['sum']} <= {cert['counting']['sum_bound']}"),
        ]
    _emit(args, report, rows)
    return EXIT_OK if report["perfect"] else EXIT_NEGATIVE


def cmd_adversary(args: argparse.Namespace, settings: Settings) -> int:
    g = _load_graph(args.graph)
    c = adversarial_coloring(g, settings.min_cut_enumeration_limit)
    payload = coloring_to_dict(c)
    rows: list[tuple[str, object]] = [("p1", _fmt_set(c.p1)), ("p2", _fmt_set(c.p2)), ("x", _fmt_set(c.x))]
    code = EXIT_OK
    if args.verify:
        witness = exists_decomposition(g, c, 3, settings.oracle_max_n)
        payload = {"coloring": payload, "decomposition_with_parts_le_3": witness is not None}
        if witness is None:
            rows.append(("verified", "no balanced decomposition with parts <= 3"))
        else:
            rows.append(("COUNTEREXAMPLE", " ".join(_fmt_set(p) for p in witness.parts)))
            code = EXIT_NEGATIVE
    _emit(args, payload, rows)
    return code


def cmd_bdn(args: argparse.Namespace, settings: Settings) -> int:
    g = _load_graph(args.graph)
    max_n = args.max_n if args.max_n is not None else settings.bdn_max_n
    _log(args.verbose, f"bdn: n={g.n}, bound {max_n}")
    result = bdn_exact(g, max_n)
    rows: list[tuple[str, object]] = [
        ("bdn", "infinity" if result.is_infinite else result.value),
        ("colorings", result.colorings),
    ]
    if result.witness is not None:
        rows.append(("witness", describe_coloring(result.witness)))
    _emit(args, result.to_dict(), rows)
    return EXIT_OK


def cmd_check(args: argparse.Namespace, settings: Settings) -> int:
    g = _load_graph(args.graph)
    if args.k < 0:
        raise InputError(f"--k must be non-negative, got {args.k}")
    connected = is_k_connected(g, args.k)
    cut = min_vertex_cut(g, settings.min_cut_enumeration_limit)
    payload = {
        "k": args.k,
        "k_connected": connected,
        "connectivity": node_connectivity(g),
        "min_vertex_cut": sorted(cut) if cut is not None else None,
    }
    rows: list[tuple[str, object]] = [
        (f"{args.k}-connected", connected),
        ("connectivity", payload["connectivity"]),
        ("min vertex cut", _fmt_set(cut) if cut is not None else "none"),
    ]
    _emit(args, payload, rows)
    return EXIT_OK if connected else EXIT_NEGATIVE


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    nmax = args.nmax if args.nmax is not None else settings.sweep_nmax
    samples = args.samples if args.samples is not None else settings.sweep_samples
    seed = args.seed if args.seed is not None else settings.sweep_seed
    max_seconds = args.max_seconds if args.max_seconds is not None else settings.sweep_max_seconds
    report = run_sweep(
        nmax=nmax,
        samples=samples,
        seed=seed,
        exhaustive_max_n=settings.sweep_exhaustive_max_n,
        colorings_max_n=settings.sweep_colorings_max_n,
        oracle_equivalence_max_n=settings.sweep_oracle_equivalence_max_n,
        oracle_max_n=settings.oracle_max_n,
        min_cut_enumeration_limit=settings.min_cut_enumeration_limit,
        max_seconds=max_seconds,
        verbose=args.verbose,
    )
    rows: list[tuple[str, object]] = [
        ("nmax / samples / seed", f"{report.nmax} / {report.samples} / {report.seed}"),
        ("graphs", report.graphs),
        ("coloring cases", report.cases),
    ]
    rows += [(f"check {name}", f"{count} (max {report.max_runtime.get(name, 0.0):.4f}s)") for name, count in sorted(report.checks.items())]
    rows.append(("failures", report.failure_count))
    for failure in report.failures:
        rows.append((f"  {failure['check']}", failure["message"]))
    if report.incomplete:
        rows.append(("INCOMPLETE", report.reason))
    rows.append(("elapsed", f"{report.elapsed:.2f}s"))
    _emit(args, report.to_dict(), rows)
    if not report.ok:
        return EXIT_NEGATIVE
    return EXIT_INPUT if report.incomplete else EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    g = _load_graph(args.graph)
    if args.certificate:
        check = verify_certificate(g, parse_certificate(_read(args.certificate)))
    else:
        c = _load_coloring(args.coloring, g)
        check = verify_decomposition(g, c, parse_decomposition(_read(args.decomposition)), args.s)
    _emit(args, {"ok": check.ok, "message": check.message}, [("ok", check.ok), ("message", check.message)])
    return EXIT_OK if check else EXIT_NEGATIVE


def cmd_aux(args: argparse.Namespace, settings: Settings) -> int:
    g = _load_graph(args.graph)
    h = build_aux(g, _load_coloring(args.coloring, g))
    print(json.dumps(aux_to_dict(h), ensure_ascii=False, indent=2))
    return EXIT_OK


COMMANDS = {
    "decompose": cmd_decompose,
    "certify": cmd_certify,
    "adversary": cmd_adversary,
    "bdn": cmd_bdn,
    "check": cmd_check,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "aux": cmd_aux,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Balanced decompositions with parts of at most 3 vertices: decide, certify, verify.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  %(prog)s decompose --graph k4.json --coloring c.json
  %(prog)s adversary --graph star.json --verify
  %(prog)s sweep --nmax 5
        """,
    )
    parser.add_argument("--config", help="config.yaml path (default: skill config.yaml or $BD_CONFIG)", default=None)
    parser.add_argument("--verbose", "-v", help="progress on stderr", action="store_true")
    parser.add_argument("--test", help="run the built-in smoke test", action="store_true")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", help="JSON output", action="store_true")
    common.add_argument("--verbose", "-v", help="progress on stderr", action="store_true", default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command")

    for name, helptext in (("decompose", "decomposition or cut certificate"), ("certify", "matching/violator diagnostics")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--graph", required=True, help="graph file (JSON or 'n m' text, '-' for stdin)")
        p.add_argument("--coloring", required=True, help="coloring JSON file")

    p = sub.add_parser("adversary", parents=[common], help="adversarial coloring of a poorly connected graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--verify", action="store_true", help="confirm with the oracle that parts <= 3 are impossible")

    p = sub.add_parser("bdn", parents=[common], help="exact balanced decomposition number (exhaustive)")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-n", type=int, default=None, help="size bound (default from config)")

    p = sub.add_parser("check", parents=[common], help="k-connectivity and minimum vertex cut")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("sweep", parents=[common], help="exhaustive/sampled theorem sweep")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help="sampling seed (env BD_SEED)")
    p.add_argument("--max-seconds", type=float, default=None, help="time budget, 0 = unlimited")

    p = sub.add_parser("verify", parents=[common], help="verify a decomposition or certificate file")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", help="coloring JSON (needed for --decomposition)")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--decomposition")
    target.add_argument("--certificate")
    p.add_argument("--s", type=int, default=3, help="part size bound for --decomposition")

    p = sub.add_parser("aux", help="dump the auxiliary bipartite graph H as JSON")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.test:
        return _run_smoke_test()
    if not args.command:
        parser.print_help()
        return EXIT_INPUT
    if args.command == "verify" and args.decomposition and not args.coloring:
        parser.error("verify --decomposition needs --coloring")

    try:
        settings = load_settings(args.config)
        _log(args.verbose, f"config: {settings.source or 'built-in defaults'}")
        return COMMANDS[args.command](args, settings)
    except (ContractViolation, ConsistencyError) as exc:
        print(f"ERROR (internal): {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (GraphParseError, DomainError, InputError, NotApplicableError, ResourceLimitError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DecompositionError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"ERROR: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _run_smoke_test() -> int:
    """Built-in smoke test (no pytest needed)."""
    print("=== balanced-decomposition smoke test ===\n")
    errors = []

    def step(title: str, fn) -> None:
        print(f"{title}...")
        try:
            fn()
            print("  ✓ pass")
        except Exception as exc:  # noqa: BLE001 - report every failure
            errors.append(f"{title}: {exc}")
            print(f"  ✗ fail: {exc}")

    def k4_decomposes() -> None:
        outcome = decompose_or_certify(complete_graph(4), BalancedColoring.of({0}, {1}, {2, 3}))
        assert outcome.decomposition == Decomposition.of([{0, 1}, {2}, {3}]), outcome

    def star_certifies() -> None:
        outcome = decompose_or_certify(star_graph(3), BalancedColoring.of({2, 3}, {0, 1}))
        assert outcome.certificate is not None and outcome.certificate.cut == frozenset({0}), outcome
        assert certificate_to_dict(outcome.certificate)["floor_half_minus_one"] == 1

    def p4_adversary() -> None:
        c = adversarial_coloring(path_graph(4))
        assert c == BalancedColoring.of({2, 3}, {0, 1}), c
        assert exists_decomposition(path_graph(4), c, 3) is None

    def p3_bdn() -> None:
        assert bdn_exact(path_graph(3)).value == 3

    step("test 1: K4 decomposes", k4_decomposes)
    step("test 2: star K1,3 yields cut {0}", star_certifies)
    step("test 3: P4 adversarial coloring", p4_adversary)
    step("test 4: bdn(P3) = 3", p3_bdn)

    print()
    if errors:
        print(f"smoke test finished, {len(errors)} failed:")
        for err in errors:
            print(f"  - {err}")
        return EXIT_NEGATIVE
    print("✓ all smoke tests passed")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
