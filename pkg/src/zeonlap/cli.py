"""Command-line front end.

Exit codes: 0 success, 2 bad input (including graphs too large for the
requested command), 3 unmet precondition such as a vertex without a unique
label, 4 a theorem identity failed (always a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .core import random_element
from .corpus import random_graphs
from .errors import (
    DegenerateSpectrum,
    DuplicateLabels,
    GraphFormatError,
    NotSimpleRoot,
    NotUniqueLabel,
    TheoremViolation,
    TooLarge,
    ZeonError,
)
from .graph import Graph, Labeling, parse_labeling, read_graph
from .oracle import oracle_all_cycles
from .pauli import MAX_REP_GENERATORS, represent
from .spectra import (
    cycle_census_from_exp,
    q_expectation,
    symmetric_eigenpair,
    vertex_eigenvalue,
    vertex_eigenvector,
    walk_census_from_powers,
)
from .verify import corrupted_psi, verify_graph

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_THEOREM = 4
DEFAULT_SEED = 0


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _analyze_vertex(G: Graph, labeling: Labeling, v: int, max_length: int | None) -> dict:
    lam, census = vertex_eigenvalue(G, labeling, v)
    mu, vec_censuses = vertex_eigenvector(G, labeling, v)
    lam_star, xi = symmetric_eigenpair(G, labeling, v)
    out = {
        "vertex": v,
        "label": str(labeling[v]),
        "eigenvalue": lam.to_json(),
        "eigenvalue_text": str(lam),
        "eigenvector": mu.to_json(),
        "eigenvector_text": [str(e) for e in mu],
        "cycle_census": census.to_json(),
        "paths_pwics_censuses": [c.to_json() for c in vec_censuses],
        "symmetric_eigenvalue": lam_star.to_json(),
        "symmetric_eigenvalue_text": str(lam_star),
    }
    if labeling.kind == "q":
        e = q_expectation(G, labeling, v)
        out["q_expectation"] = e.to_json()
        out["q_expectation_text"] = str(e)
    if max_length:
        out["cycles_by_length"] = {
            str(k): walk_census_from_powers(G, k, v, v).to_json() for k in range(2, min(max_length, G.m) + 1)
        }
    return out


def _map(fn, args_list, jobs: int):
    """Apply ``fn`` to each argument tuple, keeping input order."""
    if jobs <= 1 or len(args_list) <= 1:
        return [fn(*a) for a in args_list]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *a) for a in args_list]
        return [f.result() for f in futures]


def cmd_analyze(args) -> tuple[int, dict]:
    G = _load_graph(args.graph)
    if args.vertex is not None:
        _check_vertex(G, args.vertex)
    labeling = _labeling(args.labeling, G, args.vertex)
    if args.vertex is not None:
        if not labeling.is_unique(args.vertex):
            raise NotUniqueLabel(
                f"vertex {args.vertex} has label {labeling[args.vertex]}, shared with another vertex; "
                "pass an f- or q-labeling"
            )
        vertices = [args.vertex]
    else:
        vertices = [v for v in range(1, G.m + 1) if labeling.is_unique(v)]
        if not vertices and G.m:
            raise NotUniqueLabel("no vertex has a unique label; pass an f- or q-labeling")
    results = _map(_analyze_vertex, [(G, labeling, v, args.max_length) for v in vertices], args.jobs)
    skipped = [v for v in range(1, G.m + 1) if v not in vertices and args.vertex is None]
    report = {
        "command": "analyze",
        "seed": args.seed,
        "graph": {"m": G.m, "edges": [list(e) for e in sorted(G.edges)]},
        "labeling": labeling.spec(),
        "vertices": results,
    }
    if skipped:
        report["skipped_vertices"] = skipped
    return EXIT_OK, report


def _text_analyze(report: dict) -> str:
    lines = [f"seed: {report['seed']}", f"labeling: {report['labeling']}"]
    for r in report["vertices"]:
        lines.append(f"vertex {r['vertex']} (label {r['label']})")
        lines.append(f"  eigenvalue: {r['eigenvalue_text']}")
        lines.append("  eigenvector: (" + ", ".join(r["eigenvector_text"]) + ")")
        lines.append(f"  symmetric eigenvalue: {r['symmetric_eigenvalue_text']}")
        if "q_expectation_text" in r:
            lines.append(f"  q-expectation: {r['q_expectation_text']}")
        lines.append("  cycles: " + _census_text(r["cycle_census"]))
        for c in r["paths_pwics_censuses"]:
            a, b = c["endpoints"]
            lines.append(f"  paths+pwics {a}->{b}: " + _census_text(c))
    if report.get("skipped_vertices"):
        lines.append("skipped (label not unique): " + ", ".join(map(str, report["skipped_vertices"])))
    return "\n".join(lines)


def _census_text(c: dict) -> str:
    if not c["table"]:
        return "none"
    return ", ".join("{" + ",".join(map(str, e["vertices"])) + "}:" + str(e["count"]) for e in c["table"])


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> tuple[int, dict]:
    G = _load_graph(args.graph)
    labeling = _labeling(args.labeling or "f", G, None)
    q = labeling if labeling.kind == "q" else None
    psi = corrupted_psi(G) if args.corrupt_psi else None
    results = verify_graph(G, labeling, q, psi=psi, seed=args.seed)
    failed = [r for r in results if not r.passed]
    report = {
        "command": "verify",
        "seed": args.seed,
        "graph": {"m": G.m, "edges": [list(e) for e in sorted(G.edges)]},
        "labeling": labeling.spec(),
        "checks": [r.to_json() for r in results],
        "passed": not failed,
    }
    if failed:
        report["first_failure"] = failed[0].identity
        return EXIT_THEOREM, report
    return EXIT_OK, report


def _text_verify(report: dict) -> str:
    lines = [f"seed: {report['seed']}", f"labeling: {report['labeling']}"]
    for c in report["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        lines.append(f"{status} {c['name']:<24} {c['detail']} ({c['seconds']:.3f}s)")
    if not report["passed"]:
        lines.append(f"first failing identity: {report['first_failure']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# repcheck / bench
# ---------------------------------------------------------------------------


def cmd_repcheck(args) -> tuple[int, dict]:
    n = args.n
    if n > MAX_REP_GENERATORS:
        raise TooLarge(f"representation check is limited to n <= {MAX_REP_GENERATORS}")
    if n < 1:
        raise ValueError("--n must be at least 1")
    rng = np.random.default_rng(args.seed)
    passed = 0
    worst = 0.0
    for _ in range(args.trials):
        u = random_element(rng, n, complex_coeffs=True)
        v = random_element(rng, n, complex_coeffs=True)
        lhs = represent(u * v, n).data
        rhs = represent(u, n).data @ represent(v, n).data
        err = float(np.max(np.abs(lhs - rhs)))
        worst = max(worst, err)
        passed += err <= 1e-10
    report = {"command": "repcheck", "seed": args.seed, "n": n, "trials": args.trials, "passed": passed, "max_error": worst}
    if passed != args.trials:
        report["first_failure"] = "representation-homomorphism"
        return EXIT_THEOREM, report
    return EXIT_OK, report


def _bench_one(G: Graph) -> tuple[float, float, bool]:
    t0 = time.perf_counter()
    alg = [cycle_census_from_exp(G, v).table for v in range(1, G.m + 1)]
    t1 = time.perf_counter()
    orc = [oracle_all_cycles(G, v).table for v in range(1, G.m + 1)]
    t2 = time.perf_counter()
    return t1 - t0, t2 - t1, alg == orc


def cmd_bench(args) -> tuple[int, dict]:
    if args.m > 12:
        raise TooLarge("bench runs the brute-force oracle; limit is m = 12")
    graphs = random_graphs(args.trials, args.m, args.m, p=args.p, seed=args.seed)
    rows = []
    for t, (G, (ta, to, agree)) in enumerate(zip(graphs, _map(_bench_one, [(G,) for G in graphs], args.jobs)), 1):
        rows.append({"trial": t, "edges": len(G.edges), "exp_seconds": ta, "oracle_seconds": to, "agree": agree})
    return EXIT_OK, {"command": "bench", "seed": args.seed, "m": args.m, "p": args.p, "rows": rows}


def _text_bench(report: dict) -> str:
    lines = [f"seed: {report['seed']}", f"m = {report['m']}, p = {report['p']}", "trial  edges  exp(Psi) s  oracle s  agree"]
    for r in report["rows"]:
        lines.append(f"{r['trial']:>5}  {r['edges']:>5}  {r['exp_seconds']:>10.4f}  {r['oracle_seconds']:>8.4f}  {r['agree']}")
    return "\n".join(lines)


def _text_repcheck(report: dict) -> str:
    return (
        f"seed: {report['seed']}\n"
        f"n = {report['n']}: {report['passed']}/{report['trials']} pass (max error {report['max_error']:.2e})"
    )


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------


def _load_graph(path) -> Graph:
    if path is None:
        raise ValueError("--graph is required")
    return read_graph(path)


def _labeling(spec: str | None, G: Graph, vertex) -> Labeling:
    try:
        return parse_labeling(spec or "auto", G, vertex)
    except DuplicateLabels:
        raise
    except ValueError as exc:
        raise _Fail(EXIT_INPUT, f"bad --labeling: {exc}") from None


def _check_vertex(G: Graph, v: int):
    if not 1 <= v <= G.m:
        raise _Fail(EXIT_INPUT, f"--vertex {v} outside 1..{G.m}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")

    graph_opts = argparse.ArgumentParser(add_help=False)
    graph_opts.add_argument("--graph", metavar="PATH", required=True)
    graph_opts.add_argument(
        "--labeling",
        default=None,
        help="degree | f[:a,b,...] | q[:a,b,...] | auto (default auto for analyze, f for verify)",
    )

    p = argparse.ArgumentParser(prog="zeonlap", description="Zeon Laplacian spectra and walk censuses.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common, graph_opts], help="eigenvalues, eigenvectors and censuses")
    a.add_argument("--vertex", type=int, default=None)
    a.add_argument("--max-length", type=int, default=None, help="also list cycles by length up to this")

    v = sub.add_parser("verify", parents=[common, graph_opts], help="check every census against brute force")
    v.add_argument("--corrupt-psi", action="store_true", help=argparse.SUPPRESS)

    r = sub.add_parser("repcheck", parents=[common], help="matrix representation homomorphism trials")
    r.add_argument("--n", type=int, default=4)
    r.add_argument("--trials", type=int, default=200)

    b = sub.add_parser("bench", parents=[common], help="time exp(Psi) censuses against the DFS oracle")
    b.add_argument("--m", type=int, default=8)
    b.add_argument("--trials", type=int, default=5)
    b.add_argument("--p", type=float, default=0.5)
    return p


_COMMANDS = {
    "analyze": (cmd_analyze, _text_analyze),
    "verify": (cmd_verify, _text_verify),
    "repcheck": (cmd_repcheck, _text_repcheck),
    "bench": (cmd_bench, _text_bench),
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.jobs = max(1, args.jobs if args.jobs else (os.cpu_count() or 1))
    run, text = _COMMANDS[args.command]
    try:
        code, report = run(args)
    except _Fail as exc:
        return _error(args, exc.code, "input", str(exc))
    except TheoremViolation as exc:
        return _error(args, EXIT_THEOREM, exc.identity, exc.detail)
    except NotUniqueLabel as exc:
        return _error(args, EXIT_PRECONDITION, "NotUniqueLabel", str(exc))
    except (NotSimpleRoot, DegenerateSpectrum) as exc:
        return _error(args, EXIT_PRECONDITION, type(exc).__name__, str(exc))
    except (GraphFormatError, DuplicateLabels, TooLarge) as exc:
        return _error(args, EXIT_INPUT, type(exc).__name__, str(exc))
    except ValueError as exc:
        return _error(args, EXIT_INPUT, "input", str(exc))
    except ZeonError as exc:
        return _error(args, EXIT_PRECONDITION, type(exc).__name__, str(exc))
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(text(report))
    return code


def _error(args, code: int, kind: str, message: str) -> int:
    if args.format == "json":
        print(json.dumps({"command": args.command, "seed": args.seed, "error": kind, "message": message, "exit": code}))
    else:
        print(f"seed: {args.seed}", file=sys.stderr)
        print(f"error ({kind}): {message}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
