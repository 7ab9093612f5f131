"""Command-line interface: ``liec <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .acceptance import run_all, search_counterexamples
from .classify import TTrace, Verdict, classify
from .coloring import is_liec, violations
from .generate import enumerate_cacti, gen_random_cactus, gen_T
from .graph import GraphError, SimpleGraph, is_cactus, is_connected
from .io import (
    FormatError,
    coloring_from_json,
    coloring_to_dict,
    format_edge_list,
    graph_to_json,
    read_coloring,
    read_graph,
    to_dot,
)
from .oracle import SearchBudget, SearchExhausted, chromatic_index_irr, find_liec
from .reduction import color_cactus

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NON_COLORABLE = 2
EXIT_BOW_TIE = 3
EXIT_NEEDS_MORE = 4

# seconds spent looking for a coloring with fewer colors than the construction used
_REFINE_SECONDS = 10.0


@dataclass
class RunReport:
    input: str
    verdict: str
    colors: int | None
    coloring: dict | None
    verified: bool
    seconds: float
    method: str
    exit_code: int
    trace: list | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.trace is None:
            del d["trace"]
        return d


def _witness_json(w: object) -> object:
    if isinstance(w, TTrace):
        return {"steps": [list(s) for s in w.steps], "mapping": {str(k): v for k, v in w.mapping.items()}}
    if isinstance(w, dict):
        return {str(k): v for k, v in w.items()}
    return w


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


# --------------------------------------------------------------------------
# color

def color_one(path: str, max_colors: int, method: str, trace: bool) -> RunReport:
    t0 = time.perf_counter()
    g = read_graph(path)
    if not is_connected(g):
        raise GraphError("graph is not connected")
    verdict = classify(g).verdict
    notes: list[str] = []
    steps = None
    if method == "oracle":
        k = chromatic_index_irr(g, kmax=max(5, max_colors))
        col = find_liec(g, k) if k else ({} if k == 0 else None)
        used = method
    else:
        if not is_cactus(g):
            raise GraphError("construct mode needs a cactus; use --method oracle")
        res = color_cactus(g)
        col, used = res.coloring, res.method
        steps = [asdict(s) for s in res.steps] if trace else None
        if col is not None and len(set(col.values())) > max_colors:
            budget = SearchBudget(time_limit=_REFINE_SECONDS)
            try:
                better = find_liec(g, max_colors, budget)
            except SearchExhausted:
                better = None
                notes.append(f"search for a {max_colors}-liec hit its time limit")
            if better is not None:
                col, used = better, used + "+oracle"
    colors = len(set(col.values())) if col is not None else None
    verified = col is not None and is_liec(g, col)
    if col is None:
        code = EXIT_NON_COLORABLE
    elif verdict is Verdict.BOW_TIE:
        code = EXIT_BOW_TIE
    elif colors > max_colors:
        code = EXIT_NEEDS_MORE
    else:
        code = EXIT_OK
    return RunReport(
        input=path,
        verdict=verdict.value,
        colors=colors,
        coloring=coloring_to_dict(col) if col is not None else None,
        verified=verified,
        seconds=round(time.perf_counter() - t0, 4),
        method=used,
        exit_code=code,
        trace=steps,
        notes=notes,
    )


def _color_job(job: tuple) -> dict:
    path, max_colors, method, trace = job
    try:
        return color_one(path, max_colors, method, trace).to_dict()
    except (FormatError, GraphError, OSError) as exc:
        return {"input": path, "error": str(exc), "exit_code": EXIT_ERROR}


def cmd_color(args: argparse.Namespace) -> int:
    jobs = [(p, args.max_colors, args.method, args.trace) for p in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_color_job, jobs))
    else:
        reports = [_color_job(j) for j in jobs]
    for r in reports:
        print(json.dumps(r))
    if args.dot:
        if len(args.files) != 1 or reports[0].get("coloring") is None:
            print("--dot needs a single colorable input", file=sys.stderr)
        else:
            col, _ = coloring_from_json(json.dumps(reports[0]["coloring"]))
            with open(args.dot, "w") as fh:
                fh.write(to_dot(read_graph(args.files[0]), col))
    return max(r["exit_code"] for r in reports)


# --------------------------------------------------------------------------
# other commands

def cmd_classify(args: argparse.Namespace) -> int:
    g = read_graph(args.file)
    c = classify(g)
    w = _witness_json(c.witness)
    _emit(args, {"verdict": c.verdict.value, "witness": w}, f"{c.verdict.value}\nwitness: {json.dumps(w)}")
    return EXIT_OK


def cmd_chromatic_index(args: argparse.Namespace) -> int:
    g = read_graph(args.file)
    k = chromatic_index_irr(g, kmax=args.kmax)
    _emit(args, {"chromatic_index": k, "kmax": args.kmax}, "none" if k is None else str(k))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    col, k = read_coloring(args.coloring)
    missing = [e for e in g.edges if e not in col]
    extra = [e for e in col if e not in g.edges_set]
    if missing or extra:
        bad = missing or extra
        msg = f"coloring does not match the graph: edge {bad[0][0]}-{bad[0][1]} {'uncolored' if missing else 'not in graph'}"
        _emit(args, {"ok": False, "error": msg}, msg)
        return EXIT_ERROR
    bad = violations(g, col)
    if bad:
        u, v = bad[0]
        _emit(args, {"ok": False, "violating_edge": [u, v], "colors": k}, f"violating edge {u}-{v}")
        return EXIT_ERROR
    _emit(args, {"ok": True, "colors": k}, "ok")
    return EXIT_OK


def _print_graph(args: argparse.Namespace, g: SimpleGraph, header: str = "") -> None:
    if args.json:
        print(graph_to_json(g))
    else:
        if header:
            print(f"# {header}")
        sys.stdout.write(format_edge_list(g))


def cmd_gen(args: argparse.Namespace) -> int:
    if args.cactus:
        if args.n is None or args.c is None:
            raise GraphError("--cactus needs -n and -c")
        _print_graph(args, gen_random_cactus(args.n, args.c, args.seed))
    elif args.t_family:
        g, trace = gen_T(args.steps, args.seed)
        _print_graph(args, g, "steps: " + "; ".join(f"{r} at {v} length {n}" for r, v, n in trace))
    else:
        for i, g in enumerate(enumerate_cacti(args.max_edges, 1)):
            if i and not args.json:
                print()
            _print_graph(args, g, f"graph {i}")
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_all(args.max_edges, args.max_vertices)
    for r in results:
        if args.json:
            print(json.dumps({"criterion": r.number, "passed": r.passed, "checked": r.checked,
                              "failures": len(r.failures), "seconds": round(r.seconds, 2), "note": r.note}))
        else:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_ERROR


def cmd_search(args: argparse.Namespace) -> int:
    found = 0
    for g, k in search_counterexamples(args.max_vertices, args.kmax):
        found += 1
        if args.json:
            print(json.dumps({"graph": json.loads(graph_to_json(g)), "chromatic_index": k}), flush=True)
        else:
            print(f"# chromatic index {k if k is not None else '> 5'}")
            sys.stdout.write(format_edge_list(g))
            print(flush=True)
    print(f"{found} graph(s) need more than {args.kmax} colors", file=sys.stderr)
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="liec", description="Locally irregular edge colorings of cactus graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="colorability verdict with witness")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("color", parents=[common], help="color a cactus; prints a JSON run report")
    s.add_argument("files", nargs="+", metavar="file")
    s.add_argument("--max-colors", type=int, default=3)
    s.add_argument("--method", choices=["construct", "oracle"], default="construct")
    s.add_argument("--trace", action="store_true", help="include the reduction steps")
    s.add_argument("--dot", metavar="PATH", help="also write the colored graph as DOT")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for several inputs")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("chromatic-index", parents=[common], help="exact irregular chromatic index")
    s.add_argument("file")
    s.add_argument("--kmax", type=int, default=5)
    s.set_defaults(func=cmd_chromatic_index)

    s = sub.add_parser("verify", parents=[common], help="check a coloring")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", parents=[common], help="generate graphs")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--cactus", action="store_true", help="random cactus")
    mode.add_argument("--t-family", action="store_true", help="random non-colorable member of the T family")
    mode.add_argument("--enumerate", action="store_true", help="every cactus up to --max-edges")
    s.add_argument("-n", type=int, help="vertices (--cactus)")
    s.add_argument("-c", type=int, help="cycles (--cactus)")
    s.add_argument("--steps", type=int, default=1, help="grammar steps (--t-family)")
    s.add_argument("--max-edges", type=int, default=6, help="size bound (--enumerate)")
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance checks at reduced size")
    s.add_argument("--max-edges", type=int, default=11)
    s.add_argument("--max-vertices", type=int, default=7)
    s.set_defaults(func=cmd_selftest)

    s = sub.add_parser("search-counterexamples", parents=[common], help="connected graphs needing more than kmax colors")
    s.add_argument("--max-vertices", type=int, required=True)
    s.add_argument("--kmax", type=int, default=3)
    s.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (FormatError, GraphError, OSError) as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
