"""Command-line driver: batch solving, validation, comparison, demo, serve.

Exit codes: 0 success, 1 validation/solve failure, 2 usage error.
Output is deterministic: identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import casestudy, store
from .comparison import consistency
from .engine import (
    NewAlternative,
    compare_rankings,
    fuzzify_problem,
    rank_reversal_probe,
    solve_crisp,
    solve_fuzzy,
    what_if_attitude,
)
from .errors import AhpError, BadRequest
from .extent import possibility_matrix, synthetic_extents
from .fuzzy import ATTITUDES, Tfn

DEFAULT_PORT = int(os.environ.get("AHPKIT_PORT", "8000"))


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def _print_result(result, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(store.result_to_document(result), sort_keys=True, indent=2))
        return
    print(f"Method: {result.method}")
    print("Criteria weights:")
    for name, w in zip(result.criteria, result.criteria_weights.weights):
        print(f"  {name}: {_fmt(w)}")
    print("Local weights:")
    for name, lw in zip(result.criteria, result.local_weights):
        cells = ", ".join(f"{a} {_fmt(w)}" for a, w in zip(result.alternatives, lw.weights))
        print(f"  {name}: {cells}")
    print("Global scores:")
    for name, s in zip(result.alternatives, result.global_scores):
        print(f"  {name}: {_fmt(s)}")
    print("Ranking: " + " > ".join(result.ranking()))
    if result.diagnostics:
        print("Consistency:")
        for name in ("criteria", *result.criteria):
            rep = result.diagnostics.get(name)
            if rep is None:
                continue
            verdict = "ok" if rep.consistent else "inconsistent"
            print(
                f"  {name}: lambda_max {_fmt(rep.lambda_max)}, CI {_fmt(rep.ci)}, "
                f"CR {_fmt(rep.cr)} ({verdict})"
            )


def _print_repairs(problem) -> None:
    if not problem.repair_log:
        print("Repairs: none")
        return
    print("Repairs:")
    for rep in problem.repair_log:
        before = "/".join(str(x) for x in rep.before)
        after = "/".join(_fmt(x) for x in rep.after)
        print(f"  {rep.matrix} cell ({rep.i},{rep.j}): {before} -> {after}  [{rep.reason}]")


def _print_comparison(cmp, fmt: str) -> None:
    if fmt == "json":
        doc = {
            "alternatives": list(cmp.alternatives),
            "method_a": cmp.method_a,
            "method_b": cmp.method_b,
            "scores_a": [_fmt(s) for s in cmp.scores_a],
            "scores_b": [_fmt(s) for s in cmp.scores_b],
            "ranking_a": [cmp.alternatives[i] for i in cmp.rank_a],
            "ranking_b": [cmp.alternatives[i] for i in cmp.rank_b],
            "flips": [list(f) for f in cmp.flips],
            "top_choice_agrees": cmp.top_choice_agrees,
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
        return
    width = max(len(a) for a in cmp.alternatives) + 2
    print(f"{'Alternative':<{width}}{cmp.method_a:<18}{cmp.method_b}")
    for idx, name in enumerate(cmp.alternatives):
        print(f"{name:<{width}}{_fmt(cmp.scores_a[idx]):<18}{_fmt(cmp.scores_b[idx])}")
    print(f"Ranking ({cmp.method_a}): " + " > ".join(cmp.alternatives[i] for i in cmp.rank_a))
    print(f"Ranking ({cmp.method_b}): " + " > ".join(cmp.alternatives[i] for i in cmp.rank_b))
    print("Top choice agrees: " + ("yes" if cmp.top_choice_agrees else "no"))
    if cmp.flips:
        print("Rank flips: " + "; ".join(f"{a} <-> {b}" for a, b in cmp.flips))
    else:
        print("Rank flips: none")


def _solve_problem(problem, method: str | None, attitude: str | None):
    if problem.mode == "crisp":
        if attitude is not None:
            raise BadRequest("attitudes apply to fuzzy problems only")
        return solve_crisp(problem, method or "geometric-mean")
    if attitude is not None:
        return what_if_attitude(problem, attitude)
    return solve_fuzzy(problem)


def cmd_solve(args) -> int:
    problem = store.load_problem(args.problem, strict=args.strict)
    method = {"geomean": "geometric-mean", "eigen": "eigen", None: None}[args.method]
    result = _solve_problem(problem, method, args.attitude)
    _print_result(result, args.format)
    if args.output:
        store.save_result(result, args.output)
        print(f"Saved: {args.output}")
    return 0


def cmd_consistency(args) -> int:
    problem = store.load_problem(args.problem, strict=args.strict)
    if problem.mode != "crisp":
        print("error: consistency diagnostics apply to crisp problems", file=sys.stderr)
        return 2
    reports = {"criteria": consistency(problem.criteria_matrix)}
    for name, m in zip(problem.criteria, problem.alternative_matrices):
        reports[name] = consistency(m)
    if args.format == "json":
        doc = {
            name: {
                "lambda_max": _fmt(r.lambda_max),
                "ci": _fmt(r.ci),
                "cr": _fmt(r.cr),
                "consistent": r.consistent,
            }
            for name, r in reports.items()
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        _print_repairs(problem)
        for name, r in reports.items():
            verdict = "ok" if r.consistent else "inconsistent"
            print(f"{name}: lambda_max {_fmt(r.lambda_max)}, CI {_fmt(r.ci)}, CR {_fmt(r.cr)} ({verdict})")
    return 0


def cmd_compare(args) -> int:
    problem = store.load_problem(args.problem, strict=args.strict)
    if problem.mode == "crisp":
        cmp = compare_rankings(solve_crisp(problem, "geometric-mean"), solve_fuzzy(fuzzify_problem(problem)))
    else:
        cmp = compare_rankings(what_if_attitude(problem, "moderate"), solve_fuzzy(problem))
    _print_comparison(cmp, args.format)
    return 0


def cmd_what_if(args) -> int:
    problem = store.load_problem(args.problem, strict=args.strict)
    result = what_if_attitude(problem, args.attitude)
    _print_result(result, args.format)
    return 0


def _parse_new_alternative(spec: str, mode: str) -> NewAlternative:
    text = spec
    if spec.startswith("@"):
        with open(spec[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadRequest(f"--add expects JSON ({exc})") from None
    name = doc.get("name")
    judgments = doc.get("judgments")
    if not isinstance(name, str) or not isinstance(judgments, dict):
        raise BadRequest('--add JSON needs {"name": ..., "judgments": {criterion: [values...]}}')
    converted = {}
    for crit, row in judgments.items():
        if mode == "fuzzy":
            converted[crit] = tuple(Tfn(*(float(x) for x in v)) for v in row)
        else:
            converted[crit] = tuple(float(v) for v in row)
    return NewAlternative(name=name, judgments=converted)


def cmd_probe(args) -> int:
    problem = store.load_problem(args.problem, strict=args.strict)
    new_alt = _parse_new_alternative(args.add, problem.mode) if args.add else None
    report = rank_reversal_probe(problem, new_alt)
    if args.format == "json":
        doc = {
            "baseline": store.result_to_document(report.baseline),
            "extended": store.result_to_document(report.extended) if report.extended else None,
            "flips": [list(f) for f in report.flips],
            "order_preserved": report.order_preserved,
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
        return 0
    print("Baseline ranking: " + " > ".join(report.baseline.ranking()))
    if report.extended is None:
        print("No alternative added; nothing to probe.")
        return 0
    print("Extended ranking: " + " > ".join(report.extended.ranking()))
    if report.flips:
        print("Rank reversal among incumbents: " + "; ".join(f"{a} <-> {b}" for a, b in report.flips))
    else:
        print("Incumbent order preserved.")
    return 0


def cmd_demo(_args) -> int:
    problem = casestudy.fuzzy_problem()
    print(f"Goal: {problem.goal}")
    print(f"Criteria: {', '.join(problem.criteria)}")
    print(f"Alternatives: {', '.join(problem.alternatives)}")
    _print_repairs(problem)
    es = synthetic_extents(problem.criteria_matrix)
    print("Criteria matrix row sums (l/m/u):")
    zero = Tfn(0.0, 0.0, 0.0)
    for name, row in zip(problem.criteria, problem.criteria_matrix.entries):
        s = zero
        for cell in row:
            s = Tfn(s.l + cell.l, s.m + cell.m, s.u + cell.u)
        print(f"  {name}: {s.render()}")
    print(f"Grand total: {es.total.render()}")
    print("Synthetic extents:")
    for name, e in zip(problem.criteria, es.extents):
        print(f"  S({name}) = {e.render()}")
    pm = possibility_matrix(es)
    print("Criteria dominance possibilities V(row >= column):")
    for i, name in enumerate(problem.criteria):
        print(f"  {name}: " + "  ".join(_fmt(v) for v in pm.values[i]))
    fuzzy_result = solve_fuzzy(problem)
    print("Fuzzy solve (extent analysis):")
    _print_result(fuzzy_result, "text")
    crisp_result = solve_crisp(casestudy.crisp_problem(), "geometric-mean")
    print("Classical solve (geometric mean):")
    _print_result(crisp_result, "text")
    print("Classical vs fuzzy:")
    _print_comparison(compare_rankings(crisp_result, fuzzy_result), "text")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ahpkit", description="AHP / fuzzy-AHP decision engine")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("problem", help="problem file (.json canonical or sectioned .csv) or raw text")
        p.add_argument("--strict", action="store_true", help="hard validation instead of logged repair")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve", help="solve a problem end to end")
    add_common(p)
    p.add_argument("--method", choices=("eigen", "geomean"), default=None)
    p.add_argument("--attitude", choices=ATTITUDES, default=None)
    p.add_argument("--output", help="also save the result document here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("consistency", help="consistency diagnostics for every matrix")
    add_common(p)
    p.set_defaults(func=cmd_consistency)

    p = sub.add_parser("compare", help="classical vs fuzzy side by side")
    add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("what-if", help="fuzzy problem under one attitude")
    add_common(p)
    p.add_argument("--attitude", choices=ATTITUDES, required=True)
    p.set_defaults(func=cmd_what_if)

    p = sub.add_parser("probe", help="rank-reversal probe: add an alternative, diff the order")
    add_common(p)
    p.add_argument("--add", help='JSON (or @file): {"name": ..., "judgments": {criterion: [...]}}')
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("demo", help="run the bundled case study end to end")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("serve", help="host the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=DEFAULT_PORT)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AhpError as exc:
        where = f" [{exc.matrix}]" if exc.matrix else ""
        print(f"error: {exc.code}{where}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
