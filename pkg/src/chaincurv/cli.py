"""Command-line surface: verify | search | report.

Exit codes: 0 success, 1 verdict mismatch against the golden table,
2 usage/parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, report
from .criteria import FAILS_WITNESS
from .report import ChainSpec, SpecError, parse_spec
from .search import DOUBLE_STAR, STAR, SearchProblem, gradient_check, search

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

SEARCH_DEFAULTS = {
    "restarts": 20,
    "seed": 1,
    "budget": 300,
    "mu_schedule": [1e1, 1e3, 1e5, 1e7],
    "rationalize_tol": 1e-10,
    "denominator_bound": 8,
    "gradient_step": 1e-5,
}


def _load_config(path: str | None) -> dict:
    cfg = dict(SEARCH_DEFAULTS)
    if path:
        with open(path) as fh:
            user = json.load(fh)
        unknown = set(user) - set(cfg)
        if unknown:
            raise SpecError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(user)
    return cfg


def _spec_from_args(args) -> ChainSpec:
    spec = parse_spec(args.spec)
    clauses = [name for name in ("theta", "phi", "pq")
               if getattr(args, name, None) is not None]
    if len(clauses) > 1:
        raise SpecError("give at most one of --theta/--phi/--pq")
    if not clauses:
        return spec
    if spec.kind != "default":
        raise SpecError("parameters given both in the spec text and as flags")
    name = clauses[0]
    raw = getattr(args, name)
    return parse_spec(f"{args.spec}@{name if name != 'pq' else 'pq'}={raw}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    golden = report.load_golden()
    lines: list[str] = []
    mismatches = 0
    if args.all:
        specs = [ChainSpec(cid) for cid in sorted(golden)]
    else:
        if not args.spec:
            raise SpecError("verify needs a chain spec or --all")
        specs = [_spec_from_args(args)]
    for spec in specs:
        row = golden.get(spec.chain_id)
        if row is None:
            raise SpecError(f"no golden row for {spec.chain_id}")
        verdict = catalog.classify(spec.chain_id, spec.values())
        if spec.kind in ("default", "symbolic"):
            ok = report.verdict_matches_golden(verdict, row)
            expected = row["verdict"]
        else:
            expected = report.expected_for_spec(spec, row)
            ok = verdict.tag == expected
        mark = "ok  " if ok else "FAIL"
        extra = ""
        if verdict.exceptional:
            extra = " | " + "; ".join(f"{e.tag} at {e.point}" for e in verdict.exceptional)
        lines.append(f"{mark} {spec.render():40s} {verdict.tag}{extra}")
        if not ok:
            mismatches += 1
            lines.append(f"     expected: {expected}")
            lines.append(f"     computed: {verdict.tag} ({verdict.evidence})")
    lines.append(f"{len(specs) - mismatches}/{len(specs)} chains match the expected table")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def cmd_search(args) -> int:
    cfg = _load_config(args.config)
    if args.restarts is not None:
        cfg["restarts"] = args.restarts
    if args.seed is not None:
        cfg["seed"] = args.seed
    if args.budget is not None:
        cfg["budget"] = args.budget
    spec = _spec_from_args(args)
    data = catalog.chain_data(spec.chain_id)
    if data.is_family and spec.kind in ("default", "symbolic"):
        raise SpecError(
            f"{spec.chain_id} is a one-parameter family; instantiate it, "
            "e.g. @theta=3/5,4/5 or --pq 1,2")
    chain = catalog.get_chain(spec.chain_id, spec.values())
    mode = DOUBLE_STAR if args.mode == "doublestar" else STAR
    problem = SearchProblem.from_chain(chain, mode)
    grad_err = gradient_check(problem, samples=3, step=cfg["gradient_step"])
    result = search(problem, restarts=cfg["restarts"], seed=cfg["seed"],
                    budget=cfg["budget"], mu_schedule=tuple(cfg["mu_schedule"]),
                    rationalize_tol=cfg["rationalize_tol"],
                    denominator_bound=cfg["denominator_bound"])
    lines = [f"chain {spec.render()}  mode={mode}",
             f"gradient check: max relative error {grad_err:.2e}"]
    payload = {
        "schema": "chaincurv.search.v1",
        "id": spec.render(),
        "mode": mode,
        "feasible": result.feasible,
        "found": result.found,
        "best_objective": result.best_objective,
        "restarts_run": result.restarts_run,
        "margin": result.margin,
        "gradient_error": grad_err,
    }
    if not result.feasible:
        lines.append(result.note)
    else:
        lines.append(f"restarts run: {result.restarts_run}, "
                     f"best objective {result.best_objective:.3e}")
        trace = ", ".join(f"{v:.1e}" for v in result.objective_trace[:10])
        lines.append(f"objective trace (best-so-far): {trace}"
                     + (" ..." if len(result.objective_trace) > 10 else ""))
        if result.margin is not None:
            lines.append(f"empirical ratio lower bound: {result.margin:.6f}")
        if result.found:
            from .algebra import solve_in_span
            g = catalog.make_algebra(data.gid)
            names = catalog.basis_names(data.gid)
            for label, vec in (("X", result.witness.x), ("Y", result.witness.y)):
                sol = solve_in_span(list(g.fixed_basis), vec)
                terms = [f"{c!r}·{n}" for c, n in zip(sol, names) if not c.is_zero()]
                lines.append(f"verified witness {label} = " + " + ".join(terms))
            payload["witness"] = {
                "x": [repr(c) for c in solve_in_span(list(g.fixed_basis), result.witness.x)],
                "y": [repr(c) for c in solve_in_span(list(g.fixed_basis), result.witness.y)],
            }
            lines.append("the pair re-verified exactly: bracket zero, "
                         "vertical component nonzero")
        else:
            lines.append("no witness rationalized; the margin above is evidence, "
                         "not a proof that the bound holds")
    text = "\n".join(lines) + "\n"
    if args.format == "machine":
        text = json.dumps(payload, sort_keys=True) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def cmd_report(args) -> int:
    rows = report.report_rows(args.group)
    if args.format == "machine":
        text = report.render_machine(rows)
    else:
        text = report.render_table(rows)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="chaincurv",
        description="Exact curvature-bound certificates and witness search "
                    "for homogeneous chain fibrations")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_param_flags(p):
        p.add_argument("--theta", metavar="C,S", help="exact rational circle point")
        p.add_argument("--phi", metavar="C,S", help="exact rational circle point")
        p.add_argument("--pq", metavar="P,Q", help="coprime integer slope")
        p.add_argument("--out", metavar="PATH", help="write output to a file")

    pv = sub.add_parser("verify", help="check catalog verdicts against the expected table")
    pv.add_argument("spec", nargs="?", help="chain id, e.g. g2/so4/su2~")
    pv.add_argument("--all", action="store_true", help="verify the whole catalog")
    add_param_flags(pv)
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("search", help="numeric witness search on one chain")
    ps.add_argument("spec", help="chain id, with parameters if a family")
    ps.add_argument("--restarts", type=int)
    ps.add_argument("--seed", type=int)
    ps.add_argument("--budget", type=int)
    ps.add_argument("--mode", choices=["star", "doublestar"], default="star")
    ps.add_argument("--config", metavar="PATH", help="JSON file overriding defaults")
    ps.add_argument("--format", choices=["text", "machine"], default="text")
    add_param_flags(ps)
    ps.set_defaults(func=cmd_search)

    pr = sub.add_parser("report", help="render the catalog classification table")
    pr.add_argument("--format", choices=["table", "machine"], default="table")
    pr.add_argument("--group", choices=catalog.group_names())
    pr.add_argument("--out", metavar="PATH")
    pr.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except catalog.UnknownCatalogEntry as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
