"""Command line: ``grpdeg compute | verify | catalog``.

Exit codes: 0 when every check holds, 1 when any check is VIOLATED, 2 on
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .bounds import run_suite, summarize
from .errors import BudgetExceeded, GrpdegError
from .group import Subgroup, center, nilpotency_class, subgroup_generated, whole
from .measure import default_budget, dp_cost, degree, relative_degree_dp
from .montecarlo import estimate_degree
from .spec import default_corpus, parse_group_spec, read_corpus, resolve

SCHEMA = "grpdeg/run-report/v1"
COMPUTE_SCHEMA = "grpdeg/compute/v1"


class InputError(GrpdegError):
    pass


def _indices(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise InputError(f"expected comma-separated indices, got {text!r}") from exc


def _write_json(path: str, payload) -> None:
    Path(path).write_text(json.dumps(payload, indent=1) + "\n")


def cmd_compute(args) -> int:
    if args.n < 1:
        raise InputError("--n must be at least 1")
    G = resolve(args.group)
    if args.subgroup is not None:
        H = Subgroup(G, _indices(args.subgroup))
    elif args.subgroup_gen is not None:
        H = subgroup_generated(G, _indices(args.subgroup_gen))
    else:
        H = whole(G)
    label = "G" if H.is_whole else f"H({H.order}),G"
    out = {
        "schema": COMPUTE_SCHEMA,
        "group": G.name,
        "order": G.order,
        "subgroup": list(H.members),
        "n": args.n,
    }
    if args.method == "exact":
        budget = default_budget()
        cost = dp_cost(H, G, args.n)
        if cost > budget:
            raise BudgetExceeded(cost, budget, "try --method mc")
        d = relative_degree_dp(H, G, args.n)
        print(f"d^({args.n})({label}) = {d.value}  ({float(d.value):.10f})")
        out.update(
            method=d.method.value,
            value=str(d.value),
            decimal=float(d.value),
            favorable_count=str(d.favorable_count),
            total_count=str(d.total_count),
        )
    else:
        if args.samples < 1:
            raise InputError("--samples must be at least 1")
        est = estimate_degree(H, G, args.n, args.samples, args.seed, threads=args.threads)
        print(
            f"d^({args.n})({label}) ~ {est.point:.6f}  "
            f"95% CI [{est.ci95_low:.6f}, {est.ci95_high:.6f}]  "
            f"({est.hits}/{est.samples} hits, seed {est.seed})"
        )
        out.update(
            method="MonteCarlo",
            point=est.point,
            hits=est.hits,
            samples=est.samples,
            stderr=est.stderr,
            ci95=[est.ci95_low, est.ci95_high],
            seed=est.seed,
        )
    if args.json:
        _write_json(args.json, out)
    return 0


def build_run_report(specs, source, max_order, n_max, threads=1, budget=None) -> dict:
    start = time.perf_counter()
    groups = []
    for s in specs:
        G = resolve(s)
        if G.order <= max_order:
            groups.append(G)
    reports = run_suite(groups, n_max, budget=budget, threads=threads)
    tables = [
        {
            "group": G.name,
            "order": G.order,
            "degrees": {str(n): str(degree(G, n).value) for n in range(1, n_max + 1)},
        }
        for G in groups
    ]
    return {
        "schema": SCHEMA,
        "tool_version": __version__,
        "corpus": {
            "source": source,
            "max_order": max_order,
            "n_max": n_max,
            "groups": [G.name for G in groups],
        },
        "degree_tables": tables,
        "reports": [r.to_json() for r in reports],
        "summary": summarize(reports),
        "wall_time_s": round(time.perf_counter() - start, 3),
    }


def cmd_verify(args) -> int:
    if args.nmax < 1:
        raise InputError("--nmax must be at least 1")
    if args.corpus == "default":
        specs = default_corpus(args.max_order)
    else:
        try:
            specs = read_corpus(args.corpus)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read corpus {args.corpus}: {exc}") from exc
    report = build_run_report(specs, args.corpus, args.max_order, args.nmax, threads=args.threads)
    s = report["summary"]
    print(
        f"{len(report['corpus']['groups'])} groups, {len(report['reports'])} checks: "
        f"{s['holds']} hold, {s['equalities']} hold with equality, "
        f"{s['vacuous']} vacuous, {s['skipped']} skipped, {s['violated']} VIOLATED "
        f"({report['wall_time_s']:.1f}s)"
    )
    if args.out:
        _write_json(args.out, report)
    return 1 if s["violated"] else 0


def catalog_entries(max_order: int) -> list[dict]:
    out = []
    for spec in default_corpus(max_order):
        G = resolve(spec)
        c = nilpotency_class(G)
        out.append(
            {
                "spec": spec,
                "order": G.order,
                "abelian": G.is_abelian,
                "nilpotency_class": c if c is not None else "not nilpotent",
                "center_order": center(G).order,
            }
        )
    return out


def cmd_catalog(args) -> int:
    entries = catalog_entries(args.max_order)
    if args.json:
        print(json.dumps(entries, indent=1))
        return 0
    width = max((len(e["spec"]) for e in entries), default=4)
    print(f"{'spec':<{width}}  order  abelian  class          |Z|")
    for e in entries:
        print(
            f"{e['spec']:<{width}}  {e['order']:>5}  {str(e['abelian']):<7}  "
            f"{str(e['nilpotency_class']):<13}  {e['center_order']:>3}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grpdeg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    threads = dict(type=int, default=os.cpu_count() or 1, help="worker threads")

    c = sub.add_parser("compute", help="degree of one group or subgroup")
    c.add_argument("--group", required=True, help="group spec, e.g. 'sym:3 x cyclic:2'")
    c.add_argument("--n", type=int, default=1)
    sg = c.add_mutually_exclusive_group()
    sg.add_argument("--subgroup", help="comma-separated member indices")
    sg.add_argument("--subgroup-gen", help="comma-separated generator indices")
    c.add_argument("--method", choices=["exact", "mc"], default="exact")
    c.add_argument("--samples", type=int, default=100_000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--json", help="write the result as JSON to this path")
    c.add_argument("--threads", **threads)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run every bound check over a corpus")
    v.add_argument("--corpus", default="default", help="'default' or a corpus file")
    v.add_argument("--max-order", type=int, default=24)
    v.add_argument("--nmax", type=int, default=3)
    v.add_argument("--out", help="write the run report JSON here")
    v.add_argument("--threads", **threads)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("catalog", help="list the corpus groups with basic invariants")
    k.add_argument("--max-order", type=int, default=24)
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GrpdegError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # the exit-code contract has no slot for crashes
        print(f"error: unexpected {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
