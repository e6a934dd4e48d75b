"""Command-line front end.

Exit codes: 0 success or agreement, 1 verified disagreement, 2 invalid input,
3 inconclusive (budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time

from edgerecon import export, verify
from edgerecon.broom import build, parse_spec
from edgerecon.deck import da_edeck
from edgerecon.errors import Inconclusive, InputError, NotReconstructible
from edgerecon.formulas import proof_table
from edgerecon.graph import canonical_form, is_isomorphic
from edgerecon.graph6 import to_graph6
from edgerecon.oracle import (
    edge_switch,
    isomorphic_by_backtracking,
    random_graph,
    random_permutation,
)
from edgerecon.reconstruct import determines

log = logging.getLogger("edgerecon")

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_deck(args) -> int:
    spec = parse_spec(args.spec)
    deck = da_edeck(build(spec))
    names = export.class_names(spec)
    if args.format == "json":
        obj = deck.to_json()
        for cls, name in zip(obj["classes"], names):
            cls["label"] = name
        text = _dumps(obj)
    elif args.format == "csv":
        text = export.deck_csv(deck, names)
    elif args.format == "dot":
        text = export.deck_dot(deck, names, title=spec.render())
    else:
        text = export.deck_graph6(deck)
    _emit(text, args.out)
    return EXIT_OK


def cmd_compute(args) -> int:
    spec = parse_spec(args.spec)
    report = verify.evaluate(
        spec, which=(args.which,), method=args.method, budget=args.budget, strict_formula=True
    )
    if args.format == "csv":
        text = verify.to_csv([report], timing=not args.no_timing)
    else:
        text = _dumps(report.to_json(timing=not args.no_timing))
    _emit(text, args.out)
    if report.status == "inconclusive":
        print(f"inconclusive: {report.note}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return EXIT_DISAGREE if report.agree is False else EXIT_OK


def cmd_verify(args) -> int:
    cfg = verify.SweepConfig(
        family=args.family,
        n1=verify.parse_range(args.n1),
        n2=verify.parse_range(args.n2),
        m=verify.parse_range(args.m),
        k=verify.parse_range(args.k),
        method=args.method,
        budget=args.budget,
        max_vertices=args.max_vertices,
        jobs=args.jobs,
    )
    reports = verify.run_sweep(cfg)
    timing = not args.no_timing
    if args.format == "json":
        text = _dumps([verify.row(r, timing) for r in reports])
    else:
        text = verify.to_csv(reports, timing)
    _emit(text, args.out)
    for r in reports:
        row = verify.row(r, timing)
        if row["agree"] in ("no", "finding") or r.status != "ok":
            log.warning("%s: agree=%s %s", r.spec, row["agree"], row["note"])
    return verify.exit_code(reports)


def cmd_witness(args) -> int:
    spec = parse_spec(args.spec)
    g = build(spec)
    collection = export.parse_collection(spec, args.collection)
    verdict = determines(collection, g)
    names = export.class_names(spec)
    if verdict.determines:
        if args.format == "json":
            _emit(_dumps({"spec": spec.render(), "collection": args.collection, "determines": True}), args.out)
        else:
            _emit("determines\n", args.out)
        return EXIT_OK
    h = verdict.witness
    if args.format == "json":
        keys = {c.key: names[j] for j, (c, _) in enumerate(da_edeck(g).classes)}
        obj = {
            "spec": spec.render(),
            "collection": args.collection,
            "determines": False,
            "witness": h.to_json(),
            "graph6": to_graph6(h),
            "shared": [
                {"label": keys[c.key], "d": c.d, "asked": asked, "in_witness": have}
                for c, asked, have in export.shared_cards(h, collection)
            ],
        }
        text = _dumps(obj)
    elif args.format == "dot":
        text = export.witness_dot(h, collection, title=f"witness for {spec.render()}")
    else:
        text = to_graph6(h) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    rows = proof_table(args.family)
    if args.format == "json":
        text = _dumps([{"k": r.k, "m": r.m, "n": r.n, "cases": list(r.cases), "value": r.value} for r in rows])
    else:
        lines = ["k,m,n,cases,value"]
        lines += [f'{r.k},{r.m or ""},{r.n},"{" ".join(r.cases)}",{r.value}' for r in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    """Random canonical-form and isomorphism checks against the backtracking oracle."""
    rng = random.Random(args.seed)
    failures = 0
    start = time.monotonic()
    for _ in range(args.trials):
        n = rng.randint(1, args.max_n)
        g = random_graph(rng, n, rng.random())
        h = g.relabel(random_permutation(rng, n))
        if canonical_form(g) != canonical_form(h):
            failures += 1
        other = edge_switch(rng, h)
        if is_isomorphic(g, other) != isomorphic_by_backtracking(g, other):
            failures += 1
    summary = {"trials": args.trials, "seed": args.seed, "failures": failures}
    if not args.no_timing:
        summary["elapsed"] = round(time.monotonic() - start, 3)
    _emit(_dumps(summary), args.out)
    return EXIT_DISAGREE if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="edgerecon",
        description="dern/adern of strong double brooms by exhaustive search",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats, default):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", metavar="PATH")

    d = sub.add_parser("deck", help="print the classified da-edeck of a broom")
    d.add_argument("--spec", required=True)
    common(d, ("json", "csv", "dot", "graph6"), "json")
    d.set_defaults(func=cmd_deck)

    c = sub.add_parser("compute", help="dern or adern of one broom")
    c.add_argument("which", choices=("dern", "adern"))
    c.add_argument("--spec", required=True)
    c.add_argument("--method", choices=("brute", "formula", "both"), default="brute")
    c.add_argument("--budget", type=float, default=verify.DEFAULT_BUDGET, metavar="SECONDS")
    c.add_argument("--no-timing", action="store_true", help="write elapsed as 0 for byte-stable output")
    common(c, ("json", "csv"), "json")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="sweep a family, brute force vs closed forms")
    v.add_argument("--family", choices=verify.FAMILIES, default="mpk")
    v.add_argument("--n1", "--n", dest="n1", default="1..3", metavar="a..b")
    v.add_argument("--n2", default="1..3", metavar="a..b")
    v.add_argument("--m", default="2..3", metavar="a..b")
    v.add_argument("--k", default="3..4", metavar="a..b")
    v.add_argument("--method", choices=("brute", "formula", "both"), default="both")
    v.add_argument("--budget", type=float, default=verify.DEFAULT_BUDGET, metavar="SECONDS")
    v.add_argument("--max-vertices", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--no-timing", action="store_true")
    common(v, ("csv", "json"), "csv")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("witness", help="find a graph sharing a card collection with the broom")
    w.add_argument("--spec", required=True)
    w.add_argument("--collection", required=True, help='class:count list, e.g. "L:2,K:2"')
    common(w, ("json", "dot", "graph6"), "json")
    w.set_defaults(func=cmd_witness)

    t = sub.add_parser("table", help="print an adern proof-outcome table")
    t.add_argument("--family", choices=("2pk", "mpk"), required=True)
    common(t, ("csv", "json"), "csv")
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("fuzz", help="randomized canonical-labeling self check")
    f.add_argument("--trials", type=int, default=1000)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--max-n", type=int, default=8)
    f.add_argument("--no-timing", action="store_true")
    common(f, ("json",), "json")
    f.set_defaults(func=cmd_fuzz)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotReconstructible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
