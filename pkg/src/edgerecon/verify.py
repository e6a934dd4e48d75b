"""Parameter sweeps comparing brute-force values with the closed forms."""

from __future__ import annotations

import csv
import io
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from edgerecon import formulas
from edgerecon.broom import BroomSpec, build
from edgerecon.errors import Inconclusive, InputError, Unsupported
from edgerecon.reconstruct import Engine, ReconReport

log = logging.getLogger(__name__)

FAMILIES = ("2pk", "mpk", "multi", "unequal", "p2", "mixed")
CSV_COLUMNS = (
    "spec",
    "dern_brute",
    "dern_formula",
    "adern_brute",
    "adern_formula",
    "agree",
    "elapsed",
    "status",
    "note",
)
DEFAULT_BUDGET = 120.0


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` or ``"a"`` -> inclusive ``(a, b)``."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected a..b") from None
    if lo > hi:
        raise InputError(f"empty range {text!r}")
    return lo, hi


def _span(r: tuple[int, int]) -> range:
    return range(r[0], r[1] + 1)


@dataclass(frozen=True)
class SweepConfig:
    family: str = "mpk"
    n1: tuple[int, int] = (1, 3)
    n2: tuple[int, int] = (1, 3)
    m: tuple[int, int] = (2, 3)
    k: tuple[int, int] = (3, 4)
    method: str = "both"
    budget: float | None = DEFAULT_BUDGET
    max_vertices: int | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.method not in ("brute", "formula", "both"):
            raise InputError(f"unknown method {self.method!r}")
        for name in ("n1", "n2", "m", "k"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise InputError(f"empty range for {name}")


def _raw_specs(cfg: SweepConfig):
    ns, n2s, ms, ks = _span(cfg.n1), _span(cfg.n2), _span(cfg.m), _span(cfg.k)
    if cfg.family == "2pk":
        for n, k in itertools.product(ns, ks):
            yield n, n, [(2, k)]
    elif cfg.family == "mpk":
        for n, m, k in itertools.product(ns, ms, ks):
            yield n, n, [(m, k)]
    elif cfg.family == "unequal":
        for a, b, m, k in itertools.product(ns, n2s, ms, ks):
            if a < b:
                yield a, b, [(m, k)]
    elif cfg.family == "p2":
        for a, b, m, k in itertools.product(ns, n2s, ms, ks):
            if k > 2:
                yield a, b, [(1, 2), (m, k)]
    else:
        for k1, k2 in itertools.combinations(ks, 2):
            for m1, m2 in itertools.product(ms, ms):
                if cfg.family == "multi":
                    for n in ns:
                        yield n, n, [(m1, k1), (m2, k2)]
                else:
                    for a, b in itertools.product(ns, n2s):
                        if a < b:
                            yield a, b, [(m1, k1), (m2, k2)]


def sweep_specs(cfg: SweepConfig) -> list[BroomSpec]:
    """Valid specs of the sweep in generation order, duplicates and oversize dropped."""
    out: list[BroomSpec] = []
    seen: set[BroomSpec] = set()
    for n1, n2, paths in _raw_specs(cfg):
        try:
            spec = BroomSpec.make(n1, n2, paths)
        except InputError as exc:
            log.info("skipping B(%s,%s,%s): %s", n1, n2, paths, exc)
            continue
        if cfg.max_vertices is not None and spec.vertex_count > cfg.max_vertices:
            log.info("skipping %s: %d vertices over cap", spec, spec.vertex_count)
            continue
        if spec not in seen:
            seen.add(spec)
            out.append(spec)
    return out


def evaluate(
    spec: BroomSpec,
    which: tuple[str, ...] = ("dern", "adern"),
    method: str = "both",
    budget: float | None = DEFAULT_BUDGET,
    strict_formula: bool = False,
    dern_predictor=None,
    adern_predictor=None,
) -> ReconReport:
    """Compute the requested parameters of ``spec`` by brute force and/or formula.

    With ``strict_formula`` an unsupported adern family raises
    :class:`Unsupported`; otherwise the formula column is left empty.
    """
    dern_predictor = dern_predictor or formulas.dern_formula
    adern_predictor = adern_predictor or formulas.adern_formula
    report = ReconReport(spec=spec.render(), method=method)
    start = time.monotonic()

    if method in ("formula", "both"):
        predictors = {"dern": dern_predictor, "adern": adern_predictor}
        for name in which:
            try:
                report.formula[name] = predictors[name](spec).to_json()
            except Unsupported:
                if strict_formula:
                    raise
                report.formula[name] = None

    if method in ("brute", "both"):
        eng = Engine(build(spec), budget)
        try:
            if "dern" in which:
                report.dern, vec = eng.dern()
                report.dern_set = eng.deck.sub(vec)
            if "adern" in which:
                report.adern, vec = eng.adern()
                report.bad_max = eng.deck.sub(vec)
        except Inconclusive as exc:
            report.status = "inconclusive"
            report.note = str(exc)
    elif method == "formula":
        for name in which:
            pred = report.formula.get(name)
            if pred is not None and "value" in pred:
                setattr(report, name, pred["value"])

    if method == "both" and report.status == "ok":
        report.agree = all(
            _accepts(report.formula.get(name), getattr(report, name)) for name in which
        )
    report.elapsed = time.monotonic() - start
    return report


def _accepts(pred: dict | None, observed: int | None) -> bool:
    if pred is None or observed is None:
        return True
    if "value" in pred:
        return pred["value"] == observed
    return observed in pred["value_set"]


def _finding(pred: dict | None, observed: int | None) -> str | None:
    if pred is None or observed is None or "value" in pred:
        return None
    if observed in pred["value_set"] and observed != pred["preferred"]:
        return f"{pred['branch']}: preferred {pred['preferred']}, brute force {observed}"
    return None


def _formula_cell(pred: dict | None) -> str:
    if pred is None:
        return ""
    if "value" in pred:
        return str(pred["value"])
    return "|".join(map(str, pred["value_set"]))


def row(report: ReconReport, timing: bool = True) -> dict:
    f = report.formula
    notes = [n for n in (_finding(f.get("dern"), report.dern), _finding(f.get("adern"), report.adern)) if n]
    if report.status != "ok":
        notes.append(report.note or report.status)
    if report.agree is None:
        agree = ""
    elif not report.agree:
        agree = "no"
    else:
        agree = "finding" if notes else "yes"
    blank = lambda v: "" if v is None else str(v)  # noqa: E731
    return {
        "spec": report.spec,
        "dern_brute": blank(report.dern) if report.method != "formula" else "",
        "dern_formula": _formula_cell(f.get("dern")),
        "adern_brute": blank(report.adern) if report.method != "formula" else "",
        "adern_formula": _formula_cell(f.get("adern")),
        "agree": agree,
        "elapsed": f"{report.elapsed:.3f}" if timing else "0",
        "status": report.status,
        "note": "; ".join(notes),
    }


def _evaluate_for_sweep(args) -> ReconReport:
    spec, method, budget, dern_predictor, adern_predictor = args
    return evaluate(
        spec,
        method=method,
        budget=budget,
        dern_predictor=dern_predictor,
        adern_predictor=adern_predictor,
    )


def run_sweep(cfg: SweepConfig, dern_predictor=None, adern_predictor=None) -> list[ReconReport]:
    """Evaluate every spec; results come back in spec order whatever ``jobs`` is."""
    tasks = [(s, cfg.method, cfg.budget, dern_predictor, adern_predictor) for s in sweep_specs(cfg)]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_evaluate_for_sweep, tasks))
    return [_evaluate_for_sweep(t) for t in tasks]


def exit_code(reports: list[ReconReport]) -> int:
    if any(r.agree is False for r in reports):
        return 1
    if any(r.status != "ok" for r in reports):
        return 3
    return 0


def to_csv(reports: list[ReconReport], timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(row(r, timing))
    return buf.getvalue()
