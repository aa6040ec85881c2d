"""Verification campaigns over graph families and seeded random corpora."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .bounds import (
    BoundReport,
    GraphAnalysis,
    closed_form_dsl,
    distance_radius_bounds,
    dsl_bounds,
    q_bounds,
)
from .graph import FAMILY_KINDS, FamilySpec, Graph, GraphError, XorShift64Star, generate_family, random_connected
from .metrics import is_complete
from .spectra import check_psd, majorization_check, power_spectral_radius

__all__ = [
    "VerificationResult",
    "RandomCorpus",
    "FamilyCorpus",
    "SweepResult",
    "verify_graph",
    "verify_family",
    "sweep",
    "results_to_json",
    "results_to_csv",
    "write_report",
    "read_report",
    "ReportError",
    "TIMING_KEYS",
    "strip_timing",
]

log = logging.getLogger(__name__)

ORACLE_RTOL = 1e-8
ROUTE_RTOL = 1e-12
TIMING_KEYS = ("timing_ms",)

# (matrix-level name, graph-formula name) pairs that must coincide
ROUTE_PAIRS = (
    ("A:T2.2-upper", "C2.3-upper"),
    ("A:T2.6-upper", "C2.9-upper"),
    ("Q:T2.10-upper", "C2.11-upper"),
    ("DQ:L2.1-lower", "T3.2-lower"),
    ("DQ:L2.1-upper", "T3.2-upper"),
    ("D:T2.2-upper", "T3.4-upper"),
    ("D:T2.6-upper", "T3.6-upper"),
    ("DQ:T2.10-upper", "T3.7-upper"),
)


class ReportError(ValueError):
    pass


@dataclass
class VerificationResult:
    label: str
    descriptor: dict
    n: int
    m: int
    reports: list[BoundReport] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    findings: list[str] = field(default_factory=list)
    error: str | None = None
    timing_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.error is None and all(self.checks.values())

    @property
    def radii(self) -> dict[str, float]:
        out: dict[str, float] = {}
        for r in self.reports:
            out.update(r.radii)
        return out

    def report(self, radius_name: str) -> BoundReport:
        for r in self.reports:
            if r.radius_name == radius_name:
                return r
        raise KeyError(radius_name)

    def failed_checks(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def to_dict(self) -> dict:
        d = {"graph": self.label, "descriptor": self.descriptor, "n": self.n, "m": self.m}
        for key in ("lambda1", "q1", "delta1", "delta1Q"):
            d[key] = self.radii.get(key)
        d["bounds"] = [
            {
                "radius": r.radius_name,
                "name": b.name,
                "side": b.side,
                "value": b.value,
                "equality_predicted": b.equality_predicted,
                "equality_observed": b.equality_observed,
            }
            for r in self.reports
            for b in r.bounds
        ]
        d["tightest"] = {r.radius_name: r.tightest() for r in self.reports}
        d["checks"] = dict(self.checks)
        d["findings"] = list(self.findings)
        d["error"] = self.error
        d["pass"] = self.passed
        d["timing_ms"] = self.timing_ms
        return d


def _rel_close(a: float, b: float, rtol: float) -> bool:
    return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))


def verify_graph(g: Graph, label: str | None = None, descriptor: dict | None = None,
                 closed_form: float | None = None) -> VerificationResult:
    """Run every bound and structural check on one graph.

    A disconnected or trivial graph yields a result with ``error`` set
    instead of raising.
    """
    label = label or f"G(n={g.n},m={g.m})"
    res = VerificationResult(label, descriptor or {}, g.n, g.m)
    start = time.monotonic()
    try:
        ctx = GraphAnalysis(g)
    except GraphError as exc:
        res.error = str(exc)
        res.timing_ms = (time.monotonic() - start) * 1e3
        return res

    qr = q_bounds(ctx, label)
    dr = dsl_bounds(ctx, label)
    tr = distance_radius_bounds(ctx, label)
    res.reports = [qr, dr, tr]
    checks = res.checks
    n = g.n

    for r in res.reports:
        checks[f"sandwich_{r.radius_name}"] = r.sandwich_ok
    checks["equality_soundness"] = not any(r.unsound_predictions() for r in res.reports)
    for r in res.reports:
        for b in r.unpredicted_equalities():
            kind = "contradicts stated iff" if b.iff else "unpredicted"
            res.findings.append(f"{r.radius_name}: {b.name} attained ({kind})")

    for matrix_name, formula_name in ROUTE_PAIRS:
        rep = qr if matrix_name.startswith(("A:", "Q:")) else dr
        checks[f"route_{matrix_name}"] = _rel_close(rep[matrix_name].value, rep[formula_name].value, ROUTE_RTOL)
    checks["indexed_i1_equals_rowsum_upper"] = _rel_close(
        dr["T3.7-upper"].index_detail[0]["value"], dr["T3.2-upper"].value, ROUTE_RTOL)
    if dr["T3.8-upper"].value > dr["T3.2-upper"].value + 1e-8 * max(1.0, dr.radius):
        res.findings.append("T3.8-upper exceeds T3.2-upper")

    spec_q, spec_dq = ctx.spec_signless_laplacian, ctx.spec_dsl
    checks["psd_Q"] = check_psd(ctx.signless_laplacian, spec_q)
    checks["psd_DQ"] = check_psd(ctx.dsl, spec_dq)
    checks["majorization_Q"] = majorization_check(spec_q.eigenvalues, np.diag(ctx.signless_laplacian))
    checks["majorization_DQ"] = majorization_check(spec_dq.eigenvalues, np.diag(ctx.dsl))
    checks["trace_DQ"] = _rel_close(float(spec_dq.eigenvalues.sum()), float(ctx.dd.transmissions.sum()), 1e-8)

    ev = spec_dq.eigenvalues
    tol = 1e-8 * max(1.0, ev[0])
    checks["dsl_radius_at_least_2n_minus_2"] = bool(ev[0] >= 2 * (n - 1) - tol)
    checks["dsl_tail_at_least_n_minus_2"] = bool(np.all(ev[1:] >= (n - 2) - tol))
    second_is_min = abs(ev[1] - (n - 2)) <= tol
    checks["dsl_second_n_minus_2_only_complete"] = (not second_is_min) or is_complete(g)

    agree = True
    fallback = False
    for mat, spec in (
        (ctx.adjacency, ctx.spec_adjacency),
        (ctx.signless_laplacian, spec_q),
        (ctx.distance, ctx.spec_distance),
        (ctx.dsl, spec_dq),
    ):
        pw = power_spectral_radius(mat)
        fallback |= pw.fallback
        lam = float(spec.eigenvalues[0])
        agree &= abs(pw.spectral_radius - lam) <= ORACLE_RTOL * max(1.0, lam)
    checks["oracle_agreement"] = bool(agree)
    if fallback:
        res.findings.append("power iteration fell back to Jacobi")

    if closed_form is not None:
        checks["closed_form"] = _rel_close(dr.radius, closed_form, 1e-8)

    res.timing_ms = (time.monotonic() - start) * 1e3
    return res


def verify_family(spec: FamilySpec) -> VerificationResult:
    try:
        cf = closed_form_dsl(spec)
    except ValueError:
        cf = None
    desc = {"family": spec.kind, "n": spec.n}
    if spec.a is not None:
        desc["a"] = spec.a
    return verify_graph(generate_family(spec), spec.label, desc, cf)


# ---------------------------------------------------------------------------
# Corpora


@dataclass(frozen=True)
class RandomCorpus:
    """``count`` connected G(n, p) graphs.

    A generator seeded with ``seed`` draws, per graph, ``n`` uniformly in
    ``[n_min, n_max]`` and a 64-bit graph seed; ``p`` cycles through
    ``p_values``. Each graph is therefore reproducible on its own from
    ``(n, p, graph_seed)``.
    """

    n_min: int
    n_max: int
    p_values: Sequence[float]
    count: int
    seed: int

    def items(self) -> list[dict]:
        rng = XorShift64Star(self.seed)
        out = []
        for k in range(self.count):
            n = rng.randint(self.n_min, self.n_max)
            gseed = rng.next_u64()
            p = float(self.p_values[k % len(self.p_values)])
            out.append({"random": True, "n": n, "p": p, "seed": gseed})
        return out


@dataclass(frozen=True)
class FamilyCorpus:
    """Every member of the chosen families with ``n_min <= n <= n_max``.

    Complete bipartite graphs use every split ``1 <= a <= n // 2`` unless
    ``balanced_only``.
    """

    kinds: Sequence[str] = FAMILY_KINDS
    n_max: int = 30
    n_min: int = 2
    balanced_only: bool = False

    def items(self) -> list[dict]:
        out = []
        for kind in self.kinds:
            lo = max(self.n_min, 3 if kind == "cycle" else 2)
            for n in range(lo, self.n_max + 1):
                if kind == "complete-bipartite":
                    splits = [n // 2] if self.balanced_only else range(1, n // 2 + 1)
                    if self.balanced_only and n % 2:
                        continue
                    out.extend({"family": kind, "n": n, "a": a} for a in splits)
                else:
                    out.append({"family": kind, "n": n})
        return out


def _verify_item(item: dict) -> VerificationResult:
    if item.get("random"):
        g = random_connected(item["n"], item["p"], item["seed"])
        label = f"G(n={item['n']},p={item['p']},seed={item['seed']})"
        desc = {k: item[k] for k in ("n", "p", "seed")}
        return verify_graph(g, label, desc)
    return verify_family(FamilySpec(item["family"], item["n"], item.get("a")))


@dataclass
class SweepResult:
    results: list[VerificationResult]

    @property
    def summary(self) -> dict:
        failed = [r.label for r in self.results if not r.passed]
        sandwich = [
            r.label for r in self.results
            if any(not ok for k, ok in r.checks.items() if k.startswith("sandwich_"))
        ]
        return {
            "count": len(self.results),
            "passed": len(self.results) - len(failed),
            "failed": len(failed),
            "failures": failed,
            "sandwich_failures": sandwich,
            "findings": sum(len(r.findings) for r in self.results),
            "tightest": {r.label: {rep.radius_name: rep.tightest() for rep in r.reports} for r in self.results},
        }

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)


def sweep(corpora: RandomCorpus | FamilyCorpus | Iterable, workers: int = 1) -> SweepResult:
    """Verify every graph of one or more corpora; output keeps input order."""
    if isinstance(corpora, (RandomCorpus, FamilyCorpus)):
        corpora = [corpora]
    items = [it for c in corpora for it in c.items()]
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_item, items, chunksize=8))
    else:
        results = [_verify_item(it) for it in items]
    for r in results:
        if not r.passed:
            log.warning("%s failed: %s", r.label, r.error or ", ".join(r.failed_checks()))
    return SweepResult(results)


# ---------------------------------------------------------------------------
# Reports

CSV_FIELDS = ("graph", "bound", "value", "side", "radius_name", "radius",
              "equality_predicted", "equality_observed", "pass")


def _g17(x) -> str:
    return "" if x is None else f"{x:.17g}"


def results_to_json(results: Iterable[VerificationResult]) -> str:
    return json.dumps([r.to_dict() for r in results], indent=2) + "\n"


def results_to_csv(results: Iterable[VerificationResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for res in results:
        for rep in res.reports:
            for b in rep.bounds:
                w.writerow([
                    res.label, b.name, _g17(b.value), b.side, rep.radius_name, _g17(rep.radius),
                    b.equality_predicted, b.equality_observed, res.passed,
                ])
    return buf.getvalue()


def write_report(results: Iterable[VerificationResult], fmt: str, path) -> None:
    """Persist results as ``json`` or ``csv``."""
    results = list(results)
    if fmt == "json":
        text = results_to_json(results)
    elif fmt == "csv":
        text = results_to_csv(results)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


_REQUIRED = {"graph", "bounds", "checks", "pass"}
_BOUND_KEYS = {"name", "side", "value", "equality_predicted", "equality_observed"}


def read_report(source) -> list[dict]:
    """Load and validate a JSON report (path or JSON text)."""
    try:
        if isinstance(source, str) and source.lstrip().startswith(("[", "{")):
            data = json.loads(source)
        else:
            with open(source) as fh:
                data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ReportError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ReportError("report must be a JSON array")
    for i, entry in enumerate(data):
        if not isinstance(entry, dict):
            raise ReportError(f"result {i} is not an object")
        missing = _REQUIRED - entry.keys()
        if missing:
            raise ReportError(f"result {i} missing keys {sorted(missing)}")
        for b in entry["bounds"]:
            if not isinstance(b, dict) or _BOUND_KEYS - b.keys():
                raise ReportError(f"result {i} has a malformed bound entry")
    return data


def strip_timing(data):
    """Copy of a parsed report without timing fields."""
    if isinstance(data, list):
        return [strip_timing(x) for x in data]
    if isinstance(data, dict):
        return {k: strip_timing(v) for k, v in data.items() if k not in TIMING_KEYS}
    return data
