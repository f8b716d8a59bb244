"""Batch analysis of a diagram census and executable property suites.

Every claim checked here is only asserted where its hypotheses can be
certified on the diagram at hand (nontriviality through the Jones
polynomial, minimality through exhaustive search).  Other instances are
reported with status ``skip``.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Callable, Iterable, Optional

from .diagram import Diagram, DiagramError, parse_diagram
from .digraph import build, classify, describe, to_dot
from .invariants import (
    BRACKET_CAP,
    Certificate,
    crossing_number_certificate,
    edge_number_bounds,
    is_alternating,
    is_reduced,
    jones,
    nontriviality_certificate,
    overpass_count,
)
from .presentation import (
    CutSet,
    check_presentation,
    enumerate_presentations,
    is_descending_rotation,
    merge_obstruction,
    min_presentation,
    overpass_cut_set,
)

__all__ = [
    "CensusError",
    "CensusRecord",
    "AnalysisRow",
    "ScanResult",
    "CSV_COLUMNS",
    "CENSUS_ENV",
    "default_census_path",
    "load_census",
    "analyze",
    "run_census",
    "rows_to_csv",
    "scan_conjecture",
    "verify_propositions",
]

CENSUS_ENV = "EDGENUM_CENSUS"
MAX_CROSSINGS = 12

CSV_COLUMNS = [
    "name", "c", "alternating", "reduced", "overpass_count", "e_lower", "e_lower_reason",
    "e_upper", "e_upper_witness", "digraph_class_min_n", "scan_universal", "scan_minimal", "status",
]


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusRecord:
    name: str
    pd: str
    claimed_crossing_number: Optional[int] = None
    notes: str = ""

    def diagram(self) -> Diagram:
        return parse_diagram(self.pd)


def default_census_path() -> str:
    env = os.environ.get(CENSUS_ENV)
    if env:
        return env
    return str(resources.files("edgenum") / "data" / "census.json")


def _validate(index: int, r: CensusRecord) -> None:
    try:
        d = r.diagram()
    except DiagramError as exc:
        raise CensusError(f"record {index} ({r.name}): {exc}") from exc
    claim = r.claimed_crossing_number
    if claim is None or not d.is_knot:
        return
    cert = crossing_number_certificate(d)
    if cert is not None and cert != claim:
        raise CensusError(
            f"record {index} ({r.name}): claimed crossing number {claim} "
            f"but the reduced alternating diagram certifies {cert}"
        )
    if claim > 0 and d.has_planar_data and d.crossing_count <= BRACKET_CAP:
        if nontriviality_certificate(d) is not Certificate.NONTRIVIAL_BY_JONES:
            raise CensusError(f"record {index} ({r.name}): claimed nontrivial but Jones polynomial is 1")


def load_census(path=None) -> list[CensusRecord]:
    """Read and validate a census JSON file (defaults to the bundled census)."""
    path = path or default_census_path()
    with open(path) as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise CensusError("census file must hold a JSON array")
    records = []
    for i, item in enumerate(raw):
        try:
            r = CensusRecord(
                name=str(item["name"]),
                pd=str(item["pd"]),
                claimed_crossing_number=item.get("crossing_number"),
                notes=str(item.get("notes", "")),
            )
        except (KeyError, TypeError) as exc:
            raise CensusError(f"record {i}: missing field {exc}") from exc
        _validate(i, r)
        records.append(r)
    return records


@dataclass
class ScanResult:
    n_min: int
    n_max: int
    total_valid: int
    cyclic: int
    acyclic: int
    acyclic_witnesses: list = field(default_factory=list)
    witnesses_capped: bool = False
    truncated: bool = False
    minimal_n: Optional[int] = None
    minimal_all_cyclic: Optional[bool] = None
    counts_by_n: dict = field(default_factory=dict)
    hypothesis: str = "unchecked"

    @property
    def universal(self) -> str:
        if self.hypothesis != "nontrivial":
            return "vacuous"
        verdict = "fails" if self.acyclic else "holds"
        return verdict + (" (truncated)" if self.truncated and not self.acyclic else "")

    @property
    def minimal(self) -> str:
        if self.hypothesis != "nontrivial":
            return "vacuous"
        if self.minimal_all_cyclic is None:
            return "not reached"
        return "all cyclic" if self.minimal_all_cyclic else "some acyclic"

    def to_json(self) -> dict:
        out = asdict(self)
        out["counts_by_n"] = {str(k): v for k, v in sorted(self.counts_by_n.items())}
        out["universal"] = self.universal
        out["minimal"] = self.minimal
        return out


def _hypothesis(d: Diagram, cap: int) -> str:
    if d.component_count != 1:
        return "not a knot"
    try:
        cert = nontriviality_certificate(d, cap)
    except DiagramError:
        return "unknown"
    return "nontrivial" if cert is Certificate.NONTRIVIAL_BY_JONES else "unknown"


def scan_conjecture(d: Diagram, n_max: Optional[int] = None, limit: Optional[int] = None,
                    max_witnesses: int = 5, cap: int = BRACKET_CAP, checker=None) -> ScanResult:
    """Enumerate every valid presentation with ``n <= n_max`` and test for directed cycles.

    Both readings are reported: the universal one (an acyclic presentation
    at any ``n`` is a witness against it) and the minimal one (only the
    diagram-minimal ``n`` is inspected).  ``n_max`` defaults to the number
    of gaps; anything smaller marks the scan as truncated.
    """
    total_gaps = sum(d.gap_counts)
    full = n_max is None or n_max >= total_gaps
    n_hi = total_gaps if n_max is None else min(n_max, total_gaps)
    n_lo = d.component_count
    stream = enumerate_presentations(d, range(n_lo, n_hi + 1), limit=limit, checker=checker)
    res = ScanResult(n_lo, n_hi, 0, 0, 0, hypothesis=_hypothesis(d, cap))
    for p in stream:
        res.total_valid += 1
        res.counts_by_n[p.n] = res.counts_by_n.get(p.n, 0) + 1
        if res.minimal_n is None:
            res.minimal_n = p.n
            res.minimal_all_cyclic = True
        g = build(p)
        cyclic = classify(g).has_directed_cycle
        if cyclic:
            res.cyclic += 1
        else:
            res.acyclic += 1
            if p.n == res.minimal_n:
                res.minimal_all_cyclic = False
            if len(res.acyclic_witnesses) < max_witnesses:
                res.acyclic_witnesses.append({"n": p.n, "cuts": p.cut_set.to_text(), "dot": to_dot(g)})
            else:
                res.witnesses_capped = True
    res.truncated = stream.truncated or not full
    return res


@dataclass
class AnalysisRow:
    name: str
    c: Optional[int] = None
    components: Optional[int] = None
    alternating: Optional[bool] = None
    reduced: Optional[bool] = None
    overpass_count: Optional[int] = None
    e_lower: Optional[int] = None
    e_lower_reason: str = ""
    e_upper: Optional[int] = None
    e_upper_witness: str = ""
    digraph_class_min_n: str = ""
    valid_counts_by_n: dict = field(default_factory=dict)
    three_cut_valid: Optional[int] = None
    scan_universal: str = ""
    scan_minimal: str = ""
    status: str = "ok"

    def csv_row(self) -> list[str]:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)
        return [fmt(getattr(self, col)) for col in CSV_COLUMNS]

    def to_json(self) -> dict:
        out = asdict(self)
        out["valid_counts_by_n"] = {str(k): v for k, v in sorted(self.valid_counts_by_n.items())}
        return out


@dataclass(frozen=True)
class AnalysisOptions:
    scan_n_max: Optional[int] = None
    max_crossings: int = MAX_CROSSINGS
    bracket_cap: int = BRACKET_CAP


def analyze(r: CensusRecord, opts: AnalysisOptions = AnalysisOptions()) -> AnalysisRow:
    """Bounds, digraph class and scan verdicts for one record.

    Errors are caught and recorded in ``status`` so a batch never aborts.
    """
    row = AnalysisRow(r.name)
    try:
        d = r.diagram()
        if d.crossing_count > opts.max_crossings:
            raise CensusError(f"{d.crossing_count} crossings exceeds the census limit {opts.max_crossings}")
        row.c = d.crossing_count
        row.components = d.component_count
        row.alternating = is_alternating(d)
        row.reduced = is_reduced(d) if d.is_knot else None
        row.overpass_count = overpass_count(d)
        search = min_presentation(d)
        bounds = edge_number_bounds(d, opts.bracket_cap, search=search)
        row.e_lower, row.e_lower_reason = bounds.e_lower, bounds.e_lower_reason
        row.e_upper, row.e_upper_witness = bounds.e_upper, bounds.e_upper_witness.to_text()
        witness = check_presentation(d, bounds.e_upper_witness)
        row.digraph_class_min_n = describe(classify(build(witness)), witness.n)
        if d.is_knot:
            scan = scan_conjecture(d, opts.scan_n_max, cap=opts.bracket_cap)
            row.valid_counts_by_n = dict(scan.counts_by_n)
            row.scan_universal, row.scan_minimal = scan.universal, scan.minimal
        else:
            n_hi = sum(d.gap_counts) if opts.scan_n_max is None else opts.scan_n_max
            for p in enumerate_presentations(d, range(d.component_count, n_hi + 1)):
                row.valid_counts_by_n[p.n] = row.valid_counts_by_n.get(p.n, 0) + 1
            row.scan_universal = row.scan_minimal = "n/a"
        row.three_cut_valid = row.valid_counts_by_n.get(3, 0)
    except (DiagramError, CensusError, ValueError) as exc:
        row.status = f"error: {exc}"
    return row


def _analyze_pair(args):
    return analyze(*args)


def run_census(records: Iterable[CensusRecord], opts: AnalysisOptions = AnalysisOptions(),
               jobs: int = 1) -> list[AnalysisRow]:
    """Analyze every record; output order follows input order for any ``jobs``."""
    records = list(records)
    if jobs <= 1 or len(records) <= 1:
        return [analyze(r, opts) for r in records]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_analyze_pair, [(r, opts) for r in records]))


def rows_to_csv(rows: Iterable[AnalysisRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_row())
    return buf.getvalue()


# ---------------------------------------------------------------------------
# property suite


def _result(check: str, diagram: str, status: str, detail: str = "", witness=None) -> dict:
    out = {"check": check, "diagram": diagram, "status": status, "detail": detail}
    if witness is not None:
        out["witness"] = witness
    return out


def _blob(p) -> dict:
    g = build(p)
    return {"cuts": p.cut_set.to_text(), "n": p.n, "arcs": [list(a) for a in g.arcs], "dot": to_dot(g)}


def _suite_for(r: CensusRecord, checker, merge_depth: int, cap: int) -> list[dict]:
    out: list[dict] = []
    name = r.name
    d = r.diagram()
    is_knot = d.is_knot
    hyp = _hypothesis(d, cap)
    v = None
    if is_knot and d.has_planar_data and d.crossing_count <= cap:
        v = jones(d, cap)
    presentations = list(enumerate_presentations(d, range(d.component_count, sum(d.gap_counts) + 1),
                                                  checker=checker))
    by_n: dict[int, list] = {}
    for p in presentations:
        by_n.setdefault(p.n, []).append(p)
    n_star = min(by_n) if by_n else None

    # nontrivial knots need at least three edges; one edge means no crossings
    if is_knot:
        problems = []
        if d.crossing_count and by_n.get(1):
            problems.append("a single edge validates on a diagram with crossings")
        if hyp == "nontrivial" and n_star is not None and n_star < 3:
            problems.append(f"Jones certifies nontriviality but a {n_star}-edge presentation validates")
        if n_star is not None and n_star <= 2 and v is not None and v != 1:
            problems.append("small presentation on a diagram whose Jones polynomial is not 1")
        if d.crossing_count == 0 and n_star != 1:
            problems.append("crossingless knot without a one-edge presentation")
        wit = _blob(by_n[n_star][0]) if problems and n_star else None
        out.append(_result("nontrivial_needs_three_edges", name, "fail" if problems else "pass",
                           "; ".join(problems) or f"e(D)={n_star}", wit))

    # three-edge presentations of nontrivial knots form a directed 3-cycle,
    # and are then connected and not a path
    threes = by_n.get(3, [])
    certified = is_knot and hyp == "nontrivial" and bool(threes)
    if not is_knot:
        skip_reason = "not a knot"
    elif hyp != "nontrivial":
        skip_reason = "nontriviality not certified"
    else:
        skip_reason = "no valid 3-edge presentation on this diagram"
    for check, predicate in (
        ("three_edge_digraph_is_cycle", lambda c: c.is_directed_n_cycle),
        ("three_edge_digraph_connected_not_path", lambda c: c.connected and not c.is_path),
        ("three_edge_successive_distance", lambda c: (c.max_successive_distance or 99) <= 2),
    ):
        if not certified:
            out.append(_result(check, name, "skip", skip_reason))
            continue
        bad = [p for p in threes if not predicate(classify(build(p)))]
        out.append(_result(check, name, "fail" if bad else "pass",
                           f"{len(threes)} presentations, {len(bad)} exceptions",
                           _blob(bad[0]) if bad else None))

    # at the diagram-minimal n every successive pair is adjacent or joined by a 2-path
    if is_knot and n_star is not None and n_star >= 2:
        bad = []
        for p in by_n[n_star]:
            cls = classify(build(p))
            if not cls.connected or cls.max_successive_distance is None or cls.max_successive_distance > 2:
                bad.append(p)
        out.append(_result("diagram_minimal_connected_distance", name, "fail" if bad else "pass",
                           f"n={n_star}, {len(by_n[n_star])} presentations", _blob(bad[0]) if bad else None))
    else:
        out.append(_result("diagram_minimal_connected_distance", name, "skip", "no successive pairs"))

    # overpass construction bounds the edge number by twice the overpass count
    s = overpass_cut_set(d)
    p = check_presentation(d, s)
    op = overpass_count(d)
    expected = sum(1 if len({q.role for q in comp}) < 2 else 0 for comp in d.components)
    expected += 2 * (op - expected)
    problems = []
    if not p.valid:
        problems.append(f"overpass cut set invalid: {p}")
    else:
        if s.n != expected:
            problems.append(f"overpass cut set has {s.n} cuts, expected {expected}")
        if classify(build(p)).has_directed_cycle:
            problems.append("overpass digraph has a directed cycle")
    if n_star is not None and n_star > 2 * op:
        problems.append(f"e(D)={n_star} exceeds 2*overpass={2 * op}")
    out.append(_result("overpass_bound", name, "fail" if problems else "pass",
                       "; ".join(problems) or f"n={s.n}, overpass={op}"))

    # a reported merge must validate; at the minimal n nothing may merge
    failures, merges, minimal_merges = [], 0, []
    if n_star is not None:
        for n in range(n_star, min(n_star + merge_depth, max(by_n)) + 1):
            for pres in by_n.get(n, []):
                for i in range(pres.n):
                    if len(pres.component_edges()[pres.edges[i].component]) < 2:
                        continue
                    rep = merge_obstruction(pres, i)
                    if not rep.mergeable:
                        continue
                    merges += 1
                    if not check_presentation(d, rep.merged).valid:
                        failures.append((pres, i))
                    if n == n_star:
                        minimal_merges.append((pres, i))
    out.append(_result("merge_soundness", name, "fail" if failures else "pass",
                       f"{merges} mergeable pairs checked",
                       {"presentation": _blob(failures[0][0]), "edge": failures[0][1]} if failures else None))
    out.append(_result("minimal_presentations_unmergeable", name, "fail" if minimal_merges else "pass",
                       f"n={n_star}",
                       {"presentation": _blob(minimal_merges[0][0]), "edge": minimal_merges[0][1]}
                       if minimal_merges else None))

    # a descending rotation forces the unknot
    if is_knot and v is not None:
        found = [q for q in presentations if is_descending_rotation(q) is not None]
        bad = found if v != 1 else []
        out.append(_result("descending_rotation_is_trivial", name, "fail" if bad else "pass",
                           f"{len(found)} descending presentations", _blob(bad[0]) if bad else None))
    else:
        out.append(_result("descending_rotation_is_trivial", name, "skip", "no Jones value"))
    return out


def _suite_task(args):
    r, checker, depth, cap = args
    try:
        return _suite_for(r, checker, depth, cap)
    except (DiagramError, ValueError) as exc:
        return [_result("analysis", r.name, "fail", f"error: {exc}")]


def verify_propositions(census: Iterable[CensusRecord], checker: Optional[Callable] = None,
                        merge_depth: int = 2, cap: int = BRACKET_CAP, jobs: int = 1) -> dict:
    """Run every property check over the census.

    ``checker`` replaces ``check_presentation`` during enumeration (for fault
    injection); re-validation of merged cut sets always uses the real one.
    The suite passes iff no check reports ``fail``.
    """
    tasks = [(r, checker, merge_depth, cap) for r in census]
    if jobs > 1 and checker is None:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_suite_task, tasks))
    else:
        chunks = [_suite_task(t) for t in tasks]
    checks = [c for chunk in chunks for c in chunk]
    failures = sum(c["status"] == "fail" for c in checks)
    return {
        "passed": failures == 0,
        "failures": failures,
        "assertable": sum(c["status"] != "skip" for c in checks),
        "checks": checks,
    }
