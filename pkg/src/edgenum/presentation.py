"""Cut sets, cycle presentations and the minimal-edge search.

A cut set places at most one vertex in each gap of a diagram.  Gap ``g`` of a
component sits between passage ``g`` and passage ``g + 1`` (cyclically); edge
``j`` of a component runs from just after cut ``j - 1`` up to and including
passage ``cuts[j]``, so the first edge of a component is the one that wraps
past position 0.  Edges are numbered globally, component by component.

A cut set is *valid* when no edge passes through both strands of a crossing
and every pair of edges that share crossings has the same edge on top at all
of them.
"""

from __future__ import annotations

import enum
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Union

from .diagram import Diagram, Passage, Role

__all__ = [
    "CutSet",
    "CutSetError",
    "EdgeInterval",
    "Relation",
    "CyclePresentation",
    "ViolationReport",
    "SearchResult",
    "ObstructionReport",
    "PresentationStream",
    "enumerate_cut_sets",
    "count_cut_sets",
    "check_presentation",
    "is_valid",
    "min_presentation",
    "enumerate_presentations",
    "overpass_cut_set",
    "full_cut_set",
    "merge_cut",
    "merge_obstruction",
    "is_descending_rotation",
]


class CutSetError(ValueError):
    pass


@dataclass(frozen=True)
class CutSet:
    """Sorted gap indices per component.

    Cut sets of one diagram are ordered by their flattened gap tuple, with
    gaps numbered component after component (see ``global_key``).
    """

    cuts: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cuts)

    def to_text(self) -> str:
        return ";".join(",".join(str(g) for g in comp) for comp in self.cuts)

    @classmethod
    def from_text(cls, text: str) -> "CutSet":
        comps = []
        for chunk in text.strip().split(";"):
            chunk = chunk.strip()
            if not chunk:
                raise CutSetError(f"empty component in cut text {text!r}")
            try:
                gaps = sorted(int(g) for g in chunk.split(","))
            except ValueError:
                raise CutSetError(f"bad cut text {text!r}") from None
            comps.append(tuple(gaps))
        return cls(tuple(comps))

    def check(self, d: Diagram) -> None:
        """Raise CutSetError unless this cut set is canonical for ``d``."""
        if len(self.cuts) != d.component_count:
            raise CutSetError(f"cut set has {len(self.cuts)} components, diagram has {d.component_count}")
        for ci, (comp, m) in enumerate(zip(self.cuts, d.gap_counts)):
            if not comp:
                raise CutSetError(f"component {ci} has no cut")
            if list(comp) != sorted(set(comp)):
                raise CutSetError(f"component {ci} cuts must be distinct and sorted")
            if comp[0] < 0 or comp[-1] >= m:
                raise CutSetError(f"component {ci} cut out of range 0..{m - 1}")

    def global_key(self, d: Diagram) -> tuple[int, ...]:
        out, base = [], 0
        for comp, m in zip(self.cuts, d.gap_counts):
            out.extend(base + g for g in comp)
            base += m
        return tuple(out)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class EdgeInterval:
    index: int
    component: int
    passages: tuple[Passage, ...]

    @property
    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(p.crossing_id for p in self.passages)

    def label(self) -> str:
        return "{" + ",".join(str(p) for p in self.passages) + "}"


class Relation(enum.Enum):
    FIRST_OVER = "first-over"
    FIRST_UNDER = "first-under"
    NO_CROSSING = "no-crossing"


@dataclass(frozen=True)
class ViolationReport:
    condition: int
    edges: tuple[int, ...]
    crossing: int
    message: str

    valid = False

    def __str__(self) -> str:
        return f"violates condition ({self.condition}): {self.message}"


@dataclass(frozen=True)
class CyclePresentation:
    diagram: Diagram
    cut_set: CutSet
    edges: tuple[EdgeInterval, ...]
    relations: dict = field(compare=False)
    shared: dict = field(compare=False)

    valid = True

    @property
    def n(self) -> int:
        return len(self.edges)

    def relation(self, i: int, j: int) -> Relation:
        if i == j:
            raise ValueError("relation of an edge with itself")
        if i < j:
            return self.relations[i, j]
        r = self.relations[j, i]
        if r is Relation.FIRST_OVER:
            return Relation.FIRST_UNDER
        if r is Relation.FIRST_UNDER:
            return Relation.FIRST_OVER
        return r

    def shared_crossings(self, i: int, j: int) -> tuple[int, ...]:
        return self.shared.get((min(i, j), max(i, j)), ())

    def over_pairs(self) -> list[tuple[int, int]]:
        """Ordered pairs ``(i, j)`` with edge ``i`` over edge ``j``."""
        out = []
        for (i, j), r in sorted(self.relations.items()):
            if r is Relation.FIRST_OVER:
                out.append((i, j))
            elif r is Relation.FIRST_UNDER:
                out.append((j, i))
        return sorted(out)

    def component_edges(self) -> list[list[int]]:
        comps: list[list[int]] = [[] for _ in range(self.diagram.component_count)]
        for e in self.edges:
            comps[e.component].append(e.index)
        return comps

    def successor(self, i: int) -> int:
        comp = self.component_edges()[self.edges[i].component]
        return comp[(comp.index(i) + 1) % len(comp)]

    def table_lines(self) -> list[str]:
        return [f"e{i + 1}>e{j + 1}" for i, j in self.over_pairs()]


@dataclass(frozen=True)
class SearchResult:
    minimal_n: Optional[int]
    witness: Optional[CutSet]
    candidates_examined: int
    valid_count_at_minimal_n: int


class _Layout:
    """Per-diagram lookup tables shared by every cut set check."""

    def __init__(self, d: Diagram):
        self.diagram = d
        self.gap_counts = d.gap_counts
        self.offsets = []
        total = 0
        for m in self.gap_counts:
            self.offsets.append(total)
            total += m
        self.total_gaps = total
        over, under = {}, {}
        for ci, comp in enumerate(d.components):
            for p in comp:
                (over if p.role is Role.OVER else under)[p.crossing_id] = (ci, p.position)
        self.sites = [(x.id, over[x.id], under[x.id]) for x in d.crossings]

    def edge_lookup(self, s: CutSet):
        """Return ``locate(component, position) -> global edge index`` and edge count."""
        bases, total = [], 0
        for comp in s.cuts:
            bases.append(total)
            total += len(comp)

        def locate(ci, pos):
            cuts = s.cuts[ci]
            j = bisect_left(cuts, pos)
            return bases[ci] + (0 if j == len(cuts) else j)

        return locate, total

    def edges(self, s: CutSet) -> tuple[EdgeInterval, ...]:
        out = []
        idx = 0
        for ci, cuts in enumerate(s.cuts):
            comp = self.diagram.components[ci]
            m = len(comp)
            for j, g in enumerate(cuts):
                if m == 0:
                    run = ()
                else:
                    start = (cuts[j - 1] + 1) % m
                    length = (g - cuts[j - 1]) % m or m
                    run = tuple(comp[(start + k) % m] for k in range(length))
                out.append(EdgeInterval(idx, ci, run))
                idx += 1
        return tuple(out)

    def to_cut_set(self, gaps: Iterable[int]) -> CutSet:
        per = [[] for _ in self.gap_counts]
        ci = 0
        for g in gaps:
            while ci + 1 < len(self.offsets) and g >= self.offsets[ci + 1]:
                ci += 1
            per[ci].append(g - self.offsets[ci])
        return CutSet(tuple(tuple(c) for c in per))


def _component_of_gap(layout: _Layout) -> list[int]:
    out = []
    for ci, m in enumerate(layout.gap_counts):
        out.extend([ci] * m)
    return out


def _iter_global(layout: _Layout, n: int) -> Iterator[tuple[int, ...]]:
    """Lexicographic n-subsets of global gaps hitting every component."""
    total = layout.total_gaps
    comp_of = _component_of_gap(layout)
    k = len(layout.gap_counts)
    if n < k or n > total:
        return
    chosen: list[int] = []

    def rec(start: int, covered: int):
        # gaps are picked in increasing order, so components 0..covered-1 hold a cut
        left = n - len(chosen)
        if left == 0:
            if covered == k:
                yield tuple(chosen)
            return
        g = start
        while g <= total - left:
            c = comp_of[g]
            if c > covered:
                break
            after = c + 1 if c == covered else covered
            if k - after > left - 1:
                if c == covered:
                    break
                g = layout.offsets[c + 1] if c + 1 < k else total
                continue
            chosen.append(g)
            yield from rec(g + 1, after)
            chosen.pop()
            g += 1

    yield from rec(0, 0)


def enumerate_cut_sets(d: Diagram, n: int) -> Iterator[CutSet]:
    """Yield every canonical cut set of size ``n`` in lexicographic order.

    The order is that of the sorted global gap tuples, gaps being numbered
    component by component.  Yields nothing when ``n`` is below the
    component count or above the number of gaps.
    """
    layout = _Layout(d)
    for gaps in _iter_global(layout, n):
        yield layout.to_cut_set(gaps)


def count_cut_sets(d: Diagram, n: int) -> int:
    """Number of canonical cut sets of size ``n``, by convolving binomials."""
    from math import comb

    poly = [1]
    for m in d.gap_counts:
        factor = [0] + [comb(m, k) for k in range(1, m + 1)]
        out = [0] * (len(poly) + len(factor) - 1)
        for i, a in enumerate(poly):
            if a:
                for j, b in enumerate(factor):
                    out[i + j] += a * b
        poly = out
    return poly[n] if 0 <= n < len(poly) else 0


def _check(layout: _Layout, s: CutSet) -> Union[CyclePresentation, ViolationReport]:
    locate, n = layout.edge_lookup(s)
    self_hits: dict[int, list[int]] = {}
    direction: dict[tuple[int, int], dict[bool, list[int]]] = {}
    for cid, (oc, op), (uc, up) in layout.sites:
        eo, eu = locate(oc, op), locate(uc, up)
        if eo == eu:
            self_hits.setdefault(eo, []).append(cid)
            continue
        key = (eo, eu) if eo < eu else (eu, eo)
        direction.setdefault(key, {True: [], False: []})[eo < eu].append(cid)
    if self_hits:
        e = min(self_hits)
        cid = min(self_hits[e])
        return ViolationReport(1, (e,), cid, f"edge e{e + 1} crosses itself at crossing {cid}")
    relations, shared = {}, {}
    bad = None
    for key in sorted(direction):
        firsts, seconds = direction[key][True], direction[key][False]
        shared[key] = tuple(sorted(firsts + seconds))
        if firsts and seconds:
            bad = bad or (key, firsts, seconds)
            continue
        relations[key] = Relation.FIRST_OVER if firsts else Relation.FIRST_UNDER
    if bad is not None:
        (i, j), firsts, seconds = bad
        lead = min(firsts + seconds)
        odd = min(seconds) if lead in firsts else min(firsts)
        return ViolationReport(
            2, (i, j), odd,
            f"e{i + 1} is over e{j + 1} at crossings {sorted(firsts)} "
            f"but under it at {sorted(seconds)}",
        )
    for i in range(n):
        for j in range(i + 1, n):
            relations.setdefault((i, j), Relation.NO_CROSSING)
    return CyclePresentation(layout.diagram, s, layout.edges(s), relations, shared)


def check_presentation(d: Diagram, s: CutSet) -> Union[CyclePresentation, ViolationReport]:
    """Validate ``s`` on ``d``.

    Returns the presentation with its pairwise relation table, or a report
    naming the first failure: self-crossing edges are checked first (lowest
    edge index), then inconsistent pairs in lexicographic order.
    """
    s.check(d)
    return _check(_Layout(d), s)


def is_valid(d: Diagram, s: CutSet) -> bool:
    return check_presentation(d, s).valid


Checker = Callable[[Diagram, CutSet], Union[CyclePresentation, ViolationReport]]


def overpass_cut_set(d: Diagram) -> CutSet:
    """Cut at every gap where the passage role changes.

    A component that never changes role (or has no crossings) is cut once,
    at gap 0.
    """
    per = []
    for comp in d.components:
        m = len(comp)
        gaps = tuple(g for g in range(m) if comp[g].role is not comp[(g + 1) % m].role)
        per.append(gaps or (0,))
    return CutSet(tuple(per))


def full_cut_set(d: Diagram) -> CutSet:
    return CutSet(tuple(tuple(range(m)) for m in d.gap_counts))


def min_presentation(d: Diagram, n_max: Optional[int] = None, checker: Optional[Checker] = None) -> SearchResult:
    """Smallest ``n`` admitting a valid cut set on this diagram.

    This is the diagram-level minimum ``e(D)``, an upper bound for the knot's
    edge number.  The overpass construction always validates, so the search
    never needs to go past its size.
    """
    layout = _Layout(d)
    check = (lambda s: _check(layout, s)) if checker is None else (lambda s: checker(d, s))
    upper = overpass_cut_set(d).n
    if n_max is not None:
        upper = min(upper, n_max)
    examined = 0
    for n in range(d.component_count, upper + 1):
        witness, valid = None, 0
        for gaps in _iter_global(layout, n):
            examined += 1
            s = layout.to_cut_set(gaps)
            if check(s).valid:
                valid += 1
                witness = witness or s
        if witness is not None:
            return SearchResult(n, witness, examined, valid)
    return SearchResult(None, None, examined, 0)


class PresentationStream:
    """Iterable of valid presentations over a range of ``n``.

    ``truncated`` becomes true once iteration stops early because ``limit``
    presentations were produced or the requested range ran past the number
    of gaps.
    """

    def __init__(self, d: Diagram, n_values: Iterable[int], limit: Optional[int] = None,
                 checker: Optional[Checker] = None):
        self.diagram = d
        self.layout = _Layout(d)
        requested = list(n_values)
        self.n_values = [n for n in requested if n <= self.layout.total_gaps]
        self.range_clipped = len(self.n_values) != len(requested)
        self.limit = limit
        self.checker = checker
        self.truncated = False
        self.examined = 0

    def __iter__(self) -> Iterator[CyclePresentation]:
        produced = 0
        for n in self.n_values:
            for gaps in _iter_global(self.layout, n):
                self.examined += 1
                s = self.layout.to_cut_set(gaps)
                p = _check(self.layout, s) if self.checker is None else self.checker(self.diagram, s)
                if not p.valid:
                    continue
                if self.limit is not None and produced >= self.limit:
                    self.truncated = True
                    return
                produced += 1
                yield p


def enumerate_presentations(d: Diagram, n_range, limit: Optional[int] = None,
                            checker: Optional[Checker] = None) -> PresentationStream:
    """All valid presentations with ``n`` in ``n_range`` (an int or iterable)."""
    if isinstance(n_range, int):
        n_range = [n_range]
    return PresentationStream(d, n_range, limit, checker)


def merge_cut(s: CutSet, component: int, cut: int) -> CutSet:
    comp = s.cuts[component]
    if cut not in comp:
        raise CutSetError(f"component {component} has no cut at gap {cut}")
    if len(comp) == 1:
        raise CutSetError(f"cannot remove the last cut of component {component}")
    cuts = list(s.cuts)
    cuts[component] = tuple(g for g in comp if g != cut)
    return CutSet(tuple(cuts))


@dataclass(frozen=True)
class ObstructionReport:
    edge: int
    next_edge: int
    adjacent: bool
    forward_path_via: tuple[int, ...]   # k with e_i -> e_k -> e_{i+1}
    backward_path_via: tuple[int, ...]  # k with e_{i+1} -> e_k -> e_i
    union_self_crossing: bool
    inconsistent_partners: tuple[int, ...]
    both_sources: bool
    both_sinks: bool
    merged: CutSet

    @property
    def mergeable(self) -> bool:
        return not self.union_self_crossing and not self.inconsistent_partners

    @property
    def verdict(self) -> str:
        return "mergeable-on-this-diagram" if self.mergeable else "not-mergeable"


def merge_obstruction(p: CyclePresentation, i: int) -> ObstructionReport:
    """Inspect whether edge ``i`` and its successor can be fused into one edge.

    Two directed 2-paths are reported separately (``i -> k -> i+1`` and the
    reverse); either one makes the fused edge inconsistent with ``k``.
    """
    from .digraph import build, sources_sinks

    if not 0 <= i < p.n:
        raise IndexError(f"edge index {i} out of range 0..{p.n - 1}")
    edge = p.edges[i]
    comp_edges = p.component_edges()[edge.component]
    if len(comp_edges) < 2:
        raise ValueError(f"edge e{i + 1} has no distinct successor on its component")
    j = p.successor(i)
    local = comp_edges.index(i)
    merged = merge_cut(p.cut_set, edge.component, p.cut_set.cuts[edge.component][local])

    union = edge.crossing_ids + p.edges[j].crossing_ids
    union_self = len(set(union)) != len(union)
    forward, backward, inconsistent = [], [], []
    for k in range(p.n):
        if k in (i, j):
            continue
        ri, rj = p.relation(i, k), p.relation(j, k)
        if ri is Relation.FIRST_OVER and rj is Relation.FIRST_UNDER:
            forward.append(k)
        elif ri is Relation.FIRST_UNDER and rj is Relation.FIRST_OVER:
            backward.append(k)
    inconsistent = sorted(forward + backward)

    g = build(p)
    arc = (i, j) if (i, j) in g.arcs else (j, i) if (j, i) in g.arcs else None
    sources, sinks = sources_sinks(g, without_arc=arc)
    return ObstructionReport(
        edge=i,
        next_edge=j,
        adjacent=p.relation(i, j) is not Relation.NO_CROSSING,
        forward_path_via=tuple(forward),
        backward_path_via=tuple(backward),
        union_self_crossing=union_self,
        inconsistent_partners=tuple(inconsistent),
        both_sources=i in sources and j in sources,
        both_sinks=i in sinks and j in sinks,
        merged=merged,
    )


def is_descending_rotation(p: CyclePresentation) -> Optional[int]:
    """Starting edge ``r`` from which every edge is over all later edges.

    Such a rotation makes the diagram descending from the start of ``e_r``,
    hence a diagram of the unknot.  Returns ``None`` when no rotation works.
    """
    if p.diagram.component_count != 1:
        raise ValueError("descending rotations are only defined for knots")
    arcs = p.over_pairs()
    n = p.n
    for r in range(n):
        if all((u - r) % n < (v - r) % n for u, v in arcs):
            return r
    return None
