"""Knot and link diagrams as cyclic sequences of crossing passages.

Two input encodings are understood:

* PD codes, ``X[a,b,c,d] X[...] ... unknot(k)``.  Each quadruple is listed
  counterclockwise starting from the incoming under-strand, so the under
  strand runs ``a -> c``.  The over strand runs ``b -> d`` when ``d``
  succeeds ``b`` along its component, otherwise ``d -> b``.  A crossing is
  positive when the over strand runs ``d -> b``.
* Extended Gauss codes, ``O1+U2+O3+U1+O2+U3+`` with components separated by
  ``;``.  These carry no planar data, so the bracket is unavailable for them.

Arc labels are 1-based, positions and gap indices 0-based.  Passage ``k`` of
a component sits at the head of arc ``lo + k - 1`` (cyclically), where ``lo``
is the smallest label on the component; hence gap ``k`` (between passage
``k`` and ``k + 1``) is the interior of arc ``lo + k``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Optional

__all__ = [
    "DiagramError",
    "Role",
    "Crossing",
    "Passage",
    "Diagram",
    "parse_pd",
    "parse_gauss",
    "parse_diagram",
    "mirror",
    "writhe",
]


class DiagramError(ValueError):
    """Raised for malformed or inconsistent diagram input."""


class Role(enum.Enum):
    OVER = "O"
    UNDER = "U"

    def flip(self) -> "Role":
        return Role.UNDER if self is Role.OVER else Role.OVER


@dataclass(frozen=True)
class Crossing:
    id: int
    pd_labels: Optional[tuple[int, int, int, int]] = None
    sign: Optional[int] = None


@dataclass(frozen=True)
class Passage:
    crossing_id: int
    role: Role
    component: int
    position: int

    def __str__(self) -> str:
        return f"{self.role.value}{self.crossing_id}"


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[Passage, ...], ...]
    crossingless_components: int = 0
    source: str = "pd"
    _by_id: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {x.id: x for x in self.crossings})
        _check_passages(self)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def is_knot(self) -> bool:
        return self.component_count == 1

    @property
    def has_planar_data(self) -> bool:
        return self.source == "pd"

    @property
    def gap_counts(self) -> tuple[int, ...]:
        """Number of gaps per component; a crossingless component has one."""
        return tuple(max(len(c), 1) for c in self.components)

    def crossing(self, crossing_id: int) -> Crossing:
        return self._by_id[crossing_id]

    def role_string(self, component: int = 0) -> str:
        return "".join(p.role.value for p in self.components[component])

    def to_pd(self) -> str:
        if not self.has_planar_data:
            raise DiagramError("diagram has no PD data (Gauss-sourced)")
        tokens = ["X[%d,%d,%d,%d]" % x.pd_labels for x in self.crossings]
        if self.crossingless_components:
            tokens.append(f"unknot({self.crossingless_components})")
        return " ".join(tokens)

    def to_gauss(self) -> str:
        parts = []
        for comp in self.components:
            tokens = []
            for p in comp:
                s = self.crossing(p.crossing_id).sign
                tail = "" if s is None else ("+" if s > 0 else "-")
                tokens.append(f"{p.role.value}{p.crossing_id}{tail}")
            parts.append("".join(tokens))
        return ";".join(parts)

    def __str__(self) -> str:
        return self.to_pd() if self.has_planar_data else self.to_gauss()


def _check_passages(d: Diagram) -> None:
    seen: dict[int, set] = {x.id: set() for x in d.crossings}
    crossing_comps = [c for c in d.components if c]
    if len(d.components) - len(crossing_comps) != d.crossingless_components:
        raise DiagramError("crossingless component count does not match empty components")
    for ci, comp in enumerate(d.components):
        for pos, p in enumerate(comp):
            if p.component != ci or p.position != pos:
                raise DiagramError(f"passage {p} has inconsistent position data")
            if p.crossing_id not in seen:
                raise DiagramError(f"passage refers to unknown crossing {p.crossing_id}")
            if p.role in seen[p.crossing_id]:
                raise DiagramError(f"crossing {p.crossing_id} has two {p.role.name} passages")
            seen[p.crossing_id].add(p.role)
    for cid, roles in seen.items():
        if len(roles) != 2:
            raise DiagramError(f"crossing {cid} is missing a passage")


_PD_TOKEN = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")
_UNKNOT_TOKEN = re.compile(r"unknot\(\s*(\d+)\s*\)")


def _tokenize_pd(text: str) -> tuple[list[tuple[int, int, int, int]], int]:
    quads, unknots = [], 0
    pos = 0
    text = text.strip()
    sep = re.compile(r"[\s,]*")
    while pos < len(text):
        pos = sep.match(text, pos).end()
        if pos >= len(text):
            break
        m = _PD_TOKEN.match(text, pos)
        if m:
            quads.append(tuple(int(g) for g in m.groups()))
            pos = m.end()
            continue
        m = _UNKNOT_TOKEN.match(text, pos)
        if m:
            unknots += int(m.group(1))
            pos = m.end()
            continue
        raise DiagramError(f"unrecognised PD token at offset {pos}: {text[pos:pos + 12]!r}")
    return quads, unknots


def parse_pd(text: str) -> Diagram:
    """Parse a PD code, e.g. ``"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"``."""
    quads, unknots = _tokenize_pd(text)
    if not quads and not unknots:
        raise DiagramError("empty PD code (use unknot(k) for crossingless diagrams)")
    if not quads:
        return Diagram((), tuple(() for _ in range(unknots)), unknots, "pd")

    n_arcs = 2 * len(quads)
    counts: dict[int, int] = {}
    for q in quads:
        for label in q:
            if not 1 <= label <= n_arcs:
                raise DiagramError(f"arc label {label} out of range 1..{n_arcs}")
            counts[label] = counts.get(label, 0) + 1
    bad = sorted(lab for lab in range(1, n_arcs + 1) if counts.get(lab, 0) != 2)
    if bad:
        raise DiagramError(f"arc label {bad[0]} used {counts.get(bad[0], 0)} times (expected 2)")

    # components as label sets: a~c and b~d are the same strand
    parent = list(range(n_arcs + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d in quads:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    groups: dict[int, list[int]] = {}
    for lab in range(1, n_arcs + 1):
        groups.setdefault(find(lab), []).append(lab)
    ranges = sorted((min(g), max(g)) for g in groups.values())
    for lo, hi in ranges:
        if hi - lo + 1 != len(groups[find(lo)]):
            raise DiagramError(f"succession inconsistency: component labels {lo}..{hi} are not contiguous")
    comp_of = {}
    for ci, (lo, hi) in enumerate(ranges):
        for lab in range(lo, hi + 1):
            comp_of[lab] = ci

    def succ(lab):
        lo, hi = ranges[comp_of[lab]]
        return lo if lab == hi else lab + 1

    # head[label] = (crossing index, role); tail[label] likewise
    head: dict[int, tuple[int, Role]] = {}
    tail: dict[int, tuple[int, Role]] = {}
    def attach(table, label, value, what):
        if label in table:
            raise DiagramError(f"succession inconsistency: arc {label} has two {what}s")
        table[label] = value

    # a 2-arc component succeeds both ways round; its over strand is oriented
    # in a second pass so that every arc keeps exactly one head and one tail
    over_dir: dict[int, tuple[int, int, int]] = {}
    ties = []
    for i, (a, b, c, d) in enumerate(quads):
        if succ(a) != c:
            raise DiagramError(f"succession inconsistency at X[{a},{b},{c},{d}]: under strand {a}->{c}")
        attach(head, a, (i, Role.UNDER), "head")
        attach(tail, c, (i, Role.UNDER), "tail")
        fwd, back = succ(b) == d, succ(d) == b
        if fwd and back:
            ties.append(i)
            continue
        if fwd:
            over_dir[i] = (b, d, -1)
        elif back:
            over_dir[i] = (d, b, +1)
        else:
            raise DiagramError(f"succession inconsistency at X[{a},{b},{c},{d}]: over strand {b},{d}")
        attach(head, over_dir[i][0], (i, Role.OVER), "head")
        attach(tail, over_dir[i][1], (i, Role.OVER), "tail")
    for i in ties:
        _, b, _, d = quads[i]
        if b in head or d in tail:
            over_dir[i] = (d, b, +1)
        else:
            over_dir[i] = (b, d, -1)
        attach(head, over_dir[i][0], (i, Role.OVER), "head")
        attach(tail, over_dir[i][1], (i, Role.OVER), "tail")
    signs = [over_dir[i][2] for i in range(len(quads))]

    crossings = tuple(Crossing(i + 1, q, s) for i, (q, s) in enumerate(zip(quads, signs)))
    components = []
    for ci, (lo, hi) in enumerate(ranges):
        comp = []
        labels = [hi] + list(range(lo, hi))
        for pos, lab in enumerate(labels):
            xi, role = head[lab]
            comp.append(Passage(xi + 1, role, ci, pos))
        components.append(tuple(comp))
    components.extend(() for _ in range(unknots))
    return Diagram(crossings, tuple(components), unknots, "pd")


_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-]?)")


def parse_gauss(text: str) -> Diagram:
    """Parse an extended Gauss code such as ``"O1+U2+O3+U1+O2+U3+"``.

    Components are separated by ``;``; an empty component is crossingless.
    Signs are optional but, when present, must agree between the two
    occurrences of a crossing.
    """
    if not text.strip():
        raise DiagramError("empty Gauss code")
    raw_components = text.strip().split(";")
    occurrences: dict[int, dict[Role, Optional[int]]] = {}
    parsed: list[list[tuple[int, Role]]] = []
    for chunk in raw_components:
        chunk = re.sub(r"[\s,]+", "", chunk)
        pos, comp = 0, []
        while pos < len(chunk):
            m = _GAUSS_TOKEN.match(chunk, pos)
            if not m:
                raise DiagramError(f"unknown Gauss token at {chunk[pos:pos + 8]!r}")
            role = Role(m.group(1))
            label = int(m.group(2))
            sign = {"+": 1, "-": -1, "": None}[m.group(3)]
            entry = occurrences.setdefault(label, {})
            if role in entry:
                raise DiagramError(f"crossing {label} has two {role.value} occurrences")
            entry[role] = sign
            comp.append((label, role))
            pos = m.end()
        parsed.append(comp)
    signs = {}
    for label, entry in occurrences.items():
        if len(entry) != 2:
            raise DiagramError(f"crossing {label} appears only once")
        if entry[Role.OVER] != entry[Role.UNDER]:
            raise DiagramError(f"mismatched signs at crossing {label}")
        signs[label] = entry[Role.OVER]
    crossings = tuple(Crossing(label, None, signs[label]) for label in sorted(occurrences))
    components = tuple(
        tuple(Passage(label, role, ci, pos) for pos, (label, role) in enumerate(comp))
        for ci, comp in enumerate(parsed)
    )
    return Diagram(crossings, components, sum(1 for c in parsed if not c), "gauss")


def parse_diagram(text: str) -> Diagram:
    """Dispatch on the text: PD if it contains ``X[`` or ``unknot``, else Gauss."""
    if "X[" in text or "unknot" in text:
        return parse_pd(text)
    return parse_gauss(text)


def _mirror_quad(x: Crossing) -> Optional[tuple[int, int, int, int]]:
    if x.pd_labels is None:
        return None
    a, b, c, d = x.pd_labels
    # new quadruple starts at the incoming end of the old over strand
    return (b, c, d, a) if x.sign == -1 else (d, a, b, c)


def mirror(d: Diagram) -> Diagram:
    """Swap every over/under role and negate every crossing sign."""
    crossings = tuple(
        Crossing(x.id, _mirror_quad(x), None if x.sign is None else -x.sign) for x in d.crossings
    )
    components = tuple(
        tuple(Passage(p.crossing_id, p.role.flip(), p.component, p.position) for p in comp)
        for comp in d.components
    )
    return Diagram(crossings, components, d.crossingless_components, d.source)


def writhe(d: Diagram) -> int:
    if any(x.sign is None for x in d.crossings):
        raise DiagramError("writhe needs crossing signs")
    return sum(x.sign for x in d.crossings)
