"""The over/under digraph of a cycle presentation and its classification."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .presentation import CyclePresentation

__all__ = ["OverDigraph", "DigraphClass", "build", "classify", "sources_sinks", "to_dot", "describe"]


@dataclass(frozen=True)
class OverDigraph:
    """Vertex ``i`` is edge ``e_{i+1}``; arc ``(i, j)`` means edge i is over edge j."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    arc_crossings: dict = field(default_factory=dict, compare=False)
    # vertex indices of each link component, in traversal order
    components: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        pairs = set()
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = frozenset((u, v))
            if key in pairs:
                raise ValueError(f"two arcs between {u} and {v}")
            pairs.add(key)
        if not self.components:
            object.__setattr__(self, "components", (tuple(range(self.n)),))

    def neighbours(self, v: int) -> set[int]:
        return {b for a, b in self.arcs if a == v} | {a for a, b in self.arcs if b == v}

    def successive_pairs(self) -> list[tuple[int, int]]:
        out = []
        for comp in self.components:
            if len(comp) < 2:
                continue
            for k, v in enumerate(comp):
                out.append((v, comp[(k + 1) % len(comp)]))
        return out


@dataclass(frozen=True)
class DigraphClass:
    connected: bool
    is_path: bool
    has_directed_cycle: bool
    is_directed_n_cycle: bool
    # undirected distance d(v_i, v_{i+1}) per successive pair; None if unreachable
    successive_distances: tuple[tuple[int, int, Optional[int]], ...] = ()

    @property
    def max_successive_distance(self) -> Optional[int]:
        ds = [d for _, _, d in self.successive_distances]
        if any(d is None for d in ds):
            return None
        return max(ds, default=0)


def build(p: "CyclePresentation") -> OverDigraph:
    arcs = p.over_pairs()
    crossings = {(u, v): p.shared_crossings(u, v) for u, v in arcs}
    comps = tuple(tuple(c) for c in p.component_edges())
    return OverDigraph(p.n, tuple(arcs), crossings, comps)


def _undirected(g: OverDigraph) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.arcs:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _bfs(adj: list[set[int]], src: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _has_cycle(g: OverDigraph) -> bool:
    out = [[] for _ in range(g.n)]
    for u, v in g.arcs:
        out[u].append(v)
    state = [0] * g.n  # 0 new, 1 on stack, 2 done
    for root in range(g.n):
        if state[root]:
            continue
        stack = [(root, iter(out[root]))]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[v] = 2
                stack.pop()
            elif state[nxt] == 1:
                return True
            elif state[nxt] == 0:
                state[nxt] = 1
                stack.append((nxt, iter(out[nxt])))
    return False


def classify(g: OverDigraph) -> DigraphClass:
    """Connectivity and path shape use the underlying undirected graph."""
    adj = _undirected(g)
    connected = g.n == 0 or all(d is not None for d in _bfs(adj, 0))
    degrees = [len(a) for a in adj]
    is_path = connected and len(g.arcs) == max(g.n - 1, 0) and max(degrees, default=0) <= 2
    cyclic = _has_cycle(g)
    indeg = [0] * g.n
    outdeg = [0] * g.n
    for u, v in g.arcs:
        outdeg[u] += 1
        indeg[v] += 1
    n_cycle = (
        g.n >= 2 and connected and len(g.arcs) == g.n
        and all(i == 1 for i in indeg) and all(o == 1 for o in outdeg)
    )
    dists = []
    cache: dict[int, list] = {}
    for u, v in g.successive_pairs():
        if u not in cache:
            cache[u] = _bfs(adj, u)
        dists.append((u, v, cache[u][v]))
    return DigraphClass(connected, is_path, cyclic, n_cycle, tuple(dists))


def sources_sinks(g: OverDigraph, without_arc: Optional[tuple[int, int]] = None) -> tuple[set[int], set[int]]:
    """Vertices with no incoming (sources) or no outgoing (sinks) arcs.

    ``without_arc`` is removed first when present; an absent pair is ignored.
    """
    arcs = [a for a in g.arcs if a != without_arc]
    has_in = {v for _, v in arcs}
    has_out = {u for u, _ in arcs}
    verts = set(range(g.n))
    return verts - has_in, verts - has_out


def describe(c: DigraphClass, n: int) -> str:
    """Short label used in reports."""
    if n == 1:
        return "single vertex"
    if c.is_directed_n_cycle:
        return f"directed {n}-cycle"
    if not c.connected:
        return "disconnected"
    if c.is_path:
        return "path"
    return "cyclic" if c.has_directed_cycle else "acyclic"


def to_dot(g: OverDigraph, labels: Optional[list[str]] = None, name: str = "G") -> str:
    """DOT text with vertices ``e1..en``; arcs carry their shared crossings."""
    lines = [f"digraph {name} {{"]
    for v in range(g.n):
        extra = f' [label="{labels[v]}"]' if labels else ""
        lines.append(f"  e{v + 1}{extra};")
    for u, v in sorted(g.arcs):
        xs = g.arc_crossings.get((u, v), ())
        note = f' [label="{",".join(str(x) for x in xs)}"]' if xs else ""
        lines.append(f"  e{u + 1} -> e{v + 1}{note};")
    lines.append("}")
    return "\n".join(lines) + "\n"
