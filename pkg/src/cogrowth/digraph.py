"""Finite directed multigraphs and the operators used on Rauzy graphs.

Vertices and edges carry stable hashable ids (ints everywhere in this
package) and optional labels. Parallel edges and loops are allowed.
Path lengths follow the vertex-counting convention: a path with ``m``
edges has length ``m + 1``.
"""

from __future__ import annotations

import json
import math
import os
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, NamedTuple, Optional, Union

from .errors import BudgetExceeded, EmptyGraph, NotAFork

INFINITE = math.inf
"""Entropy regulator value of a graph with arbitrarily long fork-free paths."""

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    return int(os.environ.get("COGROWTH_BUDGET", DEFAULT_BUDGET))


class Edge(NamedTuple):
    source: Hashable
    target: Hashable
    label: Optional[str] = None


class Digraph:
    """Immutable directed multigraph.

    Parameters
    ----------
    vertices : mapping of id to label, or iterable of ids
    edges : mapping of id to ``(source, target[, label])``, or an iterable of
        such tuples (ids are then assigned ``0, 1, ...`` in order)
    """

    def __init__(self, vertices: Union[Mapping, Iterable] = (), edges: Union[Mapping, Iterable] = ()):
        if isinstance(vertices, Mapping):
            self._vertices = dict(vertices)
        else:
            self._vertices = {v: None for v in vertices}
        items = edges.items() if isinstance(edges, Mapping) else enumerate(edges)
        self._edges = {eid: Edge(*e) for eid, e in items}
        out = {v: [] for v in self._vertices}
        inn = {v: [] for v in self._vertices}
        for eid, e in self._edges.items():
            if e.source not in out or e.target not in inn:
                raise ValueError(f"edge {eid!r} references a missing vertex")
            out[e.source].append(eid)
            inn[e.target].append(eid)
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inn.items()}

    @classmethod
    def from_edges(cls, pairs, n_vertices=None):
        """Unlabeled graph on ``0..n-1`` from ``(source, target)`` pairs."""
        pairs = list(pairs)
        if n_vertices is None:
            n_vertices = 1 + max((max(s, t) for s, t in pairs), default=-1)
        return cls(range(n_vertices), pairs)

    # accessors

    @property
    def vertices(self) -> tuple:
        return tuple(self._vertices)

    @property
    def edges(self) -> tuple:
        return tuple(self._edges)

    def __len__(self):
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v) -> bool:
        return v in self._vertices

    def has_edge(self, e) -> bool:
        return e in self._edges

    def edge(self, e) -> Edge:
        return self._edges[e]

    def vertex_label(self, v):
        return self._vertices[v]

    def out_edges(self, v) -> tuple:
        return self._out[v]

    def in_edges(self, v) -> tuple:
        return self._in[v]

    def out_degree(self, v) -> int:
        return len(self._out[v])

    def in_degree(self, v) -> int:
        return len(self._in[v])

    def successors(self, v):
        return [self._edges[e].target for e in self._out[v]]

    def vertex_by_label(self, label):
        for v, lab in self._vertices.items():
            if lab == label:
                return v
        raise KeyError(label)

    def edge_by_label(self, label):
        for eid, e in self._edges.items():
            if e.label == label:
                return eid
        raise KeyError(label)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __repr__(self):
        return f"Digraph(|V|={len(self)}, |E|={self.n_edges})"

    # derived graphs

    def subgraph(self, vertices, edges=None) -> "Digraph":
        """Subgraph on ``vertices``; ``edges`` defaults to all induced edges. Ids are kept."""
        keep = set(vertices)
        vs = {v: lab for v, lab in self._vertices.items() if v in keep}
        if edges is None:
            es = {eid: e for eid, e in self._edges.items() if e.source in keep and e.target in keep}
        else:
            chosen = set(edges)
            es = {eid: e for eid, e in self._edges.items() if eid in chosen}
        return Digraph(vs, es)

    def without_edges(self, removed) -> "Digraph":
        removed = set(removed)
        return Digraph(self._vertices, {eid: e for eid, e in self._edges.items() if eid not in removed})

    def path(self, start, edges=()) -> "Path":
        """Path from ``start`` along ``edges``; validates consecutiveness."""
        vs = [start]
        for eid in edges:
            e = self._edges[eid]
            if e.source != vs[-1]:
                raise ValueError(f"edge {eid!r} does not start at {vs[-1]!r}")
            vs.append(e.target)
        return Path(tuple(vs), tuple(edges))

    def path_of_edges(self, edges) -> "Path":
        edges = tuple(edges)
        if not edges:
            raise ValueError("an empty edge sequence does not determine a path")
        return self.path(self._edges[edges[0]].source, edges)

    # serialization

    def to_dict(self) -> dict:
        return {
            "vertices": [[v, lab] for v, lab in self._vertices.items()],
            "edges": [[eid, e.source, e.target, e.label] for eid, e in self._edges.items()],
        }

    @classmethod
    def from_dict(cls, doc) -> "Digraph":
        return cls({v: lab for v, lab in doc["vertices"]},
                   {eid: (s, t, lab) for eid, s, t, lab in doc["edges"]})

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name="G", comment=None) -> str:
        """DOT text; byte-stable for equal graphs."""
        index = {v: i for i, v in enumerate(self._vertices)}

        def show(label, fallback):
            if label is None:
                return str(fallback)
            return label if label != "" else "ε"

        lines = []
        if comment:
            lines.extend(f"// {line}" for line in comment.splitlines())
        lines.append(f"digraph {name} {{")
        for v, lab in self._vertices.items():
            lines.append(f'  n{index[v]} [label="{show(lab, v)}"];')
        for eid, e in self._edges.items():
            lines.append(f'  n{index[e.source]} -> n{index[e.target]} [label="{show(e.label, eid)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Path:
    """Directed path; ``len(p)`` counts vertices."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a path has exactly one more vertex than edges")

    def __len__(self):
        return len(self.vertices)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def __add__(self, other: "Path") -> "Path":
        if other.start != self.end:
            raise ValueError("second path must start where the first one ends")
        return Path(self.vertices + other.vertices[1:], self.edges + other.edges)

    def extend(self, edge, target) -> "Path":
        return Path(self.vertices + (target,), self.edges + (edge,))


# connectivity


def strongly_connected_components(g: Digraph) -> list[tuple]:
    """Strongly connected components (iterative Tarjan).

    Components are listed in order of their smallest vertex position in
    ``g.vertices``; vertices inside a component keep graph order.
    """
    index, low = {}, {}
    on_stack = set()
    stack = []
    comps = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(g.successors(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(comp)
    order = {v: i for i, v in enumerate(g.vertices)}
    out = [tuple(sorted(c, key=order.__getitem__)) for c in comps]
    out.sort(key=lambda c: order[c[0]])
    return out


def strongly_connected(g: Digraph) -> bool:
    if len(g) == 0:
        raise EmptyGraph("strong connectivity of the empty graph is undefined")
    return len(strongly_connected_components(g)) == 1


def is_cycle(g: Digraph) -> bool:
    """True iff ``g`` is one directed cycle (a single loop counts)."""
    if len(g) == 0:
        return False
    if any(g.out_degree(v) != 1 or g.in_degree(v) != 1 for v in g.vertices):
        return False
    return strongly_connected(g)


def forks(g: Digraph) -> frozenset:
    """Vertices of out-degree at least 2."""
    return frozenset(v for v in g.vertices if g.out_degree(v) >= 2)


def reachable(g: Digraph, start, skip_edges=()) -> tuple[set, set]:
    """Vertices and edges reachable from ``start``, never traversing ``skip_edges``."""
    skip = set(skip_edges)
    seen_v, seen_e = {start}, set()
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for eid in g.out_edges(v):
            if eid in skip:
                continue
            seen_e.add(eid)
            w = g.edge(eid).target
            if w not in seen_v:
                seen_v.add(w)
                queue.append(w)
    return seen_v, seen_e


def delete_edge_reachable(g: Digraph, e) -> Digraph:
    """Remove ``e`` and keep what is reachable from its source (ids preserved)."""
    v = g.edge(e).source
    if g.out_degree(v) < 2:
        raise NotAFork(f"source {v!r} of edge {e!r} has out-degree {g.out_degree(v)}")
    vs, es = reachable(g, v, skip_edges=(e,))
    return g.subgraph(vs, es)


# line digraphs


def _merge_labels(first, second):
    if isinstance(first, str) and isinstance(second, str) and first and second \
            and first[1:] == second[:-1]:
        return first + second[-1]
    return None


def line_digraph(g: Digraph):
    """Directed line graph of ``g``.

    Returns ``(f, vertex_to_edge, edge_to_path)``: the vertices of ``f`` are the
    edge ids of ``g``; each edge of ``f`` is a length-two path of ``g`` and
    gets the next integer id.
    """
    vertices = {eid: g.edge(eid).label for eid in g.edges}
    edges = {}
    edge_to_path = {}
    for e1 in g.edges:
        mid = g.edge(e1).target
        for e2 in g.out_edges(mid):
            i = len(edges)
            edges[i] = (e1, e2, _merge_labels(g.edge(e1).label, g.edge(e2).label))
            edge_to_path[i] = Path((g.edge(e1).source, mid, g.edge(e2).target), (e1, e2))
    return Digraph(vertices, edges), {e: e for e in g.edges}, edge_to_path


def count_paths(g: Digraph, n_edges: int) -> int:
    """Number of paths with exactly ``n_edges`` edges (``n_edges + 1`` vertices)."""
    if n_edges == 0:
        return len(g)
    ways = {v: 1 for v in g.vertices}
    for _ in range(n_edges):
        ways = {v: sum(ways[g.edge(e).target] for e in g.out_edges(v)) for v in g.vertices}
    return sum(ways.values())


class LineIterate(NamedTuple):
    graph: Digraph
    vertex_paths: dict
    edge_paths: dict


def _spell(g: Digraph, path: Path):
    start = g.vertex_label(path.start)
    if not isinstance(start, str):
        return None
    letters = []
    for eid in path.edges:
        lab = g.edge(eid).label
        if not isinstance(lab, str) or len(lab) != len(start) + 1:
            return None
        letters.append(lab[-1])
    return start + "".join(letters)


def iterate_line_digraph(g: Digraph, m: int, budget: Optional[int] = None) -> LineIterate:
    """``f^m(g)`` materialized from explicit paths of ``g``.

    Vertex ``i`` is the ``i``-th path with ``m`` edges and edge ``j`` the
    ``j``-th path with ``m + 1`` edges, both in depth-first order over edge
    ids; an edge runs from its path minus the last edge to its path minus the
    first edge. Word labels are spelled when ``g`` is a Rauzy-style graph.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return LineIterate(g, {v: Path((v,), ()) for v in g.vertices},
                           {e: g.path_of_edges((e,)) for e in g.edges})
    budget = default_budget() if budget is None else budget
    estimate = count_paths(g, m)
    if estimate > budget:
        raise BudgetExceeded(estimate, budget)

    def paths_with(n_edges):
        level = [g.path_of_edges((e,)) for e in g.edges]
        for _ in range(n_edges - 1):
            level = [p.extend(e, g.edge(e).target) for p in level for e in g.out_edges(p.end)]
        return level

    vpaths = paths_with(m)
    vid = {p.edges: i for i, p in enumerate(vpaths)}
    vertices = {i: _spell(g, p) for i, p in enumerate(vpaths)}
    epaths = []
    edges = {}
    for p in vpaths:
        for e in g.out_edges(p.end):
            q = p.extend(e, g.edge(e).target)
            j = len(epaths)
            epaths.append(q)
            edges[j] = (vid[q.edges[:-1]], vid[q.edges[1:]], _spell(g, q))
    return LineIterate(Digraph(vertices, edges), dict(enumerate(vpaths)), dict(enumerate(epaths)))


# entropy regulator


def entropy_regulator(g: Digraph):
    """Least ``L`` such that every path with ``L`` vertices meets a fork.

    Returns an int, or :data:`INFINITE` when the non-fork vertices carry a
    cycle. Otherwise ``L`` is one more than the longest path (in vertices)
    through non-fork vertices only.
    """
    fk = forks(g)
    free = [v for v in g.vertices if v not in fk]
    free_set = set(free)
    succ = {v: [w for w in g.successors(v) if w in free_set] for v in free}
    indeg = {v: 0 for v in free}
    for v in free:
        for w in succ[v]:
            indeg[w] += 1
    # longest[v] = vertices on the longest fork-free path ending at v
    longest = {v: 1 for v in free}
    queue = deque(v for v in free if indeg[v] == 0)
    done = 0
    while queue:
        v = queue.popleft()
        done += 1
        for w in succ[v]:
            longest[w] = max(longest[w], longest[v] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if done < len(free):
        return INFINITE
    return max(longest.values(), default=0) + 1


def find_path_occurrence(haystack: Path, needle: Path) -> bool:
    """Whether ``needle`` occurs as a contiguous sub-path of ``haystack``."""
    if not needle.edges:
        return needle.start in haystack.vertices
    h, n = haystack.edges, needle.edges
    k = len(n)
    return any(h[i:i + k] == n for i in range(len(h) - k + 1))
