"""Rauzy graphs of factor languages and their evolution under the line digraph."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .digraph import Digraph, is_cycle, line_digraph, strongly_connected
from .errors import InsufficientStrata
from .factors import FactorLanguage, extract_factors
from .obstructions import ObstructionSet
from .words import Periodic, SequenceSpec, satisfies_theorem_hypothesis


@dataclass(frozen=True)
class RauzyGraph:
    """``R_k``: vertices are the factors of length ``k``, edges those of length ``k + 1``.

    Vertex and edge ids are positions in the sorted strata.
    """

    k: int
    graph: Digraph
    source: FactorLanguage = field(repr=False, compare=False)


def build_rauzy(fl: FactorLanguage, k: int) -> RauzyGraph:
    if not 0 <= k <= fl.k_max - 1:
        raise InsufficientStrata(f"R_{k} needs strata through {k + 1}, have {fl.k_max}")
    vertex_words = fl.stratum(k)
    vid = {w: i for i, w in enumerate(vertex_words)}
    edges = {}
    for j, u in enumerate(fl.stratum(k + 1)):
        edges[j] = (vid[u[:k]], vid[u[1:]], u)
    return RauzyGraph(k, Digraph(dict(enumerate(vertex_words)), edges), fl)


@dataclass(frozen=True)
class EvolutionReport:
    k: int
    deleted: list
    isomorphic: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _labelled_edges(g: Digraph, edge_ids=None):
    ids = g.edges if edge_ids is None else edge_ids
    out = {}
    for eid in ids:
        e = g.edge(eid)
        out[e.label] = (g.vertex_label(e.source), g.vertex_label(e.target))
    return out


def check_evolution(fl: FactorLanguage, obs: ObstructionSet, k: int) -> EvolutionReport:
    """Compare ``R_{k+1}`` with ``f(R_k)`` minus the edges labelled by obstructions.

    The edges of ``f(R_k)`` spell words of length ``k + 2``, so those are the
    obstruction lengths removed.
    """
    if fl.k_max < k + 2 or obs.n_max < k + 2:
        raise InsufficientStrata(f"evolution at k={k} needs strata and obstructions through {k + 2}")
    h, _, _ = line_digraph(build_rauzy(fl, k).graph)
    nxt = build_rauzy(fl, k + 1).graph
    deleted = [h.edge(e).label for e in h.edges if h.edge(e).label in obs]
    kept = [e for e in h.edges if h.edge(e).label not in obs]
    same_vertices = sorted(h.vertex_label(v) for v in h.vertices) == sorted(
        nxt.vertex_label(v) for v in nxt.vertices)
    isomorphic = same_vertices and _labelled_edges(h, kept) == _labelled_edges(nxt) \
        and len(kept) == nxt.n_edges
    deleted.sort(key=fl.alphabet.sort_key)
    return EvolutionReport(k, deleted, isomorphic)


@dataclass(frozen=True)
class Proposition1Row:
    k: int
    strongly_connected: bool
    is_cycle: bool
    passed: bool
    note: str = ""


def check_proposition1(spec: SequenceSpec, k_range, fl: FactorLanguage = None) -> list[Proposition1Row]:
    """Strong connectivity and non-cycle check of ``R_k`` for each ``k``.

    Periodic sequences fall outside the hypothesis; their rows only require
    strong connectivity and carry a note when ``R_k`` is a cycle.
    """
    k_range = list(k_range)
    if fl is None:
        fl = extract_factors(spec, max(k_range) + 1)
    hypothesis = satisfies_theorem_hypothesis(spec)
    periodic = isinstance(spec, Periodic) or any(fl.complexity(k) <= k for k in range(1, fl.k_max + 1))
    rows = []
    for k in k_range:
        g = build_rauzy(fl, k).graph
        sc, cyc = strongly_connected(g), is_cycle(g)
        if hypothesis:
            rows.append(Proposition1Row(k, sc, cyc, sc and not cyc))
        elif periodic:
            # no claim outside the hypothesis; a cycle is what periodicity predicts for large k
            rows.append(Proposition1Row(k, sc, cyc, sc, "expected-for-periodic" if cyc else "periodic"))
        else:
            rows.append(Proposition1Row(k, sc, cyc, True, "hypothesis not established"))
    return rows
