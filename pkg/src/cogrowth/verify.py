"""Property checks of the entropy-regulator lemmas on digraph corpora and
on Rauzy graphs of sequences.

Every ``check_*`` function tests one statement on one input and returns a
:class:`Verdict`; the ``run_*`` functions sweep a seeded corpus (or a range
of orders for a sequence) and assemble a :class:`LemmaReport`.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass, field
from typing import Optional

from .digraph import (
    INFINITE,
    Digraph,
    Path,
    delete_edge_reachable,
    entropy_regulator,
    find_path_occurrence,
    forks,
    is_cycle,
    iterate_line_digraph,
    line_digraph,
    strongly_connected,
    strongly_connected_components,
)
from .errors import GenerationFailed, NotGood, PreconditionFailed
from .factors import extract_factors
from .obstructions import LOG_PHI, cogrowth_profile, minimal_forbidden
from .rauzy import build_rauzy, check_proposition1
from .words import FIBONACCI, MorphicFixedPoint, SequenceSpec, satisfies_theorem_hypothesis

MAX_GENERATION_TRIES = 1000


def _er_json(value):
    return "inf" if value == INFINITE else int(value)


@dataclass
class Verdict:
    passed: bool
    details: dict = field(default_factory=dict)


@dataclass
class LemmaReport:
    lemma: str
    corpus: dict
    passes: int = 0
    violations: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _violation(g: Digraph, witness) -> dict:
    return {"graph": g.to_dict(), "dot": g.to_dot(), "witness": witness}


# corpora


def random_sc_digraph(n_vertices: int, seed: int) -> Digraph:
    """Seeded strongly connected non-cycle digraph with out-degrees at most 2.

    A random permutation supplies a cycle cover; each vertex then gains a
    second out-edge with a per-attempt probability. Attempts that are not
    strongly connected, or are a single cycle, are rejected.
    """
    if not 2 <= n_vertices <= 16:
        raise ValueError("n_vertices must lie in 2..16")
    rng = random.Random(seed)
    for _ in range(MAX_GENERATION_TRIES):
        perm = list(range(n_vertices))
        rng.shuffle(perm)
        density = rng.uniform(0.2, 0.9)
        pairs = []
        for v in range(n_vertices):
            pairs.append((v, perm[v]))
            if rng.random() < density:
                pairs.append((v, rng.randrange(n_vertices)))
        g = Digraph.from_edges(pairs, n_vertices)
        if strongly_connected(g) and not is_cycle(g):
            return g
    raise GenerationFailed(f"no strongly connected non-cycle graph after {MAX_GENERATION_TRIES} tries")


def random_corpus(seed: int, count: int, max_vertices: int, max_er: Optional[int] = None):
    """``count`` graphs ``(n, sub_seed, graph)`` drawn from a master seed.

    With ``max_er`` set, graphs whose entropy regulator exceeds it are skipped.
    """
    master = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > count * MAX_GENERATION_TRIES:
            raise GenerationFailed("corpus filter rejected too many graphs")
        n = master.randint(2, max_vertices)
        sub_seed = master.getrandbits(32)
        g = random_sc_digraph(n, sub_seed)
        if max_er is not None and entropy_regulator(g) > max_er:
            continue
        out.append((n, sub_seed, g))
    return out


# preconditions


def _require(g: Digraph, *, finite_er=True, binary=True, non_cycle=False):
    failures = []
    if len(g) == 0 or not strongly_connected(g):
        failures.append("not strongly connected")
    if non_cycle and is_cycle(g):
        failures.append("is a cycle")
    if binary and any(g.out_degree(v) > 2 for v in g.vertices):
        failures.append("out-degree above 2")
    er = entropy_regulator(g)
    if finite_er and er == INFINITE:
        failures.append("entropy regulator is infinite")
    if failures:
        raise PreconditionFailed("; ".join(failures))
    return er


# entropy regulator of line digraphs


def check_lemma_evol(g: Digraph) -> Verdict:
    """Entropy regulator is unchanged by one line-digraph step."""
    er = _require(g, non_cycle=True, binary=False)
    er_line = entropy_regulator(line_digraph(g)[0])
    return Verdict(er_line == er, {"er": _er_json(er), "er_line": _er_json(er_line)})


# edge deletion


def check_lemma_del_edge(g: Digraph) -> list[Verdict]:
    """One verdict per edge leaving a fork.

    Removing the edge and keeping what its source still reaches must leave a
    strongly connected graph that is a cycle of at most ``L`` vertices or has
    entropy regulator at most ``2L``.
    """
    er = _require(g)
    out = []
    for v in sorted(forks(g), key=g.vertices.index):
        for e in g.out_edges(v):
            sub = delete_edge_reachable(g, e)
            sc = strongly_connected(sub)
            cyc = is_cycle(sub)
            sub_er = entropy_regulator(sub)
            passed = sc and ((cyc and len(sub) <= er) or sub_er <= 2 * er)
            out.append(Verdict(passed, {"edge": e, "er": er, "strongly_connected": sc,
                                        "cycle": cyc, "vertices": len(sub), "sub_er": _er_json(sub_er)}))
    return out


# good paths


@dataclass(frozen=True)
class GoodPathContext:
    """A host graph and a forbidden sub-path whose last edge leaves a fork."""

    host: Digraph
    forbidden: Path

    def __post_init__(self):
        if not self.forbidden.edges:
            raise PreconditionFailed("the forbidden path needs at least one edge")
        if self.fork not in forks(self.host):
            raise PreconditionFailed("the last edge of the forbidden path must leave a fork")
        _require(self.host, finite_er=False)

    @property
    def fork(self):
        return self.host.edge(self.forbidden.edges[-1]).source

    def is_good(self, path: Path) -> bool:
        return not find_path_occurrence(path, self.forbidden)


def good_path_extend(ctx: GoodPathContext, s: Path) -> list:
    """Out-edges ``e`` of the end of ``s`` with ``s e`` still good."""
    if not ctx.is_good(s):
        raise NotGood("path already contains the forbidden sub-path")
    g = ctx.host
    k = len(ctx.forbidden.edges)
    out = []
    for e in g.out_edges(s.end):
        tail = (s.edges + (e,))[-k:]
        if tail != ctx.forbidden.edges:
            out.append(e)
    return out


def _paths_up_to(g: Digraph, max_edges: int):
    level = [g.path(v) for v in g.vertices]
    paths = list(level)
    for _ in range(max_edges):
        level = [p.extend(e, g.edge(e).target) for p in level for e in g.out_edges(p.end)]
        paths.extend(level)
    return paths


def check_good_path(g: Digraph, max_forbidden_edges: int = 3, max_path_edges: int = 3) -> Verdict:
    """Prolongation of good paths, over every forbidden path and good path up to the given sizes."""
    _require(g, finite_er=False)
    fk = forks(g)
    forbidden = [p for p in _paths_up_to(g, max_forbidden_edges)
                 if p.edges and g.edge(p.edges[-1]).source in fk]
    candidates = _paths_up_to(g, max_path_edges)
    checked = 0
    for p in forbidden:
        ctx = GoodPathContext(g, p)
        for s in candidates:
            if not ctx.is_good(s):
                continue
            checked += 1
            ext = good_path_extend(ctx, s)
            bad = (not ext
                   or (s.end in fk and s.end != ctx.fork and len(ext) != 2)
                   or not all(ctx.is_good(s.extend(e, g.edge(e).target)) for e in ext))
            if bad:
                return Verdict(False, {"forbidden": list(p.edges), "path_start": s.start,
                                       "path": list(s.edges), "extensions": ext})
    return Verdict(True, {"forbidden_paths": len(forbidden), "good_paths": checked})


# strongly connected subgraphs of iterated line digraphs


def _qualifying_component(g: Digraph, bound) -> Optional[tuple]:
    """A strongly connected component with an edge and entropy regulator ``<= bound``."""
    for comp in strongly_connected_components(g):
        sub = g.subgraph(comp)
        if sub.n_edges == 0:
            continue
        er = entropy_regulator(sub)
        if er <= bound:
            return comp, er
    return None


def _good_subgraph(it, window: Path) -> Digraph:
    g = it.graph
    vs = [v for v in g.vertices if not find_path_occurrence(it.vertex_paths[v], window)]
    es = [e for e in g.edges if not find_path_occurrence(it.edge_paths[e], window)]
    return g.subgraph(vs, es)


def _windows(p: Path):
    n = len(p.edges)
    for size in range(1, n + 1):
        for i in range(n - size + 1):
            yield Path(p.vertices[i:i + size + 1], p.edges[i:i + size])


def check_iterated_deletion(g: Digraph, k: int, budget: Optional[int] = None,
                            component_route: bool = True) -> Verdict:
    """For every edge ``u`` of ``f^k(g)``, find a strongly connected ``B`` in
    ``f^k(g) - u`` with an edge and ``er(B) <= 3L``.

    Components of ``f^k(g) - u`` are tried first. Otherwise each contiguous
    sub-path ``q`` of the path of ``g`` behind ``u`` is forbidden in turn and the
    components of the subgraph of paths avoiding ``q`` are tried.
    ``component_route=False`` skips the first attempt.
    """
    er = _require(g)
    if k < 3 * er:
        raise PreconditionFailed(f"k = {k} is below 3L = {3 * er}")
    it = iterate_line_digraph(g, k, budget)
    f = it.graph
    bound = 3 * er
    routes = {"component": 0, "good-path": 0}
    failed = []
    for u in f.edges:
        if component_route and _qualifying_component(f.without_edges([u]), bound):
            routes["component"] += 1
            continue
        p_u = it.edge_paths[u]
        if any(_qualifying_component(_good_subgraph(it, q), bound) for q in _windows(p_u)):
            routes["good-path"] += 1
            continue
        failed.append({"edge": u, "path": list(p_u.edges)})
    details = {"er": er, "k": k, "vertices": len(f), "edges": f.n_edges, "routes": routes}
    if failed:
        details["failed"] = failed
    return Verdict(not failed, details)


def check_main_lemma(g: Digraph, budget: Optional[int] = None) -> Verdict:
    """:func:`check_iterated_deletion` at ``k = 3L``; every edge path has ``3L + 2`` vertices."""
    return check_iterated_deletion(g, 3 * _require(g), budget)


def check_corollary_main(g: Digraph, k: int, budget: Optional[int] = None) -> Verdict:
    return check_iterated_deletion(g, k, budget)


# Rauzy-graph statements


def check_corollary_er(spec: SequenceSpec, n_range) -> LemmaReport:
    """``er(R_{n-1}) <= 2 ** O(n)`` for each ``n``; rows list ``n, L_n, O(n), 2**O(n)``."""
    n_range = list(n_range)
    n_top = max(n_range)
    fl = extract_factors(spec, n_top)
    obs = minimal_forbidden(fl, n_top)
    report = LemmaReport("corollary-er", {"spec": spec.name, "n_min": min(n_range), "n_max": n_top})
    for n in n_range:
        er = entropy_regulator(build_rauzy(fl, n - 1).graph)
        o = obs.cogrowth(n)
        row = {"n": n, "er": _er_json(er), "cogrowth": o, "bound": 2 ** o, "tight": er == 2 ** o}
        report.rows.append(row)
        if er <= 2 ** o:
            report.passes += 1
        else:
            report.violations.append({"witness": row})
    return report


def run_proposition1(spec: SequenceSpec, k_range) -> LemmaReport:
    k_range = list(k_range)
    report = LemmaReport("prop1", {"spec": spec.name, "k_min": min(k_range), "k_max": max(k_range)})
    for row in check_proposition1(spec, k_range):
        report.rows.append(asdict(row))
        if row.passed:
            report.passes += 1
        else:
            report.violations.append({"witness": asdict(row)})
    return report


def _is_fibonacci(spec):
    return isinstance(spec, MorphicFixedPoint) and spec.morphism == FIBONACCI.morphism \
        and spec.seed == FIBONACCI.seed


def check_theorem(spec: SequenceSpec, n_max: int) -> LemmaReport:
    """Running maximum of ``O(n) / log_3 n`` over ``2 <= n <= n_max`` must reach 1.

    The limit superior itself is out of reach; the running maximum is what a
    finite profile can show. Sequences outside the hypothesis are profiled
    but not asserted.
    """
    if n_max < 10:
        raise ValueError("n_max must be at least 10")
    profile = cogrowth_profile(spec, n_max)
    fib = _is_fibonacci(spec)
    report = LemmaReport("theorem", {"spec": spec.name, "n_max": n_max})
    for r in profile:
        row = asdict(r)
        if fib:
            row["ratio_log_phi"] = r.cogrowth / (math.log(r.n) / LOG_PHI)
        report.rows.append(row)
    best = profile[-1].running_max
    if not satisfies_theorem_hypothesis(spec):
        report.corpus["skipped"] = ("periodic: theorem hypothesis violated" if _looks_periodic(spec)
                                    else "theorem hypothesis not established")
        report.passes = 1
    elif best >= 1.0:
        report.passes = 1
    else:
        report.violations.append({"witness": {"running_max": best}})
    report.corpus["running_max"] = best
    return report


def _looks_periodic(spec):
    fl = extract_factors(spec, 32)
    return any(fl.complexity(k) <= k for k in range(1, 33))


# corpus sweeps


def _corpus_report(lemma, seed, count, max_vertices, **extra):
    return LemmaReport(lemma, {"seed": seed, "count": count, "max_vertices": max_vertices, **extra})


def run_lemma_evol(seed=42, count=300, max_vertices=12) -> LemmaReport:
    report = _corpus_report("evol", seed, count, max_vertices)
    for n, sub_seed, g in random_corpus(seed, count, max_vertices):
        v = check_lemma_evol(g)
        if v.passed:
            report.passes += 1
        else:
            report.violations.append(_violation(g, v.details))
    return report


def run_lemma_del_edge(seed=7, count=300, max_vertices=12) -> LemmaReport:
    report = _corpus_report("del-edge", seed, count, max_vertices)
    for n, sub_seed, g in random_corpus(seed, count, max_vertices):
        bad = [v.details for v in check_lemma_del_edge(g) if not v.passed]
        if bad:
            report.violations.append(_violation(g, bad))
        else:
            report.passes += 1
    return report


def run_good_path(seed=5, count=50, max_vertices=6) -> LemmaReport:
    report = _corpus_report("good-path", seed, count, max_vertices, max_er=2)
    for n, sub_seed, g in random_corpus(seed, count, max_vertices, max_er=2):
        v = check_good_path(g)
        if v.passed:
            report.passes += 1
        else:
            report.violations.append(_violation(g, v.details))
    return report


def run_main_lemma(seed=5, count=50, max_vertices=6, extra=0, budget=None) -> LemmaReport:
    """Sweep :func:`check_iterated_deletion` at ``k = 3L + extra``."""
    lemma = "main" if extra == 0 else "corollary-main"
    report = _corpus_report(lemma, seed, count, max_vertices, max_er=2, k_offset=extra)
    for n, sub_seed, g in random_corpus(seed, count, max_vertices, max_er=2):
        v = check_iterated_deletion(g, 3 * entropy_regulator(g) + extra, budget)
        report.rows.append({"n": n, "seed": sub_seed, **{k: v.details[k] for k in ("er", "k", "edges")},
                            "routes": v.details["routes"]})
        if v.passed:
            report.passes += 1
        else:
            report.violations.append(_violation(g, v.details))
    return report


def replay_violation(lemma: str, violation: dict):
    """Re-run the checker of ``lemma`` on a serialized counterexample graph."""
    g = Digraph.from_dict(violation["graph"])
    checkers = {
        "evol": check_lemma_evol,
        "del-edge": check_lemma_del_edge,
        "good-path": check_good_path,
        "main": check_main_lemma,
    }
    if lemma == "corollary-main":
        return check_corollary_main(g, violation["witness"]["k"])
    return checkers[lemma](g)
