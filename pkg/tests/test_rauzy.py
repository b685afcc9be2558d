import json
import random

import pytest

from cogrowth.digraph import is_cycle, line_digraph, strongly_connected
from cogrowth.errors import InsufficientStrata
from cogrowth.factors import extract_factors
from cogrowth.obstructions import minimal_forbidden
from cogrowth.rauzy import build_rauzy, check_evolution, check_proposition1
from cogrowth.words import FIBONACCI, PERIOD_DOUBLING, THUE_MORSE, Periodic, builtin_spec


def edge_triples(g):
    return sorted((g.edge(e).label, g.vertex_label(g.edge(e).source), g.vertex_label(g.edge(e).target))
                  for e in g.edges)


def test_fibonacci_r1(fib_fl):
    g = build_rauzy(fib_fl, 1).graph
    assert [g.vertex_label(v) for v in g.vertices] == ["a", "b"]
    assert edge_triples(g) == [("aa", "a", "a"), ("ab", "a", "b"), ("ba", "b", "a")]


def test_fibonacci_r0(fib_fl):
    g = build_rauzy(fib_fl, 0).graph
    assert [g.vertex_label(v) for v in g.vertices] == [""]
    assert edge_triples(g) == [("a", "", ""), ("b", "", "")]


def test_periodic_r1(ab_fl):
    g = build_rauzy(ab_fl, 1).graph
    assert is_cycle(g) and len(g) == 2
    assert edge_triples(g) == [("ab", "a", "b"), ("ba", "b", "a")]


def test_insufficient_strata(fib_fl):
    with pytest.raises(InsufficientStrata):
        build_rauzy(fib_fl, fib_fl.k_max)


@pytest.mark.parametrize("spec", [FIBONACCI, THUE_MORSE, PERIOD_DOUBLING], ids=lambda s: s.name)
def test_sizes_match_complexity(spec):
    fl = extract_factors(spec, 16)
    for k in range(16):
        g = build_rauzy(fl, k).graph
        assert len(g) == fl.complexity(k)
        assert g.n_edges == fl.complexity(k + 1)
        for e in g.edges:
            lab = g.edge(e).label
            assert g.vertex_label(g.edge(e).source) == lab[:k]
            assert g.vertex_label(g.edge(e).target) == lab[1:]


@pytest.mark.parametrize("spec", [FIBONACCI, THUE_MORSE], ids=lambda s: s.name)
def test_random_walks_spell_words(spec):
    # a walk spells a word of length k + m - 1 whose windows are factors;
    # the word itself need not be one (a -> a -> a spells aaa in R_1 of Fibonacci)
    fl = extract_factors(spec, 40)
    rng = random.Random(0)
    for k in (1, 3, 6):
        g = build_rauzy(fl, k).graph
        for _ in range(50):
            v = rng.choice(g.vertices)
            word = g.vertex_label(v)
            m = rng.randint(1, 40 - k)
            for _ in range(m - 1):
                e = rng.choice(g.out_edges(v))
                word += g.edge(e).label[-1]
                v = g.edge(e).target
            assert len(word) == k + m - 1
            assert all(fl.contains(word[i:i + k + 1]) for i in range(len(word) - k))


@pytest.mark.parametrize("spec", [FIBONACCI, THUE_MORSE], ids=lambda s: s.name)
def test_every_factor_is_a_path(spec):
    fl = extract_factors(spec, 20)
    k = 3
    g = build_rauzy(fl, k).graph
    edge_of = {g.edge(e).label: e for e in g.edges}
    for word in fl.stratum(12):
        edges = [edge_of[word[i:i + k + 1]] for i in range(len(word) - k)]
        path = g.path_of_edges(edges)
        assert len(path) == len(word) - k + 1


@pytest.mark.parametrize("spec", [FIBONACCI, THUE_MORSE], ids=lambda s: s.name)
def test_next_order_embeds_in_line_digraph(spec):
    fl = extract_factors(spec, 12)
    for k in range(11):
        h = line_digraph(build_rauzy(fl, k).graph)[0]
        assert set(edge_triples(build_rauzy(fl, k + 1).graph)) <= set(edge_triples(h))


def test_evolution_examples(fib_fl, ab_fl):
    obs = minimal_forbidden(fib_fl, fib_fl.k_max)
    h = line_digraph(build_rauzy(fib_fl, 1).graph)[0]
    assert h.n_edges == 5
    rep = check_evolution(fib_fl, obs, 1)
    assert rep.deleted == ["aaa"] and rep.isomorphic
    rep = check_evolution(ab_fl, minimal_forbidden(ab_fl, ab_fl.k_max), 1)
    assert rep.deleted == [] and rep.isomorphic
    assert json.loads(rep.to_json()) == {"k": 1, "deleted": [], "isomorphic": True}


def test_evolution_no_obstruction_means_equal(fib_fl):
    obs = minimal_forbidden(fib_fl, fib_fl.k_max)
    rep = check_evolution(fib_fl, obs, 2)
    assert rep.deleted == [] and rep.isomorphic
    h = line_digraph(build_rauzy(fib_fl, 2).graph)[0]
    assert edge_triples(h) == edge_triples(build_rauzy(fib_fl, 3).graph)


def test_evolution_detects_wrong_obstructions(fib_fl):
    # dropping an obstruction must break the identity
    obs = minimal_forbidden(fib_fl, fib_fl.k_max)
    from cogrowth.obstructions import ObstructionSet

    crippled = ObstructionSet(tuple(w for w in obs if w != "aaa"), obs.n_max, obs.alphabet)
    assert not check_evolution(fib_fl, crippled, 1).isomorphic


def test_proposition1(fib_fl):
    rows = check_proposition1(FIBONACCI, range(1, 11))
    assert all(r.passed and r.strongly_connected and not r.is_cycle for r in rows)
    row = check_proposition1(builtin_spec("periodic:ab"), [1])[0]
    assert row.strongly_connected and row.is_cycle and row.note == "expected-for-periodic"
