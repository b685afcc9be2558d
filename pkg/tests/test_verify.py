import json

import pytest

from cogrowth import verify
from cogrowth.digraph import Digraph, entropy_regulator, forks, is_cycle, strongly_connected
from cogrowth.errors import BudgetExceeded, NotGood, PreconditionFailed
from cogrowth.verify import (
    GoodPathContext,
    check_corollary_er,
    check_corollary_main,
    check_good_path,
    check_iterated_deletion,
    check_lemma_del_edge,
    check_lemma_evol,
    check_main_lemma,
    check_theorem,
    good_path_extend,
    random_corpus,
    random_sc_digraph,
    replay_violation,
)
from cogrowth.words import FIBONACCI, THUE_MORSE, builtin_spec


@pytest.mark.parametrize("n", [2, 5, 12, 16])
def test_random_graph_invariants(n):
    for seed in range(20):
        g = random_sc_digraph(n, seed)
        assert g == random_sc_digraph(n, seed)
        assert len(g) == n
        assert strongly_connected(g) and not is_cycle(g)
        assert all(g.out_degree(v) <= 2 for v in g.vertices)
        assert entropy_regulator(g) < float("inf")


def test_random_graph_bounds():
    with pytest.raises(ValueError):
        random_sc_digraph(1, 0)
    with pytest.raises(ValueError):
        random_sc_digraph(17, 0)


def test_corpus_is_deterministic_and_filtered():
    a = random_corpus(9, 30, 6, max_er=2)
    b = random_corpus(9, 30, 6, max_er=2)
    assert [(n, s) for n, s, _ in a] == [(n, s) for n, s, _ in b]
    assert all(entropy_regulator(g) <= 2 for _, _, g in a)


def test_lemma_evol_examples(fib_r1, two_loops):
    v = check_lemma_evol(fib_r1)
    assert v.passed and v.details == {"er": 2, "er_line": 2}
    v = check_lemma_evol(two_loops)
    assert v.passed and v.details["er_line"] == 1


def test_lemma_evol_preconditions(three_cycle):
    with pytest.raises(PreconditionFailed, match="cycle"):
        check_lemma_evol(three_cycle)
    with pytest.raises(PreconditionFailed, match="strongly connected"):
        check_lemma_evol(Digraph.from_edges([(0, 1), (0, 0)]))


def test_lemma_del_edge_examples(fib_r1):
    verdicts = {fib_r1.edge(v.details["edge"]).label: v for v in check_lemma_del_edge(fib_r1)}
    assert set(verdicts) == {"aa", "ab"}
    assert verdicts["ab"].passed and verdicts["ab"].details["cycle"] and verdicts["ab"].details["vertices"] == 1
    assert verdicts["aa"].passed and verdicts["aa"].details["cycle"] and verdicts["aa"].details["vertices"] == 2


def test_lemma_del_edge_rejects_wide_forks():
    g = Digraph.from_edges([(0, 0), (0, 1), (0, 1), (1, 0)])
    with pytest.raises(PreconditionFailed, match="out-degree"):
        check_lemma_del_edge(g)


def test_corpus_reports_add_up():
    for report in (verify.run_lemma_evol(1, 40, 10), verify.run_lemma_del_edge(2, 40, 10)):
        assert report.passes + len(report.violations) == 40
        assert report.ok


# good paths


@pytest.fixture
def ctx_graph():
    # 0 is a fork (to 1 and 2), 1 is a fork (to 0 and 2), 2 is not
    return Digraph.from_edges([(0, 1), (0, 2), (1, 0), (1, 2), (2, 0)])


def test_good_path_extend_cases(ctx_graph):
    g = ctx_graph
    forbidden = g.path(2, (4, 0))  # 2 -> 0 -> 1, last edge leaves fork 0
    ctx = GoodPathContext(g, forbidden)
    assert ctx.fork == 0
    # ends at a non-fork: its single out-edge
    assert good_path_extend(ctx, g.path(0, (1,))) == [4]
    # ends at the fork v right after the prefix of the forbidden path
    assert good_path_extend(ctx, g.path(1, (3, 4))) == [1]
    # ends at v without the prefix: both edges
    assert good_path_extend(ctx, g.path(1, (2,))) == [0, 1]
    # ends at another fork: both edges
    assert good_path_extend(ctx, g.path(0, (0,))) == [2, 3]
    with pytest.raises(NotGood):
        good_path_extend(ctx, g.path(2, (4, 0)))


def test_good_path_context_checks(ctx_graph):
    with pytest.raises(PreconditionFailed):
        GoodPathContext(ctx_graph, ctx_graph.path(2, (4,)))  # last edge leaves non-fork 2
    with pytest.raises(PreconditionFailed):
        GoodPathContext(ctx_graph, ctx_graph.path(0))


def test_good_path_checker(ctx_graph, fib_r1, two_loops):
    for g in (ctx_graph, fib_r1, two_loops):
        v = check_good_path(g)
        assert v.passed and v.details["good_paths"] > 0


# iterated line digraphs


def test_main_lemma_two_loops(two_loops):
    v = check_main_lemma(two_loops)
    assert v.passed
    assert v.details["k"] == 3 and v.details["edges"] == 16


def test_main_lemma_fibonacci_r1(fib_r1):
    v = check_main_lemma(fib_r1)
    assert v.passed and v.details["k"] == 6


def test_good_path_route_alone(two_loops, fib_r1, ctx_graph):
    # the route that mirrors the proof must succeed without the component shortcut
    for g in (two_loops, fib_r1, ctx_graph):
        v = check_iterated_deletion(g, 3 * entropy_regulator(g), component_route=False)
        assert v.passed and v.details["routes"]["component"] == 0


def test_good_path_route_on_corpus():
    for _, _, g in random_corpus(21, 8, 5, max_er=2):
        assert check_iterated_deletion(g, 3 * entropy_regulator(g), component_route=False).passed


def test_corollary_main_two_loops(two_loops):
    v = check_corollary_main(two_loops, 4)
    assert v.passed and v.details["edges"] == 32
    with pytest.raises(PreconditionFailed):
        check_corollary_main(two_loops, 2)


def test_main_lemma_budget(fib_r1):
    with pytest.raises(BudgetExceeded):
        check_main_lemma(fib_r1, budget=10)


def test_main_lemma_bijection(fib_r1):
    from cogrowth.digraph import count_paths, iterate_line_digraph

    L = entropy_regulator(fib_r1)
    it = iterate_line_digraph(fib_r1, 3 * L)
    assert it.graph.n_edges == count_paths(fib_r1, 3 * L + 1)
    assert all(len(p) == 3 * L + 2 for p in it.edge_paths.values())
    assert len(set(it.edge_paths.values())) == it.graph.n_edges


# sequences


def test_corollary_er_fibonacci():
    report = check_corollary_er(FIBONACCI, range(1, 6))
    rows = {r["n"]: r for r in report.rows}
    assert rows[1] == {"n": 1, "er": 1, "cogrowth": 0, "bound": 1, "tight": True}
    assert rows[2] == {"n": 2, "er": 2, "cogrowth": 1, "bound": 2, "tight": True}
    assert report.ok and report.passes == 5


def test_theorem_reports():
    report = check_theorem(FIBONACCI, 50)
    row3 = next(r for r in report.rows if r["n"] == 3)
    assert row3["ratio"] == pytest.approx(2.0)
    assert "ratio_log_phi" in row3
    assert report.ok
    periodic = check_theorem(builtin_spec("periodic:ab"), 100)
    assert periodic.corpus["skipped"] == "periodic: theorem hypothesis violated"
    assert {r["cogrowth"] for r in periodic.rows} == {2}
    assert "ratio_log_phi" not in check_theorem(THUE_MORSE, 20).rows[0]
    with pytest.raises(ValueError):
        check_theorem(FIBONACCI, 9)


def test_report_json_and_replay(three_cycle):
    g = random_sc_digraph(5, 3)
    fake = verify._violation(g, {"k": 3 * entropy_regulator(g)})
    doc = json.loads(json.dumps(fake))
    assert replay_violation("evol", doc).passed
    assert all(v.passed for v in replay_violation("del-edge", doc))
    assert replay_violation("corollary-main", doc).passed
    report = verify.run_lemma_evol(4, 5, 6)
    assert json.loads(report.to_json())["passes"] == 5
