import random

import pytest

from swaproute import core
from swaproute.core import (
    Graph, Instance, ParallelSwapSequence, SwapSequence,
    apply_parallel_swap, apply_swap, distances, identity, make_family,
    move_count, orbits, verify, verify_rvm, verify_ts,
)

from conftest import random_configuration, random_connected_graph, square_graph


def test_apply_swap_single_transposition():
    g = make_family("path", n=2)
    assert apply_swap(g, (1, 0), (0, 1)) == (0, 1)


def test_apply_swap_is_involution():
    rng = random.Random(1)
    for _ in range(50):
        g = random_connected_graph(rng, rng.randint(2, 7))
        f = random_configuration(rng, g.n)
        e = rng.choice(sorted(g.edges))
        assert apply_swap(g, apply_swap(g, f, e), e) == f


def test_apply_swap_rejects_non_edges():
    g = make_family("path", n=3)
    with pytest.raises(ValueError, match="not an edge"):
        apply_swap(g, (0, 1, 2), (0, 2))


def test_square_single_swap_solution():
    # the four-swap solution on the square, written 1-based in the source:
    # {3,4}, {1,3}, {2,4}, {3,4}
    g, f = square_graph()
    seq = SwapSequence.of([(2, 3), (0, 2), (1, 3), (2, 3)])
    assert core.apply_sequence(g, f, seq) == identity(4)
    assert verify_ts(g, f, seq).ok


def test_square_parallel_solution():
    g, f = square_graph()
    seq = ParallelSwapSequence.of([[(0, 1), (2, 3)], [(0, 2), (1, 3)]])
    assert core.apply_parallel_sequence(g, f, seq) == identity(4)
    assert verify_rvm(g, f, seq).ok


def test_empty_parallel_swap_is_noop():
    g, f = square_graph()
    assert apply_parallel_swap(g, f, []) == f


def test_endpoint_swap_parallel_schedule_on_p4():
    g = make_family("path", n=4)
    f = (3, 1, 2, 0)
    seq = ParallelSwapSequence.of([[(0, 1), (2, 3)], [(1, 2)], [(0, 1), (2, 3)]])
    assert core.apply_parallel_sequence(g, f, seq) == identity(4)


def test_parallel_swap_rejects_overlap_and_non_edges():
    g = make_family("path", n=4)
    with pytest.raises(ValueError, match="not a matching"):
        apply_parallel_swap(g, identity(4), [(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="not an edge"):
        apply_parallel_swap(g, identity(4), [(0, 2)])
    with pytest.raises(ValueError, match="not a matching"):
        ParallelSwapSequence.of([[(0, 1), (1, 2)]])


def test_move_count_basics():
    g = make_family("path", n=2)
    f = (1, 0)
    empty = SwapSequence(())
    assert move_count(g, f, empty, 0) == 0
    seq = SwapSequence.of([(0, 1)])
    assert move_count(g, f, seq, 0) == 1
    assert move_count(g, f, seq, 1) == 1
    with pytest.raises(ValueError, match="unknown token"):
        move_count(g, f, seq, 5)


def test_move_count_sums_to_twice_length():
    rng = random.Random(7)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 6))
        f = random_configuration(rng, g.n)
        edges = sorted(g.edges)
        seq = SwapSequence.of([rng.choice(edges) for _ in range(rng.randint(0, 8))])
        total = sum(move_count(g, f, seq, t) for t in range(g.n))
        assert total == 2 * len(seq)


def test_orbits():
    assert orbits(identity(5)) == ((0,), (1,), (2,), (3,), (4,))
    assert orbits((1, 0, 2)) == ((0, 1), (2,))
    _, f = square_graph()
    assert orbits(f) == ((0, 3), (1, 2))


def test_distances():
    p5 = make_family("path", n=5)
    d = distances(p5)
    assert d[0][4] == 4
    lol = make_family("lollipop", m=3, n=2)
    dl = distances(lol)
    for a in range(-3, 1):
        for b in range(a + 1, 1):
            assert dl[lol.vertex_of_label(a)][lol.vertex_of_label(b)] == 1
    disconnected = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="components"):
        distances(disconnected)


def test_make_family_shapes():
    lol = make_family("lollipop", m=2, n=1)
    labeled = {tuple(sorted((lol.label_of(u), lol.label_of(v)))) for u, v in lol.edges}
    assert labeled == {(-2, -1), (-2, 0), (-1, 0), (0, 1)}
    star = make_family("starpath", m=2, n=1)
    labeled = {tuple(sorted((star.label_of(u), star.label_of(v)))) for u, v in star.edges}
    assert labeled == {(-1, 0), (-2, 0), (0, 1)}
    assert len(make_family("path", n=4).edges) == 3
    for m in (1, 2, 3, 4):
        for n in (0, 1, 2, 3):
            assert len(make_family("lollipop", m=m, n=n).edges) == m * (m + 1) // 2 + n
            assert len(make_family("starpath", m=m, n=n).edges) == m + n
    with pytest.raises(ValueError):
        make_family("lollipop", m=0, n=1)
    with pytest.raises(ValueError):
        make_family("cycle", n=2)
    with pytest.raises(ValueError):
        make_family("nonesuch", n=3)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1)], labels={0: "a"})
    with pytest.raises(ValueError):
        Graph(2, [(0, 1)], labels={0: "a", 1: "a"})


def test_detect_family():
    assert core.detect_family(make_family("lollipop", m=3, n=2)) == ("lollipop", 3, 2)
    assert core.detect_family(make_family("starpath", m=3, n=2)) == ("starpath", 3, 2)
    assert core.detect_family(make_family("path", n=5)) == ("path", 5)
    assert core.detect_family(Graph(3, [(0, 1), (1, 2)])) is None


def test_verify_reports_first_violation():
    g, f = square_graph()
    inst = Instance(kind="ts", graph=g, tokens=f)
    good = SwapSequence.of([(2, 3), (0, 2), (1, 3), (2, 3)])
    assert verify(inst, good).ok
    truncated = SwapSequence(good.steps[:-1])
    res = verify(inst, truncated)
    assert not res.ok and res.reason == "final configuration not identity"
    res = verify(inst, SwapSequence.of([(0, 3)]))
    assert not res.ok and res.step == 0 and "not an edge" in res.reason


def test_verify_identity_with_empty_solution():
    g, _ = square_graph()
    inst = Instance(kind="ts", graph=g, tokens=identity(4))
    assert verify(inst, SwapSequence(())).ok


def test_verify_rejects_mismatched_kinds():
    g, f = square_graph()
    inst = Instance(kind="ts", graph=g, tokens=f)
    with pytest.raises(ValueError, match="single-swap"):
        verify(inst, ParallelSwapSequence.of([[(0, 1)]]))
    rinst = Instance(kind="rvm", graph=g, tokens=f)
    with pytest.raises(ValueError, match="parallel"):
        verify(rinst, SwapSequence.of([(0, 1)]))


def test_colored_instance_consistency():
    g = make_family("path", n=3)
    with pytest.raises(ValueError, match="consistent"):
        Instance(kind="crvm", graph=g, colors=(1, 1, 2), goal_colors=(2, 2, 1))
    inst = Instance(kind="crvm", graph=g, colors=(2, 1, 1), goal_colors=(1, 1, 2))
    sol = ParallelSwapSequence.of([[(0, 1)], [(1, 2)]])
    assert verify(inst, sol).ok
