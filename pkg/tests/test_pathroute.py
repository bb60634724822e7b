import random

import pytest

from swaproute import core, oracle
from swaproute.core import (
    ParallelSwapSequence, apply_parallel_sequence, identity, make_family,
    verify_rvm,
)
from swaproute.pathroute import (
    ap_solve, endpoint_schedule, endpoint_swap_config, is_reasonable,
    oe_transform, require_path,
)

from conftest import random_configuration


def one_based(labels):
    return tuple(x - 1 for x in labels)


def replay(g, f, seq):
    traces = [f]
    for step in seq:
        traces.append(core.apply_parallel_swap(g, traces[-1], step))
    return traces


def test_worked_example_trace():
    g = make_family("path", n=7)
    f0 = one_based((3, 2, 5, 1, 7, 6, 4))
    seq = ap_solve(g, f0)
    assert len(seq) == 4
    traces = replay(g, f0, seq)
    assert traces[1] == one_based((2, 3, 1, 5, 6, 7, 4))
    assert traces[2] == one_based((2, 1, 3, 5, 6, 4, 7))
    assert traces[3] == one_based((1, 2, 3, 5, 4, 6, 7))
    assert traces[4] == identity(7)
    assert oracle.rt_oracle(g, f0)[0] == 3


def test_ap_solve_identity_and_reversal():
    g = make_family("path", n=4)
    assert len(ap_solve(g, identity(4))) == 0
    f = (3, 2, 1, 0)
    seq = ap_solve(g, f)
    assert verify_rvm(g, f, seq).ok
    rt = oracle.rt_oracle(g, f)[0]
    assert rt <= len(seq) <= rt + 1


def test_ap_solve_output_is_odd_even_and_reasonable():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(2, 8)
        g = make_family("path", n=n)
        f = random_configuration(rng, n)
        seq = ap_solve(g, f)
        assert verify_rvm(g, f, seq).ok
        assert is_reasonable(g, f, seq)
        for j, step in enumerate(seq, 1):
            for u, _ in step:
                assert (u + j) % 2 == 1  # 1-based position u+1 plus j is even


def test_rejects_non_path():
    g = core.Graph(3, [(0, 1), (0, 2)])
    with pytest.raises(ValueError, match="path"):
        require_path(g)
    with pytest.raises(ValueError, match="path"):
        ap_solve(g, identity(3))


def test_is_reasonable():
    g = make_family("path", n=3)
    assert not is_reasonable(g, identity(3), ParallelSwapSequence.of([[(0, 1)]]))
    assert is_reasonable(g, (1, 0, 2), ParallelSwapSequence.of([[(0, 1)]]))


def test_worked_example_optimal_solution_is_reasonable():
    g = make_family("path", n=7)
    f0 = one_based((3, 2, 5, 1, 7, 6, 4))
    opt = ParallelSwapSequence.of([
        [(0, 1), (2, 3), (5, 6)],
        [(1, 2), (4, 5)],
        [(0, 1), (3, 4), (5, 6)],
    ])
    assert verify_rvm(g, f0, opt).ok
    assert is_reasonable(g, f0, opt)


def test_oe_transform_trivial_cases():
    g = make_family("path", n=4)
    out = oe_transform(g, ParallelSwapSequence(()))
    assert out.steps == ((),)
    # a single swap at even 1-based position is pure delay
    out = oe_transform(g, ParallelSwapSequence.of([[(1, 2)]]))
    assert out.steps == ((), ((1, 2),))


def test_oe_transform_on_optimal_example():
    g = make_family("path", n=7)
    f0 = one_based((3, 2, 5, 1, 7, 6, 4))
    opt = ParallelSwapSequence.of([
        [(0, 1), (2, 3), (5, 6)],
        [(1, 2), (4, 5)],
        [(0, 1), (3, 4), (5, 6)],
    ])
    out = oe_transform(g, opt)
    assert len(out) == len(opt) + 1
    assert apply_parallel_sequence(g, f0, out) == identity(7)
    for j, step in enumerate(out, 1):
        for u, _ in step:
            assert (u + j) % 2 == 1


def random_reasonable_sequence(rng, g, f):
    steps = []
    cur = f
    while not core.is_identity(cur):
        inversions = [(u, u + 1) for u in range(g.n - 1) if cur[u] > cur[u + 1]]
        chosen = []
        used = set()
        for e in inversions:
            if e[0] not in used and e[1] not in used and rng.random() < 0.7:
                chosen.append(e)
                used.update(e)
        if not chosen:
            chosen = [rng.choice(inversions)]
        cur = core.apply_parallel_swap(g, cur, chosen)
        steps.append(tuple(chosen))
    return ParallelSwapSequence(tuple(steps))


def test_oe_transform_preserves_effect_of_reasonable_sequences():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randint(2, 8)
        g = make_family("path", n=n)
        f = random_configuration(rng, n)
        seq = random_reasonable_sequence(rng, g, f)
        out = oe_transform(g, seq)
        assert len(out) == len(seq) + 1
        assert apply_parallel_sequence(g, f, out) == identity(n)


def test_oe_transform_rejects_shared_edges():
    g = make_family("path", n=4)
    seq = ParallelSwapSequence.of([[(0, 1)], [(0, 1)]])
    with pytest.raises(ValueError, match="share an edge"):
        oe_transform(g, seq)


def test_endpoint_schedule_lengths_and_validity():
    assert len(endpoint_schedule(2)) == 1
    assert len(endpoint_schedule(4)) == 3
    assert len(endpoint_schedule(5)) == 5
    with pytest.raises(ValueError):
        endpoint_schedule(1)
    for n in range(2, 12):
        g = make_family("path", n=n)
        f = endpoint_swap_config(n)
        assert verify_rvm(g, f, endpoint_schedule(n)).ok


def test_greedy_never_longer_than_odd_even_solutions():
    # the transform of any reasonable solution is odd-even, so the greedy
    # schedule can be at most as long
    rng = random.Random(19)
    for _ in range(20):
        n = rng.randint(2, 7)
        g = make_family("path", n=n)
        f = random_configuration(rng, n)
        seq = random_reasonable_sequence(rng, g, f)
        assert len(ap_solve(g, f)) <= len(oe_transform(g, seq))
