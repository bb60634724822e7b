import itertools
import random

import pytest

from swaproute import core, oracle
from swaproute.core import apply_swap, identity, make_family, verify_ts
from swaproute.lollipop import PseudoConfiguration
from swaproute.starpath import (
    center_discount, drain_center, leaf_cost, potential, require_starpath,
    solve_starpath,
)

from conftest import config_from_label_map, swap_tokens


def test_leaf_cost_pinned():
    g = make_family("starpath", m=2, n=1)
    assert leaf_cost(g, identity(g.n)) == 0
    # both leaf tokens misplaced and they form a closed orbit: 2 + 1
    assert leaf_cost(g, swap_tokens(g, -1, -2)) == 3
    # token -1 out on the path: misplaced but its orbit leaves the leaves
    assert leaf_cost(g, swap_tokens(g, -1, 1)) == 1


def test_center_discount_pinned():
    assert center_discount(PseudoConfiguration((-1, -2), (0, 1))) == 0
    assert center_discount(PseudoConfiguration((1, -2), (-1,))) == -1
    # a head larger than every leaf entry is dropped without effect; the
    # following -2 then drains through and displaces the maximum once
    assert center_discount(PseudoConfiguration((0, -1), (5, -2))) == -1


def test_drain_center_pinned():
    assert drain_center((3, -1), 5) == ((3, -1), 5)
    assert drain_center((3, -1), -2) == ((-1, -2), 3)
    assert drain_center((5, 7), -1) == ((-1, 7), 5)


def test_potential_and_solver_pinned():
    g = make_family("starpath", m=2, n=1)
    assert potential(g, identity(g.n)) == 0
    assert len(solve_starpath(g, identity(g.n))) == 0
    f = swap_tokens(g, -1, -2)
    seq = solve_starpath(g, f)
    assert potential(g, f) == 3 == len(seq) == oracle.ts_oracle(g, f)[0]
    assert verify_ts(g, f, seq).ok

    g = make_family("starpath", m=2, n=2)
    f = swap_tokens(g, 1, 2)
    seq = solve_starpath(g, f)
    assert len(seq) == potential(g, f) == oracle.ts_oracle(g, f)[0]
    assert verify_ts(g, f, seq).ok


def test_rejects_non_starpath():
    lol = make_family("lollipop", m=3, n=2)
    with pytest.raises(ValueError, match="star-path"):
        require_starpath(lol)
    with pytest.raises(ValueError, match="star-path"):
        potential(lol, identity(lol.n))


def test_single_swap_changes_potential_by_one():
    rng = random.Random(6)
    for _ in range(300):
        m = rng.randint(1, 5)
        n = rng.randint(0, 5)
        g = make_family("starpath", m=m, n=n)
        tokens = list(range(g.n))
        rng.shuffle(tokens)
        f = tuple(tokens)
        e = rng.choice(sorted(g.edges))
        assert abs(potential(g, apply_swap(g, f, e)) - potential(g, f)) == 1


def test_solver_swaps_decrement_potential():
    rng = random.Random(8)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(0, 4)
        g = make_family("starpath", m=m, n=n)
        tokens = list(range(g.n))
        rng.shuffle(tokens)
        f = tuple(tokens)
        value = potential(g, f)
        cur = f
        for e in solve_starpath(g, f):
            cur = apply_swap(g, cur, e)
            nxt = potential(g, cur)
            assert nxt == value - 1
            value = nxt
        assert value == 0


def test_exhaustive_small_graphs_match_oracle():
    for m, n in ((1, 2), (2, 2), (3, 1)):
        g = make_family("starpath", m=m, n=n)
        table = oracle.ts_all(g)
        for f in itertools.permutations(range(g.n)):
            seq = solve_starpath(g, f)
            assert len(seq) == potential(g, f) == table[f]
            assert verify_ts(g, f, seq).ok


def test_leaf_token_on_path_case():
    # token -1 parked on the path at distance 2 while token 2 waits on the leaf
    g = make_family("starpath", m=1, n=3)
    f = config_from_label_map(g, {2: -1, -1: 2})
    assert potential(g, f) == oracle.ts_oracle(g, f)[0] == len(solve_starpath(g, f))
