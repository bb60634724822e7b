"""Acceptance suite: one criterion per test, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the whole suite is sized to finish in a few minutes.
"""

import itertools
import random
from contextlib import contextmanager

from swaproute import core, oracle
from swaproute.core import (
    make_family, verify, verify_colored, verify_rvm, verify_ts,
)
from swaproute.lollipop import potential as lollipop_potential
from swaproute.lollipop import solve_lollipop
from swaproute.starpath import potential as starpath_potential
from swaproute.starpath import solve_starpath
from swaproute.pathroute import (
    ap_solve, endpoint_schedule, endpoint_swap_config,
)
from swaproute.twostep import decide_rt2, decide_rt2_2colored
from swaproute import reductions as rd

from conftest import random_configuration, random_connected_graph


@contextmanager
def criterion(num: int, desc: str):
    try:
        yield
    except BaseException:
        print(f"criterion {num:2d} [FAIL] {desc}")
        raise
    print(f"criterion {num:2d} [PASS] {desc}")


def sweep_sizes():
    return [(m, n) for m in (2, 3, 4) for n in (0, 1, 2, 3) if m + n + 1 <= 8]


def test_criterion_1_lollipop_exactness():
    with criterion(1, "lollipop solver length = potential = exhaustive optimum"):
        for m, n in sweep_sizes():
            g = make_family("lollipop", m=m, n=n)
            table = oracle.ts_all(g)
            for f in itertools.permutations(range(g.n)):
                seq = solve_lollipop(g, f)
                assert len(seq) == lollipop_potential(g, f) == table[f], (m, n, f)
                assert verify_ts(g, f, seq).ok


def test_criterion_2_starpath_exactness():
    with criterion(2, "star-path solver length = potential = exhaustive optimum"):
        for m, n in sweep_sizes():
            g = make_family("starpath", m=m, n=n)
            table = oracle.ts_all(g)
            for f in itertools.permutations(range(g.n)):
                seq = solve_starpath(g, f)
                assert len(seq) == starpath_potential(g, f) == table[f], (m, n, f)
                assert verify_ts(g, f, seq).ok


def test_criterion_3_potential_step_property():
    with criterion(3, "any swap changes each potential by exactly one"):
        rng = random.Random(101)
        for kind, potential in (("lollipop", lollipop_potential),
                                ("starpath", starpath_potential)):
            for _ in range(10_000):
                m = rng.randint(1, 6)
                n = rng.randint(0, 11 - m)  # m + n + 1 <= 12
                g = make_family(kind, m=m, n=n)
                f = random_configuration(rng, g.n)
                e = rng.choice(sorted(g.edges))
                fe = core.apply_swap(g, f, e)
                assert abs(potential(g, fe) - potential(g, f)) == 1, (kind, m, n, f, e)


def test_criterion_4_path_plus_one_approximation():
    with criterion(4, "odd-even greedy is within +1 of optimal on all of P_7"):
        g = make_family("path", n=7)
        table = oracle.rt_all(g)
        for f in itertools.permutations(range(7)):
            seq = ap_solve(g, f)
            assert verify_rvm(g, f, seq).ok
            assert table[f] <= len(seq) <= table[f] + 1, f
        # the worked example: 4 greedy steps vs 3 optimal, exact trace
        f0 = tuple(x - 1 for x in (3, 2, 5, 1, 7, 6, 4))
        seq = ap_solve(g, f0)
        assert len(seq) == 4 and table[f0] == 3
        cur = f0
        trace = []
        for step in seq:
            cur = core.apply_parallel_swap(g, cur, step)
            trace.append(tuple(x + 1 for x in cur))
        assert trace == [
            (2, 3, 1, 5, 6, 7, 4),
            (2, 1, 3, 5, 6, 4, 7),
            (1, 2, 3, 5, 4, 6, 7),
            (1, 2, 3, 4, 5, 6, 7),
        ]


def test_criterion_5_endpoint_swap_law():
    with criterion(5, "endpoint-swap optimum is n-1 (even) / n (odd); schedules verify to n=50"):
        for n in (2, 4, 6):
            g = make_family("path", n=n)
            assert oracle.rt_oracle(g, endpoint_swap_config(n))[0] == n - 1
        for n in (3, 5, 7):
            g = make_family("path", n=n)
            assert oracle.rt_oracle(g, endpoint_swap_config(n))[0] == n
        for n in range(2, 51):
            g = make_family("path", n=n)
            f = endpoint_swap_config(n)
            seq = endpoint_schedule(n)
            assert len(seq) == (n - 1 if n % 2 == 0 else n)
            assert verify_rvm(g, f, seq).ok


def test_criterion_6_two_step_decisions_agree_with_oracle():
    with criterion(6, "2-step decisions agree with the oracle on 200 + 200 random instances"):
        rng = random.Random(202)
        for _ in range(200):
            g = random_connected_graph(rng, rng.randint(2, 8))
            f = random_configuration(rng, g.n)
            yes, witness = decide_rt2(g, f)
            assert yes == (oracle.rt_oracle(g, f, max_depth=2) is not None), (g.edges, f)
            if yes:
                assert len(witness) <= 2 and verify_rvm(g, f, witness).ok
        for _ in range(200):
            g = random_connected_graph(rng, rng.randint(2, 8))
            colors = tuple(rng.choice((1, 2)) for _ in range(g.n))
            goal = list(colors)
            rng.shuffle(goal)
            goal = tuple(goal)
            yes, witness = decide_rt2_2colored(g, colors, goal)
            exact = oracle.rt_colored_oracle(g, colors, goal, max_depth=2)
            assert yes == (exact is not None), (g.edges, colors, goal)
            if yes:
                assert verify_colored(g, colors, goal, witness).ok


def paper_3dm_example() -> rd.ThreeDMInstance:
    return rd.ThreeDMInstance(2, ((1, 1, 1), (1, 1, 2), (2, 2, 2)))


def example_formula() -> rd.SepSatInstance:
    return rd.SepSatInstance(
        3,
        (frozenset({1, 2}), frozenset({3})),
        (frozenset({1}), frozenset({2, 3})),
        (frozenset({-1, -2, -3}),),
    )


def tiny_unsat_formula() -> rd.SepSatInstance:
    return rd.SepSatInstance(1, (frozenset({1}),), (frozenset({1}),), (frozenset({-1}),))


def test_criterion_7_3dm_reduction():
    with criterion(7, "3DM example maps to a verified 42-swap solution matching the lower bound"):
        inst = paper_3dm_example()
        out = rd.reduce_3dm_ts(inst)
        seq = rd.map_3dm_solution(inst, [1, 3])
        assert len(seq) == 42 == 21 * inst.n
        assert verify(out.instance(), seq).ok
        audit = rd.audit_3dm_map(inst, [1, 3])
        assert audit["lower_bound"] == 42
        assert all(audit["moves"][t] == 5 for t in audit["pair_tokens"])
        assert out.certificate.bipartite and out.certificate.max_degree == 3


def test_criterion_8_sepsat_rvm_reduction():
    with criterion(8, "satisfiable example admits a 3-step schedule; unsatisfiable one does not"):
        F = example_formula()
        out = rd.reduce_sepsat_rvm(F, 3)
        sol = rd.map_assignment_rvm(F, {1: True, 2: False, 3: True}, 3)
        assert len(sol) == 3
        assert verify(out.instance(), sol).ok
        bad = rd.reduce_sepsat_rvm(tiny_unsat_formula(), 3)
        assert oracle.rt_oracle(bad.graph, bad.tokens, max_depth=3) is None


def test_criterion_9_3sat_to_sepsat_equisatisfiable():
    with criterion(9, "100 random 3-CNFs are equisatisfiable with their separated forms"):
        rng = random.Random(303)
        for _ in range(100):
            nv = rng.randint(1, 5)
            literals = [x for v in range(1, nv + 1) for x in (v, -v)]
            clauses = [frozenset(rng.sample(literals, rng.randint(1, min(3, len(literals)))))
                       for _ in range(rng.randint(1, 8))]
            red = rd.reduce_3sat_sepsat(clauses, nv)
            F = red.instance
            orig = rd.satisfying_assignment(clauses, nv)
            new = rd.satisfying_assignment(list(F.clauses), F.num_vars)
            assert (orig is None) == (new is None), clauses
            if orig is not None:
                assert F.violated_clause(red.forward(orig)) is None


def test_criterion_10_colored_gadgets():
    with criterion(10, "colored forward maps verify; unsatisfiable 2-step instance is refuted"):
        F = example_formula()
        phi = {1: True, 2: False, 3: True}
        out2 = rd.reduce_sepsat_2c3(F)
        sol2 = rd.map_assignment_2c3(F, phi)
        assert len(sol2) == 3 and verify(out2.instance(), sol2).ok
        out3 = rd.reduce_sepsat_3c2(F)
        sol3 = rd.map_assignment_3c2(F, phi)
        assert len(sol3) == 2 and verify(out3.instance(), sol3).ok
        bad = rd.reduce_sepsat_3c2(tiny_unsat_formula())
        assert oracle.rt_colored_oracle(bad.graph, bad.colors, bad.goal_colors,
                                        max_depth=2) is None


def test_criterion_11_counting_gadget():
    with criterion(11, "duplication gadget carries 2 / 4 structured 2-step solutions"):
        single = core.Graph(2, [(0, 1)])
        sols = rd.structured_gadget_solutions(single)
        g, f = rd.build_counting_gadget(single)
        enumerated = set(oracle.two_step_solutions(g, f))
        assert len(sols) == 2
        assert all(s in enumerated for s in sols)
        c4 = core.cycle_graph(4)
        sols = rd.structured_gadget_solutions(c4)
        g, f = rd.build_counting_gadget(c4)
        enumerated = set(oracle.two_step_solutions(g, f))
        assert len(sols) == 4
        assert all(s in enumerated for s in sols)
        for s, t in sols:
            assert verify_rvm(g, f, core.ParallelSwapSequence((s, t))).ok


def test_criterion_12_universal_verifier_law():
    with criterion(12, "every emitted solution passes the verifier"):
        rng = random.Random(404)
        for _ in range(50):
            m, n = rng.randint(1, 4), rng.randint(0, 4)
            g = make_family("lollipop", m=m, n=n)
            f = random_configuration(rng, g.n)
            assert verify_ts(g, f, solve_lollipop(g, f)).ok
            g = make_family("starpath", m=m, n=n)
            f = random_configuration(rng, g.n)
            assert verify_ts(g, f, solve_starpath(g, f)).ok
            g = make_family("path", n=rng.randint(2, 9))
            f = random_configuration(rng, g.n)
            assert verify_rvm(g, f, ap_solve(g, f)).ok
        for n in range(2, 20):
            assert verify_rvm(make_family("path", n=n), endpoint_swap_config(n),
                              endpoint_schedule(n)).ok
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 7))
            f = random_configuration(rng, g.n)
            yes, witness = decide_rt2(g, f)
            if yes:
                assert verify_rvm(g, f, witness).ok
            _, seq = oracle.ts_oracle(g, f)
            assert verify_ts(g, f, seq).ok
            _, pseq = oracle.rt_oracle(g, f)
            assert verify_rvm(g, f, pseq).ok
        inst = paper_3dm_example()
        assert verify(rd.reduce_3dm_ts(inst).instance(),
                      rd.map_3dm_solution(inst, [1, 3])).ok
        F = example_formula()
        phi = {1: True, 2: False, 3: True}
        for build, mapper, budget in (
            (lambda: rd.reduce_sepsat_rvm(F, 3), lambda: rd.map_assignment_rvm(F, phi, 3), 3),
            (lambda: rd.reduce_sepsat_rvm(F, 5), lambda: rd.map_assignment_rvm(F, phi, 5), 5),
            (lambda: rd.reduce_sepsat_rvm_deg3(F), lambda: rd.map_assignment_rvm_deg3(F, phi), 5),
            (lambda: rd.reduce_sepsat_2c3(F), lambda: rd.map_assignment_2c3(F, phi), 3),
            (lambda: rd.reduce_sepsat_3c2(F), lambda: rd.map_assignment_3c2(F, phi), 2),
        ):
            out = build()
            sol = mapper()
            assert len(sol) == budget
            assert verify(out.instance(), sol).ok
