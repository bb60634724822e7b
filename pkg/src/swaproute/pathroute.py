"""Routing via matchings on paths: odd-even greedy, delay transform, schedules.

Vertices of a path are ids 0..n-1 in path order; the 1-based labels of the
path family make solver traces line up with 1-based sequence notation.
"""

from __future__ import annotations

from .core import (
    Graph, Configuration, Edge, ParallelSwapSequence,
    check_configuration, is_identity,
)


def require_path(g: Graph) -> int:
    """Return n or raise if g is not a path with vertices in path order."""
    n = g.n
    expected = frozenset((i, i + 1) for i in range(n - 1))
    if g.edges != expected:
        raise ValueError("not a path graph with consecutively ordered vertices")
    return n


def ap_solve(g: Graph, f: Configuration) -> ParallelSwapSequence:
    """Greedy odd-even schedule; at most one step longer than optimal.

    Step j swaps every adjacent inversion {i, i+1} whose 1-based position
    matches the step parity (i + j even).  The output is reasonable: every
    swap it makes exchanges an inversion.
    """
    n = require_path(g)
    check_configuration(g, f)
    cur = tuple(f)
    steps: list[tuple[Edge, ...]] = []
    safety = n * (n - 1) // 2 + 1
    j = 0
    while not is_identity(cur):
        j += 1
        if j > safety:
            raise AssertionError("odd-even greedy failed to terminate")
        step = tuple((u, u + 1) for u in range(n - 1)
                     if cur[u] > cur[u + 1] and (u + j) % 2 == 1)
        out = list(cur)
        for u, v in step:
            out[u], out[v] = out[v], out[u]
        cur = tuple(out)
        steps.append(step)
    return ParallelSwapSequence(tuple(steps))


def is_reasonable(g: Graph, f: Configuration, seq: ParallelSwapSequence) -> bool:
    """True iff every swap of seq exchanges an inversion when it is applied."""
    check_configuration(g, f)
    cur = list(f)
    for step in seq:
        for u, v in step:
            a, b = (u, v) if u < v else (v, u)
            if cur[a] <= cur[b]:
                return False
        for u, v in step:
            cur[u], cur[v] = cur[v], cur[u]
    return True


def oe_transform(g: Graph, seq: ParallelSwapSequence) -> ParallelSwapSequence:
    """Delay parity-violating swaps by one step; same effect, one step longer.

    Requires consecutive steps to share no edge (reasonable schedules always
    satisfy this).  Step j of the output keeps exactly the swaps of steps
    j and j-1 whose 1-based position i has i + j even.
    """
    require_path(g)
    steps = [tuple(sorted(step)) for step in seq.steps]
    for j in range(len(steps) - 1):
        if set(steps[j]) & set(steps[j + 1]):
            raise ValueError(f"steps {j} and {j + 1} share an edge")
    padded: list[tuple[Edge, ...]] = [()] + steps + [()]
    out = []
    for j in range(1, len(steps) + 2):
        pool = set(padded[j - 1]) | set(padded[j])
        out.append(tuple(sorted((u, v) for (u, v) in pool if (u + j) % 2 == 1)))
    return ParallelSwapSequence(tuple(out))


def endpoint_swap_config(n: int) -> Configuration:
    """Identity except the two endpoint tokens are exchanged."""
    if n < 2:
        raise ValueError("endpoint swap needs n >= 2")
    f = list(range(n))
    f[0], f[n - 1] = f[n - 1], f[0]
    return tuple(f)


def endpoint_schedule(n: int) -> ParallelSwapSequence:
    """Explicit optimal schedule for the endpoint-swapped path: n-1 steps for
    even n, n steps for odd n."""
    if n < 2:
        raise ValueError("endpoint schedule needs n >= 2")
    steps: list[tuple[Edge, ...]] = []
    if n % 2 == 0:
        for i in range(1, n):
            pair = {(i - 1, i), (n - i - 1, n - i)}
            steps.append(tuple(sorted(pair)))
    else:
        steps.append(((0, 1),))
        for i in range(2, n):
            pair = {(i - 1, i), (n - i, n - i + 1)}
            steps.append(tuple(sorted(pair)))
        steps.append(((0, 1),))
    return ParallelSwapSequence(tuple(steps))
