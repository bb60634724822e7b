"""Exact token swapping on lollipop graphs (clique glued to a path).

The solver places tokens n,..,1,0,-1,..,-m greedily along shortest paths;
its optimality certificate is a potential that every swap changes by exactly
one and that the emitted swaps always decrease.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Graph, Configuration, SwapSequence,
    check_configuration, lollipop_graph, signed_label_shape,
)


@dataclass(frozen=True)
class PseudoConfiguration:
    """Partial placement (ivec; jvec): tokens on vertices -1..-m, then 0,1,...

    ivec[r-1] is the token on vertex -r.  Entries are distinct and every
    negative token -m..-1 appears somewhere in ivec + jvec.
    """

    ivec: tuple[int, ...]
    jvec: tuple[int, ...]

    def __post_init__(self):
        m = len(self.ivec)
        if m < 1:
            raise ValueError("pseudo configuration needs a nonempty ivec")
        entries = self.ivec + self.jvec
        if len(set(entries)) != len(entries):
            raise ValueError("pseudo configuration entries must be distinct")
        if not set(range(-m, 0)) <= set(entries):
            raise ValueError("all negative tokens must appear in the pseudo configuration")


def require_lollipop(g: Graph) -> tuple[int, int]:
    """Return (m, n) or raise if g is not a labeled lollipop graph."""
    shape = signed_label_shape(g)
    if shape is None:
        raise ValueError("not a lollipop graph: missing signed labels -m..n")
    m, n = shape
    if g != lollipop_graph(m, n):
        raise ValueError(f"not a lollipop graph: edge set differs from L_{{{m},{n}}}")
    return m, n


def signed_views(g: Graph, f: Configuration) -> tuple[dict[int, int], dict[int, int]]:
    """Maps token-label -> vertex-label and vertex-label -> token-label."""
    pos: dict[int, int] = {}
    on: dict[int, int] = {}
    for v, t in enumerate(f):
        lv = g.labels[v]
        lt = g.labels[t]
        pos[lt] = lv
        on[lv] = lt
    return pos, on


def split_config(g: Graph, f: Configuration) -> PseudoConfiguration:
    """View a full configuration as the pseudo configuration (ivec; jvec)."""
    shape = signed_label_shape(g)
    if shape is None:
        raise ValueError("graph has no signed labels -m..n")
    m, n = shape
    check_configuration(g, f)
    _, on = signed_views(g, f)
    return PseudoConfiguration(tuple(on[-r] for r in range(1, m + 1)),
                               tuple(on[j] for j in range(0, n + 1)))


def inversions(pos: dict[int, int], j: int) -> int:
    """Tokens smaller than j currently sitting on a larger vertex than j's."""
    pj = pos[j]
    return sum(1 for i, pi in pos.items() if i < j and pi > pj)


def placement_cost_signed(pos: dict[int, int], n: int) -> int:
    total = 0
    for j in range(0, n + 1):
        if pos[j] < 0:
            total += j + 1
        else:
            total += min(j + 1, inversions(pos, j))
    return total


def placement_cost(g: Graph, f: Configuration) -> int:
    """Swaps needed to walk the non-negative tokens to their goal vertices.

    Token j costs j+1 if it sits in the clique, else the smaller of j+1 and
    its inversion count.
    """
    _, n = require_lollipop(g)
    check_configuration(g, f)
    pos, _ = signed_views(g, f)
    return placement_cost_signed(pos, n)


def substitute(seq: tuple[int, ...], new: int, old: int) -> tuple[int, ...]:
    """Total substitution [new/old]: replace the value old by new."""
    return tuple(new if x == old else x for x in seq)


def _clique_cycle_count(ivec: tuple[int, ...]) -> int:
    """Cycles of the permutation -r -> ivec[r-1] on the negative vertices."""
    m = len(ivec)
    seen: set[int] = set()
    cycles = 0
    for start in range(-m, 0):
        if start in seen:
            continue
        cycles += 1
        v = start
        while v not in seen:
            seen.add(v)
            v = ivec[-v - 1]
    return cycles


def clique_sort_cost(pc: PseudoConfiguration) -> int:
    """Swaps needed inside the clique once the path tokens are placed.

    Recursion on jvec: a head smaller than the largest clique entry displaces
    that entry; otherwise the head is dropped.  The base case is the classic
    size-minus-cycles transposition count on the clique.
    """
    ivec = pc.ivec
    for head in pc.jvec:
        c = max(ivec)
        if c > head:
            ivec = substitute(ivec, head, c)
    return len(ivec) - _clique_cycle_count(ivec)


def potential(g: Graph, f: Configuration) -> int:
    """Exact token swapping optimum on a lollipop graph."""
    return placement_cost(g, f) + clique_sort_cost(split_config(g, f))


def solve_lollipop(g: Graph, f: Configuration) -> SwapSequence:
    """Optimal swap sequence: place tokens n,..,0, then resolve the clique.

    A path-bound token in the clique exits via vertex 0 (adjacent to every
    clique vertex) and then walks right; clique tokens go home in one swap.
    """
    m, n = require_lollipop(g)
    check_configuration(g, f)
    pos, on = signed_views(g, f)
    steps: list[tuple[int, int]] = []

    def swap(a: int, b: int) -> None:
        ta, tb = on[a], on[b]
        on[a], on[b] = tb, ta
        pos[ta], pos[tb] = b, a
        steps.append((g.vertex_of_label(a), g.vertex_of_label(b)))

    for k in range(n, -m - 1, -1):
        p = pos[k]
        if p == k:
            continue
        if k >= 0:
            if p < 0:
                swap(p, 0)
                p = 0
            while p < k:
                swap(p, p + 1)
                p += 1
        else:
            swap(p, k)
    assert all(pos[t] == t for t in pos)
    return SwapSequence.of(steps)
