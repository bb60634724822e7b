"""Exact token swapping on star-path graphs (star glued to a path).

The potential adds a leaf-relocation cost and a center discount to the path
placement cost shared with the lollipop solver; the solver is the literal
two-loop procedure: drain misplaced leaf tokens through the center, then
place the next target token.
"""

from __future__ import annotations

from .core import (
    Graph, Configuration, SwapSequence,
    check_configuration, signed_label_shape, starpath_graph,
)
from .lollipop import (
    PseudoConfiguration, placement_cost_signed, signed_views, split_config,
)


def require_starpath(g: Graph) -> tuple[int, int]:
    """Return (m, n) or raise if g is not a labeled star-path graph."""
    shape = signed_label_shape(g)
    if shape is None:
        raise ValueError("not a star-path graph: missing signed labels -m..n")
    m, n = shape
    if g != starpath_graph(m, n):
        raise ValueError(f"not a star-path graph: edge set differs from Q_{{{m},{n}}}")
    return m, n


def placement_cost(g: Graph, f: Configuration) -> int:
    """Path placement cost; same formula as on lollipop graphs."""
    _, n = require_starpath(g)
    check_configuration(g, f)
    pos, _ = signed_views(g, f)
    return placement_cost_signed(pos, n)


def leaf_cost(g: Graph, f: Configuration) -> int:
    """Misplaced negative tokens plus the orbits made entirely of them."""
    m, _ = require_starpath(g)
    check_configuration(g, f)
    pos, on = signed_views(g, f)
    misplaced = {t for t in range(-m, 0) if pos[t] != t}
    closed_orbits = 0
    seen: set[int] = set()
    for start in range(-m, 0):
        if start in seen:
            continue
        orbit = set()
        v = start
        while v not in orbit:
            orbit.add(v)
            v = on[v]
        seen |= {x for x in orbit if x < 0}
        if orbit <= misplaced:
            closed_orbits += 1
    return len(misplaced) + closed_orbits


def drain_center(ivec: tuple[int, ...], a: int) -> tuple[tuple[int, ...], int]:
    """Send token a home through the center, carrying displaced leaf tokens.

    Simulates the inner loop of the solver: while the carried token is
    negative, park it on its leaf and pick up whatever was there.  Returns
    the updated leaf vector and the first non-negative carried token.
    """
    iv = list(ivec)
    for _ in range(len(iv) + 1):
        if a >= 0:
            return tuple(iv), a
        r = -a
        iv[r - 1], a = a, iv[r - 1]
    raise AssertionError("drain loop failed to terminate on a valid pseudo configuration")


def center_discount(pc: PseudoConfiguration) -> int:
    """Correction (<= 0) for path tokens that ride out of the star for free.

    Literal recursion on the pseudo configuration with c = max(ivec): stop at
    0 once the leaf vector holds only negative tokens; a non-negative head is
    dropped (displacing c when c is larger); a negative head swaps with the
    entry on its home leaf, discounting one swap exactly when that entry is c.
    """
    iv = list(pc.ivec)
    jv = list(pc.jvec)
    acc = 0
    idx = 0
    while True:
        c = max(iv)
        if c < 0:
            return acc
        if idx >= len(jv):
            raise ValueError("malformed pseudo configuration: leaf tokens unaccounted for")
        head = jv[idx]
        if head >= 0:
            if c > head:
                iv[iv.index(c)] = head
            idx += 1
        else:
            r = -head
            displaced = iv[r - 1]
            iv[r - 1] = head
            jv[idx] = displaced
            if displaced == c:
                acc -= 1


def potential(g: Graph, f: Configuration) -> int:
    """Exact token swapping optimum on a star-path graph."""
    pos, _ = signed_views(g, f)
    _, n = require_starpath(g)
    check_configuration(g, f)
    return (placement_cost_signed(pos, n) + leaf_cost(g, f)
            + center_discount(split_config(g, f)))


def solve_starpath(g: Graph, f: Configuration) -> SwapSequence:
    """Optimal swap sequence via the literal two-loop procedure.

    Before each placement, misplaced negative tokens on the center are sent
    home; then token k walks to vertex k (leaving a leaf via the center when
    needed; negative targets are fetched through the center in two swaps).
    """
    m, n = require_starpath(g)
    check_configuration(g, f)
    pos, on = signed_views(g, f)
    steps: list[tuple[int, int]] = []

    def swap(a: int, b: int) -> None:
        ta, tb = on[a], on[b]
        on[a], on[b] = tb, ta
        pos[ta], pos[tb] = b, a
        steps.append((g.vertex_of_label(a), g.vertex_of_label(b)))

    for k in range(n, -m - 1, -1):
        while on[0] < 0:
            swap(0, on[0])
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
            swap(p, 0)
            swap(0, k)
    assert all(pos[t] == t for t in pos)
    return SwapSequence.of(steps)
