"""Exhaustive exact solvers for small instances: the ground truth module.

Single-swap and parallel-swap optima are found by bidirectional BFS over
configurations; colored optima by BFS over colorings.  All entry points are
deterministic and guarded by an explicit node budget.
"""

from __future__ import annotations

from typing import Optional

from .core import (
    Graph, Configuration, Coloring, Edge,
    SwapSequence, ParallelSwapSequence,
    check_configuration, check_coloring, consistent_colorings,
    identity, is_identity,
)

DEFAULT_NODE_CAP = 10_000_000


class BudgetExceededError(RuntimeError):
    """Raised when a search would exceed its configured state budget."""


def all_matchings(g: Graph, include_empty: bool = False,
                  cap: int = 1_000_000) -> list[tuple[Edge, ...]]:
    """Enumerate the matchings of g as sorted edge tuples."""
    edges = sorted(g.edges)
    out: list[tuple[Edge, ...]] = [()] if include_empty else []
    stack: list[tuple[int, tuple[Edge, ...], frozenset[int]]] = [(0, (), frozenset())]
    while stack:
        start, chosen, used = stack.pop()
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            picked = chosen + (edges[i],)
            out.append(picked)
            if len(out) > cap:
                raise BudgetExceededError(f"more than {cap} matchings")
            stack.append((i + 1, picked, used | {u, v}))
    return out


def _apply_move(state: tuple, move: tuple[Edge, ...]) -> tuple:
    s = list(state)
    for u, v in move:
        s[u], s[v] = s[v], s[u]
    return tuple(s)


def _walk(parents: dict, meet: tuple, forward: bool) -> list:
    moves = []
    v = meet
    while parents[v] is not None:
        move, v = parents[v]
        moves.append(move)
    if forward:
        moves.reverse()
    return moves


def _bidirectional(start: tuple, goal: tuple, moves: list[tuple[Edge, ...]],
                   node_cap: int, max_depth: Optional[int]):
    """Shortest move sequence from start to goal; moves are involutions.

    Returns (distance, move list) or None when max_depth is given and
    exceeded.  Raises BudgetExceededError past node_cap visited states.
    """
    if start == goal:
        return 0, []
    fwd = {start: None}
    bwd = {goal: None}
    fwd_frontier, bwd_frontier = [start], [goal]
    depth = 0
    while fwd_frontier or bwd_frontier:
        depth += 1
        if max_depth is not None and depth > max_depth:
            return None
        # expand the smaller frontier; ties expand forward
        if not bwd_frontier or (fwd_frontier and len(fwd_frontier) <= len(bwd_frontier)):
            frontier, parents, other = fwd_frontier, fwd, bwd
            forward = True
        else:
            frontier, parents, other = bwd_frontier, bwd, fwd
            forward = False
        nxt = []
        for state in frontier:
            for move in moves:
                ns = _apply_move(state, move)
                if ns in parents:
                    continue
                parents[ns] = (move, state)
                if ns in other:
                    head = _walk(fwd, ns, forward=True)
                    tail = _walk(bwd, ns, forward=False)
                    return len(head) + len(tail), head + tail
                nxt.append(ns)
        if len(fwd) + len(bwd) > node_cap:
            raise BudgetExceededError(f"state budget {node_cap} exceeded")
        if forward:
            fwd_frontier = nxt
        else:
            bwd_frontier = nxt
        if not nxt:
            # this side is exhausted; the other side alone cannot meet it
            raise ValueError("goal unreachable from start")
    raise ValueError("goal unreachable from start")


def _require_solvable(g: Graph, f) -> None:
    if not g.is_connected():
        raise ValueError(f"graph disconnected; components: {g.components()}")


def ts_oracle(g: Graph, f: Configuration,
              node_cap: int = DEFAULT_NODE_CAP) -> tuple[int, SwapSequence]:
    """Exact minimum swap count and one optimal swap sequence."""
    check_configuration(g, f)
    if is_identity(f):
        return 0, SwapSequence(())
    _require_solvable(g, f)
    moves = [(e,) for e in sorted(g.edges)]
    dist, seq = _bidirectional(tuple(f), identity(g.n), moves, node_cap, None)
    return dist, SwapSequence(tuple(m[0] for m in seq))


def rt_oracle(g: Graph, f: Configuration, node_cap: int = DEFAULT_NODE_CAP,
              max_depth: Optional[int] = None
              ) -> Optional[tuple[int, ParallelSwapSequence]]:
    """Exact minimum number of parallel swap steps and one optimal schedule.

    With max_depth set, returns None when the optimum exceeds it.
    """
    check_configuration(g, f)
    if is_identity(f):
        return 0, ParallelSwapSequence(())
    _require_solvable(g, f)
    moves = all_matchings(g)
    res = _bidirectional(tuple(f), identity(g.n), moves, node_cap, max_depth)
    if res is None:
        return None
    dist, seq = res
    return dist, ParallelSwapSequence(tuple(seq))


def rt_colored_oracle(g: Graph, colors: Coloring, goal: Coloring,
                      node_cap: int = DEFAULT_NODE_CAP,
                      max_depth: Optional[int] = None
                      ) -> Optional[tuple[int, ParallelSwapSequence]]:
    """Exact minimum parallel steps turning one coloring into another."""
    check_coloring(g, colors)
    check_coloring(g, goal)
    if not consistent_colorings(colors, goal):
        raise ValueError("colorings are not consistent")
    if tuple(colors) == tuple(goal):
        return 0, ParallelSwapSequence(())
    _require_solvable(g, colors)
    moves = all_matchings(g)
    res = _bidirectional(tuple(colors), tuple(goal), moves, node_cap, max_depth)
    if res is None:
        return None
    dist, seq = res
    return dist, ParallelSwapSequence(tuple(seq))


def _all_distances(start: tuple, moves: list[tuple[Edge, ...]],
                   node_cap: int) -> dict[tuple, int]:
    dist = {start: 0}
    frontier = [start]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for state in frontier:
            for move in moves:
                ns = _apply_move(state, move)
                if ns not in dist:
                    dist[ns] = d
                    nxt.append(ns)
        if len(dist) > node_cap:
            raise BudgetExceededError(f"state budget {node_cap} exceeded")
        frontier = nxt
    return dist


def ts_all(g: Graph, node_cap: int = DEFAULT_NODE_CAP) -> dict[Configuration, int]:
    """Exact ts value for every configuration at once (one BFS from identity).

    Correct because single swaps are involutions: the distance from f to the
    identity equals the distance from the identity to f.
    """
    _require_solvable(g, None)
    moves = [(e,) for e in sorted(g.edges)]
    return _all_distances(identity(g.n), moves, node_cap)


def rt_all(g: Graph, node_cap: int = DEFAULT_NODE_CAP) -> dict[Configuration, int]:
    """Exact rt value for every configuration at once."""
    _require_solvable(g, None)
    moves = all_matchings(g)
    return _all_distances(identity(g.n), moves, node_cap)


def _one_step_matching(g: Graph, f: tuple) -> Optional[tuple[Edge, ...]]:
    """The unique matching T with fT = identity, if f is an edge involution."""
    edges = []
    for v, t in enumerate(f):
        if t == v:
            continue
        if f[t] != v:
            return None
        if v < t:
            if not g.has_edge(v, t):
                return None
            edges.append((v, t))
    return tuple(edges)


def count_two_step(g: Graph, f: Configuration, cap: int = 1_000_000) -> int:
    """Number of ordered pairs (S, T) of matchings with f<S,T> = identity.

    Empty matchings count as steps, so the identity configuration has one
    solution per matching S (paired with T = S) plus the empty pair.  For
    each S the completing T is unique, so the count equals the number of
    matchings S for which f S is an involution made of edges.
    """
    check_configuration(g, f)
    count = 0
    for s in all_matchings(g, include_empty=True, cap=cap):
        if _one_step_matching(g, _apply_move(tuple(f), s)) is not None:
            count += 1
    return count


def two_step_solutions(g: Graph, f: Configuration,
                       cap: int = 1_000_000) -> list[tuple[tuple[Edge, ...], tuple[Edge, ...]]]:
    """All ordered 2-step solutions (S, T), empty steps allowed."""
    check_configuration(g, f)
    out = []
    for s in all_matchings(g, include_empty=True, cap=cap):
        t = _one_step_matching(g, _apply_move(tuple(f), s))
        if t is not None:
            out.append((s, t))
    return out
