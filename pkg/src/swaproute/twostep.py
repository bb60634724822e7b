"""Polynomial decision procedures for 2-step parallel-swap solvability.

Uncolored: orbits of the configuration are paired up; a pair is usable when
an anchor alignment turns both orbits into two matchings whose product undoes
them.  The pairing itself is a perfect-matching problem (general graphs, so a
blossom matcher via networkx).  2-colored: reduces to vertex-disjoint s-t
paths, solved by unit-capacity max-flow after vertex splitting.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import lcm
from typing import Optional

import networkx as nx

from .core import (
    Graph, Configuration, Coloring, Edge,
    ParallelSwapSequence, check_configuration, check_coloring,
    consistent_colorings, inverse_of, orbits, verify_rvm, verify_colored,
)

Alignment = tuple[tuple[Edge, ...], tuple[Edge, ...]]


def _try_alignment(g: Graph, f: Configuration, u: int, v: int,
                   len_a: int, len_b: int) -> Optional[Alignment]:
    """Pair the orbit of u against the orbit of v anchored at (u, v).

    Walks i over one period, collecting first-step pairs {f^i(u), f^-i(v)}
    and second-step pairs {f^(i+1)(u), f^-i(v)}.  Every pair must be an edge
    or a single vertex, and no vertex may acquire two different partners.
    """
    inv = inverse_of(f)
    s_map: dict[int, int] = {}
    t_map: dict[int, int] = {}

    def put(mapping: dict[int, int], a: int, b: int) -> bool:
        if mapping.get(a, b) != b or mapping.get(b, a) != a:
            return False
        if a != b and not g.has_edge(a, b):
            return False
        mapping[a] = b
        mapping[b] = a
        return True

    a, c, b = u, f[u], v
    for _ in range(lcm(len_a, len_b)):
        if not put(s_map, a, b) or not put(t_map, c, b):
            return None
        a, c, b = f[a], f[c], inv[b]
    s_edges = tuple(sorted({(x, y) if x < y else (y, x)
                            for x, y in s_map.items() if x != y}))
    t_edges = tuple(sorted({(x, y) if x < y else (y, x)
                            for x, y in t_map.items() if x != y}))
    return s_edges, t_edges


def orbit_pair_feasible(g: Graph, f: Configuration,
                        orbit_a: tuple[int, ...],
                        orbit_b: tuple[int, ...]) -> Optional[Alignment]:
    """First alignment (in deterministic scan order) that lets the two orbits
    cancel within two parallel steps, or None."""
    check_configuration(g, f)
    all_orbits = {frozenset(o) for o in orbits(f)}
    for o in (orbit_a, orbit_b):
        if frozenset(o) not in all_orbits:
            raise ValueError(f"{o} is not an orbit of the configuration")
    u = min(orbit_a)
    v = min(orbit_b)
    for _ in range(len(orbit_b)):
        found = _try_alignment(g, f, u, v, len(orbit_a), len(orbit_b))
        if found is not None:
            return found
        v = f[v]
    return None


@dataclass
class OrbitPairGraph:
    """Feasibility structure over the non-fixed orbits of a configuration."""

    nodes: tuple[tuple[int, ...], ...]
    edges: frozenset[frozenset[int]] = frozenset()
    self_feasible: frozenset[int] = frozenset()
    edge_witness: dict = field(default_factory=dict)
    self_witness: dict = field(default_factory=dict)


def build_orbit_pair_graph(g: Graph, f: Configuration) -> OrbitPairGraph:
    check_configuration(g, f)
    nodes = tuple(o for o in orbits(f) if len(o) > 1)
    pg = OrbitPairGraph(nodes)
    edges = set()
    for i in range(len(nodes)):
        w = orbit_pair_feasible(g, f, nodes[i], nodes[i])
        if w is not None:
            pg.self_feasible |= {i}
            pg.self_witness[i] = w
        for j in range(i + 1, len(nodes)):
            # orbits of different lengths can never align consistently
            if len(nodes[i]) != len(nodes[j]):
                continue
            w = orbit_pair_feasible(g, f, nodes[i], nodes[j])
            if w is not None:
                edges.add(frozenset((i, j)))
                pg.edge_witness[frozenset((i, j))] = w
    pg.edges = frozenset(edges)
    return pg


def _perfect_pairing(k: int, edges: frozenset[frozenset[int]],
                     self_ok: frozenset[int]) -> Optional[list[tuple[int, ...]]]:
    """Partition 0..k-1 into feasible pairs and self-feasible singletons.

    Reduced to perfect matching: each self-feasible node gets a private
    auxiliary mate and the auxiliaries form a clique, so unused auxiliaries
    pair among themselves; a dummy auxiliary covers the other parity.
    """
    pair_edges = sorted(tuple(sorted(e)) for e in edges)
    selfs = sorted(self_ok)
    for use_dummy in (False, True):
        auxes: list[tuple] = [("aux", x) for x in selfs]
        if use_dummy:
            auxes.append(("aux", "dummy"))
        if (k + len(auxes)) % 2 == 1:
            continue
        gx = nx.Graph()
        gx.add_nodes_from(range(k))
        gx.add_nodes_from(auxes)
        gx.add_edges_from(pair_edges)
        gx.add_edges_from((x, ("aux", x)) for x in selfs)
        gx.add_edges_from((auxes[i], auxes[j])
                          for i in range(len(auxes)) for j in range(i + 1, len(auxes)))
        matching = nx.max_weight_matching(gx, maxcardinality=True)
        if 2 * len(matching) != gx.number_of_nodes():
            continue
        out = []
        for a, b in matching:
            if isinstance(a, tuple):
                a, b = b, a
            if isinstance(b, tuple):
                if not isinstance(a, tuple):
                    out.append((a,))  # matched to its own auxiliary: self-paired
            else:
                out.append((a, b) if a < b else (b, a))
        return out
    return None


def decide_rt2(g: Graph, f: Configuration
               ) -> tuple[bool, Optional[ParallelSwapSequence]]:
    """Decide rt <= 2 and, when yes, return a verified 2-step witness."""
    check_configuration(g, f)
    pg = build_orbit_pair_graph(g, f)
    pairing = _perfect_pairing(len(pg.nodes), pg.edges, pg.self_feasible)
    if pairing is None:
        return False, None
    s_all: set[Edge] = set()
    t_all: set[Edge] = set()
    for part in pairing:
        if len(part) == 1:
            s, t = pg.self_witness[part[0]]
        else:
            s, t = pg.edge_witness[frozenset(part)]
        s_all.update(s)
        t_all.update(t)
    witness = ParallelSwapSequence((tuple(sorted(s_all)), tuple(sorted(t_all))))
    assert verify_rvm(g, f, witness).ok
    return True, witness


# ---------------------------------------------------------------------------
# 2-colored case: vertex-disjoint paths via unit-capacity max-flow

@dataclass(frozen=True)
class FlowNetwork:
    """Directed arcs over V + {s, t}; unit vertex capacities by splitting."""

    source_class: frozenset[int]   # needs low color -> high color
    sink_class: frozenset[int]     # needs high color -> low color
    fixed_low: frozenset[int]      # low color in both
    fixed_high: frozenset[int]     # high color in both
    arcs: frozenset[tuple]         # ("s", v), (u, v), (v, "t")


def build_flow_network(g: Graph, colors: Coloring, goal: Coloring) -> FlowNetwork:
    """Classify vertices by (current, goal) color and orient the edges."""
    palette = sorted(set(colors) | set(goal))
    if len(palette) > 2:
        raise ValueError("2-colored decision needs at most two colors")
    lo = palette[0]
    vs = frozenset(v for v in range(g.n) if colors[v] == lo and goal[v] != lo)
    vt = frozenset(v for v in range(g.n) if colors[v] != lo and goal[v] == lo)
    v1 = frozenset(v for v in range(g.n) if colors[v] == lo and goal[v] == lo)
    v2 = frozenset(v for v in range(g.n) if colors[v] != lo and goal[v] != lo)
    arcs: set[tuple] = set()
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            if (a in vs and (b in vt or b in v1 or b in v2)) \
                    or (a in v1 and (b in vt or b in v2)) \
                    or (a in v2 and (b in vt or b in v1)):
                arcs.add((a, b))
    arcs |= {("s", v) for v in vs}
    arcs |= {(v, "t") for v in vt}
    return FlowNetwork(vs, vt, v1, v2, frozenset(arcs))


def _disjoint_paths(net: FlowNetwork) -> Optional[list[list[int]]]:
    """|source_class| vertex-disjoint s-t paths, or None.

    Unit-capacity augmenting-path max-flow on the vertex-split digraph;
    |source_class| augmentations suffice.
    """
    need = len(net.source_class)
    if need == 0:
        return []
    verts = net.source_class | net.sink_class | net.fixed_low | net.fixed_high
    succ: dict = {"s": set(), "t": set()}
    for v in verts:
        succ[("in", v)] = set()
        succ[("out", v)] = set()
    orig: set[tuple] = set()
    out_arcs: dict = {node: [] for node in succ}

    def add(a, b):
        succ[a].add(b)
        orig.add((a, b))
        out_arcs[a].append(b)

    for v in verts:
        add(("in", v), ("out", v))
    for a, b in sorted(net.arcs, key=repr):
        if a == "s":
            add("s", ("in", b))
        elif b == "t":
            add(("out", a), "t")
        else:
            add(("out", a), ("in", b))

    for _ in range(need):
        parent = {"s": None}
        queue = deque(["s"])
        while queue and "t" not in parent:
            cur = queue.popleft()
            for nxt in sorted(succ[cur], key=repr):
                if nxt not in parent:
                    parent[nxt] = cur
                    queue.append(nxt)
        if "t" not in parent:
            return None
        node = "t"
        while node != "s":
            prev = parent[node]
            succ[prev].discard(node)
            succ[node].add(prev)
            node = prev

    def carries_flow(a, b) -> bool:
        return (a, b) in orig and a in succ[b]

    paths = []
    for u in sorted(net.source_class):
        assert carries_flow("s", ("in", u))
        path = [u]
        node = ("out", u)
        while node != "t":
            step = next(w for w in out_arcs[node] if carries_flow(node, w))
            if step == "t":
                node = "t"
            else:
                path.append(step[1])
                node = ("out", step[1])
        paths.append(path)
    return paths


def decide_rt2_2colored(g: Graph, colors: Coloring, goal: Coloring
                        ) -> tuple[bool, Optional[ParallelSwapSequence]]:
    """Decide whether two parallel steps can turn colors into goal.

    Witness reconstruction alternates edges along each disjoint path; the
    step order per path depends on whether the path's first two vertices
    start with equal colors.
    """
    check_coloring(g, colors)
    check_coloring(g, goal)
    if not consistent_colorings(colors, goal):
        raise ValueError("colorings are not consistent")
    if tuple(colors) == tuple(goal):
        return True, ParallelSwapSequence(((), ()))
    net = build_flow_network(g, colors, goal)
    paths = _disjoint_paths(net)
    if paths is None:
        return False, None
    s1: set[Edge] = set()
    s2: set[Edge] = set()
    for path in paths:
        first = [tuple(sorted((path[i], path[i + 1]))) for i in range(0, len(path) - 1, 2)]
        second = [tuple(sorted((path[i], path[i + 1]))) for i in range(1, len(path) - 1, 2)]
        if colors[path[0]] == colors[path[1]]:
            first, second = second, first
        s1.update(first)
        s2.update(second)
    witness = ParallelSwapSequence((tuple(sorted(s1)), tuple(sorted(s2))))
    assert verify_colored(g, colors, goal, witness).ok
    return True, witness
