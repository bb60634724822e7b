"""Graphs, token configurations, colorings, swap algebra and verification.

Vertices are 0-indexed integers everywhere; the signed vertex names of the
lollipop / star-path / path families live only in an optional label map.
All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

Edge = tuple[int, int]
Configuration = tuple[int, ...]
Coloring = tuple[int, ...]
Label = Union[int, str]


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop {{{u},{v}}} is not an edge")
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph on vertices 0..n-1 with an optional label map."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]],
                 labels: Optional[dict[int, Label]] = None):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        es = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u},{v}}} out of range for n={n}")
            es.add(norm_edge(u, v))
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        adj: dict[int, list[int]] = {v: [] for v in range(n)}
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(ws)) for v, ws in adj.items()}
        if labels is not None:
            if set(labels) != set(range(n)):
                raise ValueError("label map must cover exactly the vertices 0..n-1")
            if len(set(labels.values())) != n:
                raise ValueError("labels must be distinct")
        self.labels: Optional[dict[int, Label]] = dict(labels) if labels else None
        self._label_to_vertex = {lab: v for v, lab in labels.items()} if labels else None

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges and self.labels == other.labels)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max(len(ws) for ws in self.adj.values())

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def label_of(self, v: int) -> Label:
        if self.labels is None:
            raise ValueError("graph has no label map")
        return self.labels[v]

    def vertex_of_label(self, lab: Label) -> int:
        if self._label_to_vertex is None:
            raise ValueError("graph has no label map")
        return self._label_to_vertex[lab]

    def components(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            comp = []
            queue = deque([start])
            seen[start] = True
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """Return a 2-coloring of the vertices, or None if an odd cycle exists."""
        side = [-1] * self.n
        for start in range(self.n):
            if side[start] >= 0:
                continue
            side[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.adj[v]:
                    if side[w] < 0:
                        side[w] = 1 - side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return None
        return (frozenset(v for v in range(self.n) if side[v] == 0),
                frozenset(v for v in range(self.n) if side[v] == 1))

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None


# ---------------------------------------------------------------------------
# configurations and colorings

def identity(n: int) -> Configuration:
    return tuple(range(n))


def is_identity(f: Configuration) -> bool:
    return all(t == v for v, t in enumerate(f))


def check_configuration(g: Graph, f: Configuration) -> None:
    if len(f) != g.n or sorted(f) != list(range(g.n)):
        raise ValueError(f"not a permutation of 0..{g.n - 1}: {f}")


def check_coloring(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ValueError(f"coloring has length {len(c)}, expected {g.n}")
    if any(x < 1 for x in c):
        raise ValueError("colors must be positive integers")


def consistent_colorings(a: Coloring, b: Coloring) -> bool:
    """Two colorings are consistent iff their color multisets agree."""
    return sorted(a) == sorted(b)


def inverse_of(f: Configuration) -> Configuration:
    inv = [0] * len(f)
    for v, t in enumerate(f):
        inv[t] = v
    return tuple(inv)


def apply_swap(g: Graph, f: tuple, e: Iterable[int]) -> tuple:
    """Exchange the tokens on the two endpoints of edge e."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"not an edge: {{{u},{v}}}")
    out = list(f)
    out[u], out[v] = out[v], out[u]
    return tuple(out)


def check_matching(g: Graph, step: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    """Validate a parallel swap: edges of g, pairwise vertex-disjoint."""
    edges = []
    seen: set[int] = set()
    for e in step:
        u, v = e
        if not g.has_edge(u, v):
            raise ValueError(f"not an edge: {{{u},{v}}}")
        if u in seen or v in seen:
            raise ValueError(f"not a matching: vertex reuse at {{{u},{v}}}")
        seen.add(u)
        seen.add(v)
        edges.append(norm_edge(u, v))
    return tuple(sorted(edges))


def apply_parallel_swap(g: Graph, f: tuple, step: Iterable[Iterable[int]]) -> tuple:
    """Exchange the tokens on every edge of a matching simultaneously."""
    edges = check_matching(g, step)
    out = list(f)
    for u, v in edges:
        out[u], out[v] = out[v], out[u]
    return tuple(out)


@dataclass(frozen=True)
class SwapSequence:
    """Sequence of single swaps, one edge per step."""

    steps: tuple[Edge, ...]

    @classmethod
    def of(cls, steps: Iterable[Iterable[int]]) -> "SwapSequence":
        return cls(tuple(norm_edge(*e) for e in steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def as_parallel(self) -> "ParallelSwapSequence":
        return ParallelSwapSequence(tuple((e,) for e in self.steps))


@dataclass(frozen=True)
class ParallelSwapSequence:
    """Sequence of parallel swaps; every step must be a matching."""

    steps: tuple[tuple[Edge, ...], ...]

    def __post_init__(self):
        for i, step in enumerate(self.steps):
            seen: set[int] = set()
            for u, v in step:
                if u == v:
                    raise ValueError(f"step {i}: self-loop {{{u},{v}}}")
                if u in seen or v in seen:
                    raise ValueError(f"step {i}: not a matching, vertex reuse at {{{u},{v}}}")
                seen.add(u)
                seen.add(v)

    @classmethod
    def of(cls, steps: Iterable[Iterable[Iterable[int]]]) -> "ParallelSwapSequence":
        return cls(tuple(tuple(sorted(norm_edge(*e) for e in step)) for step in steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def swap_count(self) -> int:
        return sum(len(step) for step in self.steps)


def apply_sequence(g: Graph, f: tuple, seq: SwapSequence) -> tuple:
    for e in seq:
        f = apply_swap(g, f, e)
    return f


def apply_parallel_sequence(g: Graph, f: tuple, seq: ParallelSwapSequence) -> tuple:
    for step in seq:
        f = apply_parallel_swap(g, f, step)
    return f


def orbits(f: Configuration) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition of f; fixed points appear as singleton orbits.

    Each orbit is listed starting from its smallest vertex and follows
    repeated application of f; orbits are sorted by that smallest vertex.
    """
    n = len(f)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = f[v]
        out.append(tuple(cyc))
    return tuple(out)


def move_count(g: Graph, f: Configuration, seq: SwapSequence, token: int) -> int:
    """Number of steps of seq at which the given token changes vertex."""
    if not (0 <= token < g.n):
        raise ValueError(f"unknown token {token}")
    check_configuration(g, f)
    pos = inverse_of(f)[token]
    moves = 0
    cur = f
    for e in seq:
        cur = apply_swap(g, cur, e)
        if pos in e:
            u, v = e
            pos = v if pos == u else u
            moves += 1
    return moves


def distances(g: Graph) -> list[list[int]]:
    """All-pairs shortest path lengths by BFS; requires a connected graph."""
    comps = g.components()
    if len(comps) != 1:
        raise ValueError(f"graph disconnected; components: {comps}")
    dist = []
    for s in range(g.n):
        dist.append(bfs_distances(g, s))
    return dist


def bfs_distances(g: Graph, source: int) -> list[int]:
    d = [-1] * g.n
    d[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if d[w] < 0:
                d[w] = d[v] + 1
                queue.append(w)
    return d


# ---------------------------------------------------------------------------
# graph families

def path_graph(n: int) -> Graph:
    """Path on n vertices, labeled 1..n as in the routing sections."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)],
                 labels={i: i + 1 for i in range(n)})


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def lollipop_graph(m: int, n: int) -> Graph:
    """Clique on labels {-m..0} plus the path 0-1-..-n; vertex id = label + m."""
    if m < 1 or n < 0:
        raise ValueError("lollipop needs m >= 1, n >= 0")
    size = m + n + 1
    labels = {i: i - m for i in range(size)}
    edges = []
    for a in range(-m, 1):
        for b in range(a + 1, 1):
            edges.append((a + m, b + m))
    for a in range(0, n):
        edges.append((a + m, a + 1 + m))
    return Graph(size, edges, labels=labels)


def starpath_graph(m: int, n: int) -> Graph:
    """Star with center 0 and leaves -1..-m plus the path 0-1-..-n."""
    if m < 1 or n < 0:
        raise ValueError("star-path needs m >= 1, n >= 0")
    size = m + n + 1
    labels = {i: i - m for i in range(size)}
    edges = [(a + m, m) for a in range(-m, 0)]
    for a in range(0, n):
        edges.append((a + m, a + 1 + m))
    return Graph(size, edges, labels=labels)


def make_family(kind: str, m: Optional[int] = None, n: Optional[int] = None) -> Graph:
    """Build one of the named graph families: path, cycle, complete, lollipop, starpath."""
    if kind == "path":
        return path_graph(_need(n, "n"))
    if kind == "cycle":
        return cycle_graph(_need(n, "n"))
    if kind == "complete":
        return complete_graph(_need(n, "n"))
    if kind == "lollipop":
        return lollipop_graph(_need(m, "m"), _need(n, "n"))
    if kind == "starpath":
        return starpath_graph(_need(m, "m"), _need(n, "n"))
    raise ValueError(f"unknown family kind: {kind!r}")


def _need(x: Optional[int], name: str) -> int:
    if x is None:
        raise ValueError(f"family parameter {name} is required")
    return x


def signed_label_shape(g: Graph) -> Optional[tuple[int, int]]:
    """Return (m, n) if the labels are exactly the signed range -m..n, else None."""
    if g.labels is None:
        return None
    vals = set(g.labels.values())
    if not all(isinstance(x, int) for x in vals):
        return None
    m = -min(vals)
    n = max(vals)
    if m < 1 or n < 0 or vals != set(range(-m, n + 1)):
        return None
    return m, n


def detect_family(g: Graph) -> Optional[tuple]:
    """Structural family detection used for solver dispatch.

    Returns ("lollipop", m, n), ("starpath", m, n) or ("path", n); None if the
    graph matches none of the labeled families.
    """
    shape = signed_label_shape(g)
    if shape is not None:
        m, n = shape
        if g == lollipop_graph(m, n):
            return ("lollipop", m, n)
        if g == starpath_graph(m, n):
            return ("starpath", m, n)
        return None
    if g.labels is not None and set(g.labels.values()) == set(range(1, g.n + 1)):
        if g == path_graph(g.n):
            return ("path", g.n)
    return None


# ---------------------------------------------------------------------------
# instances and verification

@dataclass(frozen=True)
class Instance:
    """A problem instance: ts (single swaps), rvm (matchings) or crvm (colored)."""

    kind: str
    graph: Graph
    tokens: Optional[Configuration] = None
    colors: Optional[Coloring] = None
    goal_colors: Optional[Coloring] = None
    budget: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.kind in ("ts", "rvm"):
            if self.tokens is None:
                raise ValueError(f"{self.kind} instance needs tokens")
            check_configuration(self.graph, self.tokens)
        elif self.kind == "crvm":
            if self.colors is None or self.goal_colors is None:
                raise ValueError("crvm instance needs colors and goal_colors")
            check_coloring(self.graph, self.colors)
            check_coloring(self.graph, self.goal_colors)
            if not consistent_colorings(self.colors, self.goal_colors):
                raise ValueError("colors and goal_colors are not consistent")
        else:
            raise ValueError(f"unknown instance kind: {self.kind!r}")


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    step: Optional[int] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


_OK = VerifyResult(True)


def verify_ts(g: Graph, f: Configuration, seq: SwapSequence) -> VerifyResult:
    cur = f
    for i, e in enumerate(seq):
        u, v = e
        if not g.has_edge(u, v):
            return VerifyResult(False, i, f"not an edge: {{{u},{v}}}")
        cur = apply_swap(g, cur, e)
    if not is_identity(cur):
        return VerifyResult(False, len(seq), "final configuration not identity")
    return _OK


def verify_rvm(g: Graph, f: Configuration, seq: ParallelSwapSequence) -> VerifyResult:
    cur = f
    for i, step in enumerate(seq):
        try:
            cur = apply_parallel_swap(g, cur, step)
        except ValueError as exc:
            return VerifyResult(False, i, str(exc))
    if not is_identity(cur):
        return VerifyResult(False, len(seq), "final configuration not identity")
    return _OK


def verify_colored(g: Graph, colors: Coloring, goal: Coloring,
                   seq: ParallelSwapSequence) -> VerifyResult:
    cur = colors
    for i, step in enumerate(seq):
        try:
            cur = apply_parallel_swap(g, cur, step)
        except ValueError as exc:
            return VerifyResult(False, i, str(exc))
    if tuple(cur) != tuple(goal):
        return VerifyResult(False, len(seq), "final coloring does not match goal")
    return _OK


def verify(instance: Instance, solution) -> VerifyResult:
    """Check a solution against an instance; reports the first violation."""
    if instance.kind == "ts":
        if not isinstance(solution, SwapSequence):
            raise ValueError("ts instance requires a single-swap solution")
        return verify_ts(instance.graph, instance.tokens, solution)
    if instance.kind == "rvm":
        if not isinstance(solution, ParallelSwapSequence):
            raise ValueError("rvm instance requires a parallel-swap solution")
        return verify_rvm(instance.graph, instance.tokens, solution)
    if instance.kind == "crvm":
        if not isinstance(solution, ParallelSwapSequence):
            raise ValueError("crvm instance requires a parallel-swap solution")
        return verify_colored(instance.graph, instance.colors, instance.goal_colors, solution)
    raise ValueError(f"unknown instance kind: {instance.kind!r}")
