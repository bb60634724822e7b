"""Certified instance generators for the hardness constructions.

Every generator returns the built graph with a structured label map, the
initial tokens or coloring pair, and a certificate (bipartiteness, degree
bound, target optimum) recomputed from the built graph rather than asserted.
Each reduction has a forward solution map turning a witness for the source
problem into a schedule of exactly the target length.

Label names mirror the gadget roles: "u[k,i]" / "u'[k,i]" / "v[j,k]" for the
matching reduction; "u[i]", "u[i,k]", "v[j]", padding "uhat[i,r]" and
"vhat[j,i,r]", subdivision vertices "u'[i,k]" and "v[j,i]" for the
satisfiability reductions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import (
    Graph, Configuration, Coloring, Edge, Instance,
    SwapSequence, ParallelSwapSequence,
    bfs_distances, identity, move_count,
)

Clause = frozenset[int]


# ---------------------------------------------------------------------------
# source problems

@dataclass(frozen=True)
class ThreeDMInstance:
    """Three-dimensional matching: triples over three n-element coordinate sets."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("3DM instance needs n >= 1")
        if not self.triples:
            raise ValueError("3DM instance needs at least one triple")
        for t in self.triples:
            if len(t) != 3 or any(not (1 <= x <= self.n) for x in t):
                raise ValueError(f"triple {t} out of range 1..{self.n}")

    def occurrence_counts(self) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = {}
        for t in self.triples:
            for k, x in enumerate(t, 1):
                counts[(k, x)] = counts.get((k, x), 0) + 1
        return counts

    def respects_occurrence_bound(self, bound: int = 3) -> bool:
        """True when no element appears in more than `bound` triples."""
        return all(c <= bound for c in self.occurrence_counts().values())

    def is_solution(self, matching: Iterable[int]) -> bool:
        """Is the set of (1-based) triple indices a perfect matching?"""
        chosen = sorted(set(matching))
        if len(chosen) != self.n:
            return False
        if any(not (1 <= j <= len(self.triples)) for j in chosen):
            return False
        for k in range(3):
            covered = [self.triples[j - 1][k] for j in chosen]
            if sorted(covered) != list(range(1, self.n + 1)):
                return False
        return True


@dataclass(frozen=True)
class SepSatInstance:
    """3-CNF split into parts where each variable is positive exactly once in
    the first and second part and negative exactly once in the third."""

    num_vars: int
    f1: tuple[Clause, ...]
    f2: tuple[Clause, ...]
    f3: tuple[Clause, ...]

    def __post_init__(self):
        pos1: dict[int, int] = {}
        pos2: dict[int, int] = {}
        neg3: dict[int, int] = {}
        for part, wanted_sign, counter in ((self.f1, 1, pos1), (self.f2, 1, pos2),
                                           (self.f3, -1, neg3)):
            for cl in part:
                if len(cl) > 3:
                    raise ValueError(f"clause {set(cl)} has more than 3 literals")
                for lit in cl:
                    if lit == 0 or abs(lit) > self.num_vars:
                        raise ValueError(f"literal {lit} out of range")
                    if (lit > 0) != (wanted_sign > 0):
                        raise ValueError(f"literal {lit} has the wrong sign for its part")
                    counter[abs(lit)] = counter.get(abs(lit), 0) + 1
        for x in range(1, self.num_vars + 1):
            if pos1.get(x) != 1 or pos2.get(x) != 1 or neg3.get(x) != 1:
                raise ValueError(f"variable {x} violates the occurrence pattern")

    @property
    def clauses(self) -> tuple[Clause, ...]:
        return self.f1 + self.f2 + self.f3

    def numbered_clauses(self) -> list[tuple[int, int, Clause]]:
        """(clause index j, part k, clause) with j counting 1..n across parts."""
        out = []
        j = 0
        for k, part in ((1, self.f1), (2, self.f2), (3, self.f3)):
            for cl in part:
                j += 1
                out.append((j, k, cl))
        return out

    def violated_clause(self, phi: dict[int, bool]) -> Optional[tuple[int, Clause]]:
        for j, _, cl in self.numbered_clauses():
            if not any(phi[abs(lit)] == (lit > 0) for lit in cl):
                return j, cl
        return None


def find_separation(clauses: Sequence[Clause], num_vars: int) -> SepSatInstance:
    """Recover a valid part assignment for an unpartitioned clause list.

    Clauses with a negative literal go to the third part; the positive
    clauses are 2-colored so that the two positive occurrences of every
    variable land on different sides.
    """
    negative = [cl for cl in clauses if any(lit < 0 for lit in cl)]
    positive = [cl for cl in clauses if all(lit > 0 for lit in cl)]
    occ: dict[int, list[int]] = {}
    for idx, cl in enumerate(positive):
        for lit in cl:
            occ.setdefault(lit, []).append(idx)
    color = [-1] * len(positive)
    for start in range(len(positive)):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            a = stack.pop()
            for lit in positive[a]:
                for b in occ[lit]:
                    if b == a:
                        continue
                    if color[b] < 0:
                        color[b] = 1 - color[a]
                        stack.append(b)
                    elif color[b] == color[a]:
                        raise ValueError("clause list admits no valid separation")
    f1 = tuple(cl for idx, cl in enumerate(positive) if color[idx] == 0)
    f2 = tuple(cl for idx, cl in enumerate(positive) if color[idx] == 1)
    return SepSatInstance(num_vars, f1, f2, tuple(negative))


# ---------------------------------------------------------------------------
# plain SAT utilities (used to certify equisatisfiability)

def clause_satisfied(cl: Clause, phi: dict[int, bool]) -> bool:
    return any(phi.get(abs(lit), False) == (lit > 0) for lit in cl)


def satisfying_assignment(clauses: Sequence[Clause],
                          num_vars: int) -> Optional[dict[int, bool]]:
    """Complete satisfiability check: enumeration for small variable counts,
    unit-propagating DPLL beyond that."""
    if num_vars <= 12:
        lits = [tuple(cl) for cl in clauses]
        for bits in range(1 << num_vars):
            if all(any((lit > 0) == bool(bits >> (abs(lit) - 1) & 1) for lit in cl)
                   for cl in lits):
                return {x: bool(bits >> (x - 1) & 1) for x in range(1, num_vars + 1)}
        return None
    partial = _dpll(frozenset(clauses))
    if partial is None:
        return None
    return {x: partial.get(x, False) for x in range(1, num_vars + 1)}


def _dpll(clauses: frozenset[Clause]) -> Optional[dict[int, bool]]:
    assignment: dict[int, bool] = {}
    work = set(clauses)
    while True:
        unit = next((cl for cl in work if len(cl) == 1), None)
        if unit is None:
            break
        lit = next(iter(unit))
        assignment[abs(lit)] = lit > 0
        reduced = set()
        for cl in work:
            if lit in cl:
                continue
            if -lit in cl:
                cl = cl - {-lit}
                if not cl:
                    return None
            reduced.add(cl)
        work = reduced
    if not work:
        return assignment
    if any(not cl for cl in work):
        return None
    branch = min(abs(lit) for cl in work for lit in cl)
    for val in (True, False):
        lit = branch if val else -branch
        sub = _dpll(frozenset(work) | {frozenset((lit,))})
        if sub is not None:
            return assignment | sub
    return None


def parse_dimacs(text: str) -> tuple[int, list[Clause]]:
    """Parse DIMACS CNF; returns (variable count, clause list)."""
    num_vars = None
    clauses: list[Clause] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(frozenset(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(frozenset(current))
    if num_vars is None:
        num_vars = max((abs(lit) for cl in clauses for lit in cl), default=0)
    return num_vars, clauses


def dump_dimacs(num_vars: int, clauses: Sequence[Clause]) -> str:
    lines = [f"p cnf {num_vars} {len(clauses)}"]
    for cl in clauses:
        lines.append(" ".join(str(lit) for lit in sorted(cl, key=abs)) + " 0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reduction outputs

@dataclass(frozen=True)
class Certificate:
    bipartite: bool
    max_degree: int
    expected_optimum: int


@dataclass(frozen=True)
class ReductionOutput:
    kind: str
    graph: Graph
    label_map: dict[str, int]
    certificate: Certificate
    tokens: Optional[Configuration] = None
    colors: Optional[Coloring] = None
    goal_colors: Optional[Coloring] = None

    def vertex(self, name: str) -> int:
        return self.label_map[name]

    def instance(self) -> Instance:
        return Instance(kind=self.kind, graph=self.graph, tokens=self.tokens,
                        colors=self.colors, goal_colors=self.goal_colors,
                        budget=self.certificate.expected_optimum)


class _Builder:
    """Accumulates named vertices and edges, then freezes into a Graph."""

    def __init__(self):
        self.names: list[str] = []
        self.ids: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []

    def vertex(self, name: str) -> int:
        if name not in self.ids:
            self.ids[name] = len(self.names)
            self.names.append(name)
        return self.ids[name]

    def edge(self, a: str, b: str) -> None:
        self.edges.append((self.vertex(a), self.vertex(b)))

    def path(self, *names: str) -> None:
        for a, b in zip(names, names[1:]):
            self.edge(a, b)

    def graph(self) -> Graph:
        labels = {i: name for i, name in enumerate(self.names)}
        return Graph(len(self.names), self.edges, labels=labels)


def _certificate(g: Graph, expected: int) -> Certificate:
    return Certificate(bipartite=g.is_bipartite(),
                       max_degree=g.max_degree(),
                       expected_optimum=expected)


# ---------------------------------------------------------------------------
# 3DM -> token swapping

def _u(k: int, i: int, prime: bool = False) -> str:
    return f"u{'~' if prime else ''}[{k},{i}]".replace("~", "'")


def reduce_3dm_ts(inst: ThreeDMInstance) -> ReductionOutput:
    """Graph of element pairs and triple 6-cycles; tokens swap each element pair.

    A perfect matching exists iff 21n swaps suffice.
    """
    b = _Builder()
    for k in (1, 2, 3):
        for i in range(1, inst.n + 1):
            b.vertex(f"u[{k},{i}]")
            b.vertex(f"u'[{k},{i}]")
    for j in range(1, len(inst.triples) + 1):
        for k in (1, 2, 3):
            b.vertex(f"v[{j},{k}]")
            b.vertex(f"v'[{j},{k}]")
    for j, t in enumerate(inst.triples, 1):
        for k, i in enumerate(t, 1):
            b.edge(f"u[{k},{i}]", f"v'[{j},{k}]")
            b.edge(f"u'[{k},{i}]", f"v[{j},{k}]")
        for k in (1, 2, 3):
            for l in (1, 2, 3):
                if k != l:
                    b.edge(f"v[{j},{k}]", f"v'[{j},{l}]")
    g = b.graph()
    tokens = list(identity(g.n))
    for k in (1, 2, 3):
        for i in range(1, inst.n + 1):
            a = b.ids[f"u[{k},{i}]"]
            c = b.ids[f"u'[{k},{i}]"]
            tokens[a], tokens[c] = c, a
    return ReductionOutput(kind="ts", graph=g, label_map=dict(b.ids),
                           certificate=_certificate(g, 21 * inst.n),
                           tokens=tuple(tokens))


_CYCLE_A = ((1, 2), (2, 3), (3, 1))   # (k, l) meaning edge v[j,k] -- v'[j,l]
_CYCLE_B = ((2, 1), (3, 2), (1, 3))


def map_3dm_solution(inst: ThreeDMInstance, matching: Iterable[int]) -> SwapSequence:
    """21 swaps per chosen triple: 6 boundary swaps in, the 6-cycle rotated by
    three alternating matchings, 6 boundary swaps out."""
    chosen = sorted(set(matching))
    if not inst.is_solution(chosen):
        raise ValueError(f"{chosen} is not a perfect matching of the 3DM instance")
    out = reduce_3dm_ts(inst)
    steps: list[tuple[int, int]] = []

    def swap(a: str, c: str) -> None:
        steps.append((out.vertex(a), out.vertex(c)))

    for j in chosen:
        t = inst.triples[j - 1]
        boundary = []
        for k, i in enumerate(t, 1):
            boundary.append((f"u'[{k},{i}]", f"v[{j},{k}]"))
            boundary.append((f"u[{k},{i}]", f"v'[{j},{k}]"))
        for a, c in boundary:
            swap(a, c)
        for group in (_CYCLE_A, _CYCLE_B, _CYCLE_A):
            for k, l in group:
                swap(f"v[{j},{k}]", f"v'[{j},{l}]")
        for a, c in boundary:
            swap(a, c)
    return SwapSequence.of(steps)


def audit_3dm_map(inst: ThreeDMInstance, matching: Iterable[int]) -> dict:
    """Replay the mapped solution and recompute the counting lower bound.

    Every element-pair token must move exactly its distance (5); the cycle
    vertices it enters through must each move twice; half the total is the
    length lower bound, which the mapped solution attains.
    """
    out = reduce_3dm_ts(inst)
    seq = map_3dm_solution(inst, matching)
    g = out.graph
    moves = {v: move_count(g, out.tokens, seq, v) for v in range(g.n)}
    pair_tokens = [v for v in range(g.n) if out.tokens[v] != v]
    dist_sum = 0
    for v in pair_tokens:
        token = out.tokens[v]
        dist_sum += bfs_distances(g, v)[token]
    touched_cycle = [v for v in range(g.n)
                     if out.tokens[v] == v and moves[v] > 0]
    bound = (dist_sum + 2 * len(touched_cycle)) // 2
    return {
        "length": len(seq),
        "moves": moves,
        "pair_tokens": pair_tokens,
        "touched_cycle_vertices": touched_cycle,
        "distance_sum": dist_sum,
        "lower_bound": bound,
    }


# ---------------------------------------------------------------------------
# 3SAT -> separated SAT

@dataclass(frozen=True)
class SepSatReduction:
    """Separated instance plus both directions of the assignment mapping."""

    instance: SepSatInstance
    balanced_clauses: tuple[Clause, ...]
    balanced_num_vars: int
    orig_num_vars: int
    # new variable id -> (original variable, True for a plain copy / False for
    # a negation copy)
    origin: tuple[tuple[int, bool], ...]

    def forward(self, phi: dict[int, bool]) -> dict[int, bool]:
        """Lift an assignment of the original variables to the new ones."""
        full = {x: phi.get(x, True) for x in range(1, self.balanced_num_vars + 1)}
        return {v + 1: full[ox] if plain else not full[ox]
                for v, (ox, plain) in enumerate(self.origin)}

    def backward(self, phi_new: dict[int, bool]) -> dict[int, bool]:
        """Project a satisfying assignment of the new variables back."""
        out = {x: False for x in range(1, self.orig_num_vars + 1)}
        for v, (ox, plain) in enumerate(self.origin):
            if ox <= self.orig_num_vars:
                out[ox] = phi_new[v + 1] if plain else not phi_new[v + 1]
        return out


def reduce_3sat_sepsat(clauses: Sequence[Clause], num_vars: int) -> SepSatReduction:
    """Balance positive/negative occurrence counts, then split every variable
    into per-occurrence copies chained by equality constraints."""
    for cl in clauses:
        if len(cl) > 3:
            raise ValueError(f"clause {set(cl)} has more than 3 literals")
        if any(lit == 0 or abs(lit) > num_vars for lit in cl):
            raise ValueError(f"clause {set(cl)} has out-of-range literals")
    balanced = [frozenset(cl) for cl in clauses]
    next_var = num_vars
    for x in range(1, num_vars + 1):
        pos = sum(1 for cl in clauses for lit in cl if lit == x)
        neg = sum(1 for cl in clauses for lit in cl if lit == -x)
        filler = x if pos < neg else -x
        for _ in range(abs(pos - neg)):
            next_var += 1
            balanced.append(frozenset((filler, next_var, -next_var)))
    balanced_num_vars = next_var

    counts: dict[int, int] = {}
    for cl in balanced:
        for lit in cl:
            if lit > 0:
                counts[lit] = counts.get(lit, 0) + 1
    copies: dict[int, list[int]] = {}
    negcopies: dict[int, list[int]] = {}
    origin: list[tuple[int, bool]] = []
    for x in range(1, balanced_num_vars + 1):
        n_x = counts.get(x, 0)
        copies[x] = []
        negcopies[x] = []
        for _ in range(n_x):
            origin.append((x, True))
            copies[x].append(len(origin))
        for _ in range(n_x):
            origin.append((x, False))
            negcopies[x].append(len(origin))

    seen_pos: dict[int, int] = {}
    seen_neg: dict[int, int] = {}
    f1 = []
    for cl in balanced:
        renamed = set()
        for lit in sorted(cl, key=lambda l: (abs(l), l)):
            x = abs(lit)
            if lit > 0:
                j = seen_pos.get(x, 0)
                seen_pos[x] = j + 1
                renamed.add(copies[x][j])
            else:
                j = seen_neg.get(x, 0)
                seen_neg[x] = j + 1
                renamed.add(negcopies[x][j])
        f1.append(frozenset(renamed))
    f2 = []
    f3 = []
    for x in range(1, balanced_num_vars + 1):
        n_x = counts.get(x, 0)
        for j in range(n_x):
            f2.append(frozenset((copies[x][j], negcopies[x][j])))
            f3.append(frozenset((-copies[x][j], -negcopies[x][(j + 1) % n_x])))
    instance = SepSatInstance(len(origin), tuple(f1), tuple(f2), tuple(f3))
    return SepSatReduction(instance=instance, balanced_clauses=tuple(balanced),
                           balanced_num_vars=balanced_num_vars,
                           orig_num_vars=num_vars, origin=tuple(origin))


# ---------------------------------------------------------------------------
# separated SAT -> routing via matchings (degree 4, any budget p >= 3)

def _occurrences(inst: SepSatInstance) -> list[tuple[int, int, int]]:
    """(clause j, variable i, part k) for every literal occurrence."""
    out = []
    for j, k, cl in inst.numbered_clauses():
        for lit in sorted(cl, key=abs):
            out.append((j, abs(lit), k))
    return out


def reduce_sepsat_rvm(inst: SepSatInstance, p: int = 3) -> ReductionOutput:
    """Two parallel 3-edge routes per variable, a 2-path per clause literal
    through the shared route vertex; padded with tails and subdivided clause
    paths when the step budget exceeds 3."""
    if p < 3:
        raise ValueError("step budget must be at least 3")
    if inst.num_vars == 0:
        raise ValueError("cannot build a graph from an empty instance")
    h = p - 3
    b = _Builder()
    for i in range(1, inst.num_vars + 1):
        b.path(f"u[{i}]", f"u[{i},1]", f"u[{i},2]", f"u'[{i}]")
        b.path(f"u[{i}]", f"u[{i},3]", f"u[{i},4]", f"u'[{i}]")
        if h > 0:
            b.path(f"u[{i}]", *[f"uhat[{i},{r}]" for r in range(1, h + 1)])
            b.path(f"u'[{i}]", *[f"uhat'[{i},{r}]" for r in range(1, h + 1)])
    for j, i, k in _occurrences(inst):
        if h == 0:
            b.path(f"v[{j}]", f"u[{i},{k}]", f"v'[{j}]")
        else:
            b.path(f"v[{j}]", *[f"vhat[{j},{i},{r}]" for r in range(1, h + 1)],
                   f"u[{i},{k}]", f"v'[{j}]")
    g = b.graph()
    tokens = list(identity(g.n))

    def place(token_name: str, vertex_name: str) -> None:
        tokens[b.ids[vertex_name]] = b.ids[token_name]

    for j, _, _ in inst.numbered_clauses():
        place(f"v'[{j}]", f"v[{j}]")
        place(f"v[{j}]", f"v'[{j}]")
    for i in range(1, inst.num_vars + 1):
        if h == 0:
            place(f"u'[{i}]", f"u[{i}]")
            place(f"u[{i}]", f"u'[{i}]")
        else:
            place(f"uhat[{i},1]", f"u[{i}]")
            for r in range(1, h):
                place(f"uhat[{i},{r + 1}]", f"uhat[{i},{r}]")
            place(f"u'[{i}]", f"uhat[{i},{h}]")
            place(f"uhat'[{i},1]", f"u'[{i}]")
            for r in range(1, h):
                place(f"uhat'[{i},{r + 1}]", f"uhat'[{i},{r}]")
            place(f"u[{i}]", f"uhat'[{i},{h}]")
    return ReductionOutput(kind="rvm", graph=g, label_map=dict(b.ids),
                           certificate=_certificate(g, p), tokens=tuple(tokens))


def endpoint_swap_steps(path: Sequence[int]) -> list[list[Edge]]:
    """Schedule exchanging the endpoint tokens of a path whose interior is at
    home: length-1 steps for even vertex counts, length steps for odd."""
    n = len(path)
    if n < 2:
        raise ValueError("path needs at least two vertices")

    def edge(i: int) -> Edge:
        a, c = path[i - 1], path[i]
        return (a, c) if a < c else (c, a)

    steps: list[list[Edge]] = []
    if n % 2 == 0:
        for i in range(1, n):
            steps.append(sorted({edge(i), edge(n - i)}))
    else:
        steps.append([edge(1)])
        for i in range(2, n):
            steps.append(sorted({edge(i), edge(n - i + 1)}))
        steps.append([edge(1)])
    return steps


def _pick_witnesses(inst: SepSatInstance, phi: dict[int, bool]) -> dict[int, tuple[int, int]]:
    """Per clause the lowest-index variable that satisfies it, with its part."""
    bad = inst.violated_clause(phi)
    if bad is not None:
        j, cl = bad
        raise ValueError(f"assignment does not satisfy clause {j}: {set(cl)}")
    witness: dict[int, tuple[int, int]] = {}
    for j, k, cl in inst.numbered_clauses():
        sat_vars = sorted(abs(lit) for lit in cl if phi[abs(lit)] == (lit > 0))
        witness[j] = (sat_vars[0], k)
    return witness


def map_assignment_rvm(inst: SepSatInstance, phi: dict[int, bool],
                       p: int = 3) -> ParallelSwapSequence:
    """Schedule of exactly p parallel steps realizing the goal configuration.

    Variable tokens caravan down their tails and cross on the route chosen by
    the assignment; each clause pair crosses on its witness literal's path.
    At p = 3 this is the literal three-step solution <S1, S2, S1>.
    """
    if p < 3:
        raise ValueError("step budget must be at least 3")
    h = p - 3
    red = reduce_sepsat_rvm(inst, p)
    vid = red.vertex
    steps: list[set[Edge]] = [set() for _ in range(p)]

    def add(step: int, a: int, c: int) -> None:
        steps[step - 1].add((a, c) if a < c else (c, a))

    for i in range(1, inst.num_vars + 1):
        r = 1 if not phi[i] else 3
        for s in range(1, h + 1):
            left = vid(f"u[{i}]") if s == h else vid(f"uhat[{i},{h - s}]")
            add(s, vid(f"uhat[{i},{h - s + 1}]"), left)
            left_p = vid(f"u'[{i}]") if s == h else vid(f"uhat'[{i},{h - s}]")
            add(s, vid(f"uhat'[{i},{h - s + 1}]"), left_p)
        add(h + 1, vid(f"u[{i}]"), vid(f"u[{i},{r}]"))
        add(h + 1, vid(f"u'[{i}]"), vid(f"u[{i},{r + 1}]"))
        add(h + 2, vid(f"u[{i},{r}]"), vid(f"u[{i},{r + 1}]"))
        add(h + 3, vid(f"u[{i}]"), vid(f"u[{i},{r}]"))
        add(h + 3, vid(f"u'[{i}]"), vid(f"u[{i},{r + 1}]"))

    for j, (i, k) in _pick_witnesses(inst, phi).items():
        path = [vid(f"v[{j}]")]
        path += [vid(f"vhat[{j},{i},{r}]") for r in range(1, h + 1)]
        path += [vid(f"u[{i},{k}]"), vid(f"v'[{j}]")]
        for s, edges in enumerate(endpoint_swap_steps(path), 1):
            for a, c in edges:
                add(s, a, c)

    return ParallelSwapSequence.of(steps)


# ---------------------------------------------------------------------------
# separated SAT -> routing via matchings with degree bound 3 (budget 5)

def reduce_sepsat_rvm_deg3(inst: SepSatInstance) -> ReductionOutput:
    """Degree-3 variant: route vertices are split in two, clause paths gain a
    private vertex, and the budget becomes 5."""
    if inst.num_vars == 0:
        raise ValueError("cannot build a graph from an empty instance")
    b = _Builder()
    for i in range(1, inst.num_vars + 1):
        b.path(f"u[{i}]", f"u'[{i},1]", f"u[{i},1]", f"u'[{i},2]", f"u[{i},2]", f"u'[{i}]")
        b.path(f"u[{i}]", f"u'[{i},3]", f"u[{i},3]", f"u'[{i},4]", f"u[{i},4]", f"u'[{i}]")
    for j, i, k in _occurrences(inst):
        b.path(f"v[{j}]", f"u[{i},{k}]", f"u'[{i},{k}]", f"v[{j},{i}]", f"v'[{j}]")
    g = b.graph()
    tokens = list(identity(g.n))
    for i in range(1, inst.num_vars + 1):
        a, c = b.ids[f"u[{i}]"], b.ids[f"u'[{i}]"]
        tokens[a], tokens[c] = c, a
    for j, _, _ in inst.numbered_clauses():
        a, c = b.ids[f"v[{j}]"], b.ids[f"v'[{j}]"]
        tokens[a], tokens[c] = c, a
    return ReductionOutput(kind="rvm", graph=g, label_map=dict(b.ids),
                           certificate=_certificate(g, 5), tokens=tuple(tokens))


def map_assignment_rvm_deg3(inst: SepSatInstance,
                            phi: dict[int, bool]) -> ParallelSwapSequence:
    """Five steps: every swapped pair crosses along its length-5 or length-4
    path using the endpoint-exchange schedule."""
    red = reduce_sepsat_rvm_deg3(inst)
    vid = red.vertex
    steps: list[set[Edge]] = [set() for _ in range(5)]

    def run(path: list[int]) -> None:
        for s, edges in enumerate(endpoint_swap_steps(path), 1):
            for a, c in edges:
                steps[s - 1].add((a, c) if a < c else (c, a))

    for i in range(1, inst.num_vars + 1):
        r = 1 if not phi[i] else 3
        run([vid(f"u[{i}]"), vid(f"u'[{i},{r}]"), vid(f"u[{i},{r}]"),
             vid(f"u'[{i},{r + 1}]"), vid(f"u[{i},{r + 1}]"), vid(f"u'[{i}]")])
    for j, (i, k) in _pick_witnesses(inst, phi).items():
        run([vid(f"v[{j}]"), vid(f"u[{i},{k}]"), vid(f"u'[{i},{k}]"),
             vid(f"v[{j},{i}]"), vid(f"v'[{j}]")])
    return ParallelSwapSequence.of(steps)


# ---------------------------------------------------------------------------
# separated SAT -> 2-coloring routing (budget 3)

def reduce_sepsat_2c3(inst: SepSatInstance) -> ReductionOutput:
    """2-colorings with subdivided clause paths; 3 steps iff satisfiable."""
    if inst.num_vars == 0:
        raise ValueError("cannot build a graph from an empty instance")
    b = _Builder()
    for i in range(1, inst.num_vars + 1):
        b.path(f"u[{i}]", f"u[{i},1]", f"u[{i},2]", f"u'[{i}]")
        b.path(f"u[{i}]", f"u[{i},3]", f"u[{i},4]", f"u'[{i}]")
    for j, i, k in _occurrences(inst):
        b.path(f"v[{j}]", f"v[{j},{i}]", f"u[{i},{k}]", f"v'[{j}]")
    g = b.graph()
    colors = [1] * g.n
    goal = [1] * g.n
    for i in range(1, inst.num_vars + 1):
        colors[b.ids[f"u[{i}]"]] = 2
        goal[b.ids[f"u'[{i}]"]] = 2
    for j, k, _ in inst.numbered_clauses():
        if k in (1, 3):
            colors[b.ids[f"v[{j}]"]] = 2
            goal[b.ids[f"v'[{j}]"]] = 2
        else:
            colors[b.ids[f"v'[{j}]"]] = 2
            goal[b.ids[f"v[{j}]"]] = 2
    return ReductionOutput(kind="crvm", graph=g, label_map=dict(b.ids),
                           certificate=_certificate(g, 3),
                           colors=tuple(colors), goal_colors=tuple(goal))


def map_assignment_2c3(inst: SepSatInstance,
                       phi: dict[int, bool]) -> ParallelSwapSequence:
    """Push each marked token along its 3-edge route, one edge per step."""
    red = reduce_sepsat_2c3(inst)
    vid = red.vertex
    steps: list[set[Edge]] = [set(), set(), set()]

    def push(path: list[int]) -> None:
        for s in range(3):
            a, c = path[s], path[s + 1]
            steps[s].add((a, c) if a < c else (c, a))

    for i in range(1, inst.num_vars + 1):
        r = 1 if not phi[i] else 3
        push([vid(f"u[{i}]"), vid(f"u[{i},{r}]"), vid(f"u[{i},{r + 1}]"), vid(f"u'[{i}]")])
    for j, (i, k) in _pick_witnesses(inst, phi).items():
        if k in (1, 3):
            push([vid(f"v[{j}]"), vid(f"v[{j},{i}]"), vid(f"u[{i},{k}]"), vid(f"v'[{j}]")])
        else:
            push([vid(f"v'[{j}]"), vid(f"u[{i},{k}]"), vid(f"v[{j},{i}]"), vid(f"v[{j}]")])
    return ParallelSwapSequence.of(steps)


# ---------------------------------------------------------------------------
# separated SAT -> 3-coloring routing (budget 2)

def reduce_sepsat_3c2(inst: SepSatInstance) -> ReductionOutput:
    """3-colorings on the unsubdivided graph; 2 steps iff satisfiable."""
    if inst.num_vars == 0:
        raise ValueError("cannot build a graph from an empty instance")
    b = _Builder()
    for i in range(1, inst.num_vars + 1):
        b.path(f"u[{i}]", f"u[{i},1]", f"u[{i},2]", f"u'[{i}]")
        b.path(f"u[{i}]", f"u[{i},3]", f"u[{i},4]", f"u'[{i}]")
    for j, i, k in _occurrences(inst):
        b.path(f"v[{j}]", f"u[{i},{k}]", f"v'[{j}]")
    g = b.graph()
    colors = [0] * g.n
    goal = [0] * g.n
    for i in range(1, inst.num_vars + 1):
        colors[b.ids[f"u[{i}]"]] = 2
        goal[b.ids[f"u[{i}]"]] = 1
        colors[b.ids[f"u'[{i}]"]] = 1
        goal[b.ids[f"u'[{i}]"]] = 2
        for k, col in ((1, 1), (2, 2), (3, 1), (4, 2)):
            colors[b.ids[f"u[{i},{k}]"]] = col
            goal[b.ids[f"u[{i},{k}]"]] = col
    for j, k, _ in inst.numbered_clauses():
        vj, vjp = b.ids[f"v[{j}]"], b.ids[f"v'[{j}]"]
        colors[vj] = 3
        goal[vjp] = 3
        if k in (1, 3):
            colors[vjp] = 1
            goal[vj] = 1
        else:
            colors[vjp] = 2
            goal[vj] = 2
    return ReductionOutput(kind="crvm", graph=g, label_map=dict(b.ids),
                           certificate=_certificate(g, 2),
                           colors=tuple(colors), goal_colors=tuple(goal))


def map_assignment_3c2(inst: SepSatInstance,
                       phi: dict[int, bool]) -> ParallelSwapSequence:
    """The two matchings from the satisfiability argument, verbatim."""
    red = reduce_sepsat_3c2(inst)
    vid = red.vertex
    s1: set[Edge] = set()
    s2: set[Edge] = set()

    def norm(a: int, c: int) -> Edge:
        return (a, c) if a < c else (c, a)

    for i in range(1, inst.num_vars + 1):
        r = 1 if not phi[i] else 3
        s1.add(norm(vid(f"u[{i}]"), vid(f"u[{i},{r}]")))
        s1.add(norm(vid(f"u'[{i}]"), vid(f"u[{i},{r + 1}]")))
        s2.add(norm(vid(f"u[{i},{r}]"), vid(f"u[{i},{r + 1}]")))
    for j, (i, k) in _pick_witnesses(inst, phi).items():
        s1.add(norm(vid(f"v[{j}]"), vid(f"u[{i},{k}]")))
        s2.add(norm(vid(f"v'[{j}]"), vid(f"u[{i},{k}]")))
    return ParallelSwapSequence.of([sorted(s1), sorted(s2)])


# ---------------------------------------------------------------------------
# duplication gadget for counting 2-step solutions

def build_counting_gadget(h: Graph) -> tuple[Graph, Configuration]:
    """Duplicate every vertex; each original edge becomes four cross edges and
    the tokens swap within every duplicate pair."""
    labels = {}
    for u in range(h.n):
        labels[2 * u] = f"{u}a"
        labels[2 * u + 1] = f"{u}b"
    edges = []
    for u, v in sorted(h.edges):
        for a in (0, 1):
            for c in (0, 1):
                edges.append((2 * u + a, 2 * v + c))
    g = Graph(2 * h.n, edges, labels=labels)
    tokens = list(identity(g.n))
    for u in range(h.n):
        tokens[2 * u], tokens[2 * u + 1] = 2 * u + 1, 2 * u
    return g, tuple(tokens)


def perfect_matchings(h: Graph) -> list[frozenset[Edge]]:
    """All perfect matchings of a small graph, by direct enumeration."""
    if h.n % 2 == 1:
        return []
    out: list[frozenset[Edge]] = []

    def rec(unmatched: frozenset[int], chosen: tuple[Edge, ...]) -> None:
        if not unmatched:
            out.append(frozenset(chosen))
            return
        u = min(unmatched)
        for v in h.neighbors(u):
            if v in unmatched and v != u:
                rec(unmatched - {u, v}, chosen + ((u, v) if u < v else (v, u),))

    rec(frozenset(range(h.n)), ())
    return out


def structured_gadget_solutions(h: Graph
                                ) -> list[tuple[tuple[Edge, ...], tuple[Edge, ...]]]:
    """The aligned 2-step solutions of the duplication gadget: one perfect
    matching of the source graph with a global choice of which of the two
    cross patterns goes first."""
    sols = []
    for m in sorted(perfect_matchings(h), key=sorted):
        straight = []
        crossed = []
        for u, v in sorted(m):
            straight += [(2 * u, 2 * v), (2 * u + 1, 2 * v + 1)]
            crossed += [(2 * u, 2 * v + 1), (2 * u + 1, 2 * v)]
        straight = tuple(sorted(tuple(sorted(e)) for e in straight))
        crossed = tuple(sorted(tuple(sorted(e)) for e in crossed))
        sols.append((straight, crossed))
        sols.append((crossed, straight))
    return sols
