"""Shared helpers for building labeled configurations and random instances."""

from __future__ import annotations

import random

from swaproute import core


def config_from_label_map(g: core.Graph, placement: dict) -> tuple:
    """Configuration from {vertex label: token label}; unmentioned stay home."""
    tokens = list(core.identity(g.n))
    for vlab, tlab in placement.items():
        tokens[g.vertex_of_label(vlab)] = g.vertex_of_label(tlab)
    f = tuple(tokens)
    core.check_configuration(g, f)
    return f


def swap_tokens(g: core.Graph, a, b) -> tuple:
    """Identity configuration with the tokens of labels a and b exchanged."""
    return config_from_label_map(g, {a: b, b: a})


def square_graph() -> tuple[core.Graph, tuple]:
    """The 4-cycle drawn as a square with its reversal configuration."""
    g = core.Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    return g, (3, 2, 1, 0)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> core.Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = core.Graph(n, edges)
        if g.is_connected():
            return g


def random_configuration(rng: random.Random, n: int) -> tuple:
    tokens = list(range(n))
    rng.shuffle(tokens)
    return tuple(tokens)
