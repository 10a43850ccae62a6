"""Shared fixtures: named small graphs, seeded random graph samplers, and the
session-wide certificate registry behind the global soundness criterion."""

from __future__ import annotations

import random

import pytest

from madcycle.graph import Graph, build_graph, is_biconnected, is_connected


def complete(n: int) -> Graph:
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def cycle_graph(n: int) -> Graph:
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def path_graph(n: int) -> Graph:
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph([(i, a + j) for i in range(a) for j in range(b)], a + b)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(outer + spokes + inner, 10)


def bowtie() -> Graph:
    return build_graph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)], 5)


def glued_k5s() -> Graph:
    """Two K5s sharing the vertex pair {3, 4}."""
    a = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    b = [(i, j) for i in range(3, 8) for j in range(i + 1, 8)]
    return build_graph(a + b, 8)


def complete_minus_matching(n: int) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if not (j == i + 1 and i % 2 == 0)
    ]
    return build_graph(edges, n)


def split_graph(a: int, b: int) -> Graph:
    """Clique of size a joined completely to an independent set of size b."""
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    edges += [(i, a + j) for i in range(a) for j in range(b)]
    return build_graph(edges, a + b)


def random_graph(rng: random.Random, n: int, prob: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < prob]
    return build_graph(edges, n)


def random_connected_graph(rng: random.Random, n: int, prob: float) -> Graph:
    for _ in range(4000):
        g = random_graph(rng, n, prob)
        if g.n >= 2 and g.m >= 1 and is_connected(g):
            return g
    raise RuntimeError("could not sample a connected graph")


def random_2connected_graph(rng: random.Random, n: int, prob: float) -> Graph:
    for _ in range(4000):
        g = random_graph(rng, n, prob)
        if is_biconnected(g):
            return g
    raise RuntimeError("could not sample a 2-connected graph")


@pytest.fixture(scope="session")
def certificate_registry():
    """(graph, certificate) pairs collected by the acceptance criteria."""
    return []
