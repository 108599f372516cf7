"""Shared oracles and helpers.

The oracles here are deliberately independent of the package internals:
networkx for graph structure, itertools-style exhaustive enumeration for
colorings and paths, and a cycle-index count for enumeration totals.
"""
from __future__ import annotations

import itertools
import math
import random
from collections import Counter

import networkx as nx

from pclab import Graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def naive_proper_paths(g: Graph, coloring, u: int, v: int):
    """All proper simple u-v paths via networkx path enumeration."""
    G = to_nx(g)
    out = []
    for path in nx.all_simple_paths(G, u, v):
        cs = [coloring.color(path[i], path[i + 1]) for i in range(len(path) - 1)]
        if all(cs[i] != cs[i + 1] for i in range(len(cs) - 1)):
            out.append((tuple(path), tuple(cs)))
    return out


def naive_proper_connected(g: Graph, coloring) -> bool:
    return all(naive_proper_paths(g, coloring, u, v)
               for u in range(g.n) for v in range(u + 1, g.n))


def brute_pc(g: Graph) -> int:
    """Reference pc by trying every coloring with k = 1, 2, ... colors."""
    from pclab import EdgeColoring

    if g.n == 1:
        return 0
    for k in range(1, g.m + 1):
        for colors in itertools.product(range(1, k + 1), repeat=g.m):
            if naive_proper_connected(g, EdgeColoring.from_sequence(g, colors, k)):
                return k
    raise AssertionError("every connected graph has pc <= m")


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """Random spanning tree plus a random sprinkle of extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[rng.randrange(i)], order[i]
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.3:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree from a Pruefer sequence."""
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((min(last), max(last)))
    return Graph.from_edges(n, edges)


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    largest = n if largest is None else min(largest, n)
    for first in range(largest, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def count_graph_classes(n: int) -> int:
    """Graphs on n vertices up to isomorphism, by the cycle index of S_n on pairs."""
    total = 0
    for part in _partitions(n):
        perms = math.factorial(n)
        for length in part:
            perms //= length
        for _, mult in Counter(part).items():
            perms //= math.factorial(mult)
        orbits = sum(length // 2 for length in part)
        orbits += sum(math.gcd(a, b) for a, b in itertools.combinations(part, 2))
        total += perms * (1 << orbits)
    return total // math.factorial(n)


def count_connected_classes(n: int) -> int:
    """Inverse Euler transform of the all-graphs class counts."""
    a = [1] + [count_graph_classes(k) for k in range(1, n + 1)]
    b = [0] * (n + 1)
    c = [0] * (n + 1)
    for m in range(1, n + 1):
        b[m] = m * a[m] - sum(b[k] * a[m - k] for k in range(1, m))
        c[m] = (b[m] - sum(d * c[d] for d in range(1, m) if m % d == 0)) // m
    return c[n]
