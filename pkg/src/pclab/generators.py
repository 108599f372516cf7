"""Named graph families and enumeration of connected graphs up to isomorphism."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import UnsupportedSizeError
from .graph import Graph, _min_placement

FAMILY_TAGS = (
    "path",
    "cycle",
    "star",
    "star_plus_e",
    "cycle4_plus_e",
    "double_star",
    "complete",
    "complete_multipartite",
)

#: built-in enumeration stops here; larger corpora come from graph6 files
MAX_ENUMERATION_N = 8


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def star_plus_edge(n: int) -> Graph:
    """Star on n vertices plus one edge between two leaves."""
    if n < 3:
        raise ValueError(f"star_plus_e needs n >= 3, got {n}")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])


def cycle4_plus_edge() -> Graph:
    """C_4 plus one chord."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centers of degrees a and b; all other vertices are leaves."""
    if a < 1 or b < 1:
        raise ValueError(f"double star needs degrees >= 1, got ({a},{b})")
    edges = [(0, 1)]
    edges += [(0, v) for v in range(2, a + 1)]
    edges += [(1, v) for v in range(a + 1, a + b)]
    return Graph.from_edges(a + b, edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_multipartite(*sizes: int) -> Graph:
    if len(sizes) < 2:
        raise ValueError("complete multipartite needs at least 2 parts")
    if any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be >= 1, got {sizes}")
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    n = len(part)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return Graph.from_edges(n, edges)


def generate(spec: FamilySpec) -> Graph:
    tag, params = spec.tag, spec.params
    if tag == "path":
        return path_graph(*_want(params, 1, tag))
    if tag == "cycle":
        return cycle_graph(*_want(params, 1, tag))
    if tag == "star":
        return star_graph(*_want(params, 1, tag))
    if tag == "star_plus_e":
        return star_plus_edge(*_want(params, 1, tag))
    if tag == "cycle4_plus_e":
        if params:
            raise ValueError("cycle4_plus_e takes no parameters")
        return cycle4_plus_edge()
    if tag == "double_star":
        return double_star(*_want(params, 2, tag))
    if tag == "complete":
        return complete_graph(*_want(params, 1, tag))
    if tag == "complete_multipartite":
        if len(params) < 2:
            raise ValueError("complete_multipartite needs at least 2 part sizes")
        return complete_multipartite(*params)
    raise ValueError(f"unknown family {tag!r}; expected one of {FAMILY_TAGS}")


def _want(params: tuple[int, ...], count: int, tag: str) -> tuple[int, ...]:
    if len(params) != count:
        raise ValueError(f"{tag} takes {count} parameter(s), got {len(params)}")
    return params


# --- enumeration up to isomorphism -----------------------------------------
#
# Connected graphs on n vertices are grown from connected graphs on n-1
# vertices by attaching a new vertex to every nonempty neighbor subset and
# deduplicating by canonical form.  Every connected graph has a non-cut
# vertex, so deleting one shows each class is reached this way.

_LEVELS: dict[int, tuple[Graph, ...]] = {}


def _build_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    reps: dict[tuple[int, ...], list[int]] = {}
    for parent in _level(n - 1):
        padj = parent.adj
        for subset in range(1, 1 << (n - 1)):
            adj = [a | ((subset >> i & 1) << (n - 1)) for i, a in enumerate(padj)]
            adj.append(subset)
            cols, perm = _min_placement(n, adj)
            if cols not in reps:
                # store the canonically labeled representative
                canon = [0] * n
                for i in range(n):
                    for j in range(i + 1, n):
                        if adj[perm[i]] >> perm[j] & 1:
                            canon[i] |= 1 << j
                            canon[j] |= 1 << i
                reps[cols] = canon
    return tuple(Graph(n, tuple(adj)) for _, adj in sorted(reps.items()))


def _level(n: int) -> tuple[Graph, ...]:
    if n not in _LEVELS:
        _LEVELS[n] = _build_level(n)
    return _LEVELS[n]


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs.

    Deterministic order (sorted by canonical code).  Supported for
    1 <= n <= 8; larger corpora should be read from graph6 files.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise UnsupportedSizeError(
            f"built-in enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    return iter(_level(n))
