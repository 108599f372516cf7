"""Exact proper connection numbers with verified certificates.

For each candidate k the search runs a seeded probe phase (structured
colorings, then random ones), then an exhaustive pass over canonical color
assignments, where color j+1 may first appear only after color j.  Refutation
requires the exhaustive pass to complete; a budget cutoff is reported as
"unknown", never silently coerced into an answer.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .coloring import EdgeColoring, has_strong_property, is_proper_connected
from .errors import BudgetExceededError, PreconditionError
from .graph import (
    Graph,
    _bits,
    bfs_distances,
    bipartition,
    bridge_profile,
    is_connected,
)


@dataclass(frozen=True)
class SolverBudget:
    max_assignments: int = 5_000_000
    max_seconds: Optional[float] = 60.0
    probes: int = 2000
    seed: int = 271828


DEFAULT_BUDGET = SolverBudget()


@dataclass
class SolverStats:
    probes: int = 0
    assignments: int = 0
    elapsed_seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "probes": self.probes,
            "assignments": self.assignments,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }


@dataclass(frozen=True)
class LowerBound:
    value: int
    tag: str  # complete | noncomplete | bridges


@dataclass(frozen=True)
class UpperBound:
    value: int
    tag: str  # spanning_tree_delta | greedy_proper_edge_coloring | star_exact
    certificate: EdgeColoring


@dataclass(frozen=True)
class Bounds:
    lower: LowerBound
    upper: UpperBound


@dataclass(frozen=True)
class StrongResult:
    possible: bool  # False iff the graph has a bridge (no second path exists)
    value: Optional[int]
    certificate: Optional[EdgeColoring]
    exhausted: bool


@dataclass(frozen=True)
class PcResult:
    value: int
    certificate: Optional[EdgeColoring]
    exhausted: bool  # True: every smaller color count is refuted (bound or enumeration)
    lower_bound: int
    lower_bound_tag: str
    strong: Optional[StrongResult] = None
    stats: Optional[dict] = None


def pc_lower_bound(g: Graph) -> LowerBound:
    if g.n < 2:
        raise PreconditionError("lower bound is defined for n >= 2")
    if not is_connected(g):
        raise PreconditionError("lower bound requires a connected graph")
    if g.m == g.n * (g.n - 1) // 2:
        return LowerBound(1, "complete")
    b = bridge_profile(g).b
    return LowerBound(max(2, b), "bridges" if b >= 3 else "noncomplete")


def _bfs_tree_masks(g: Graph, root: int) -> list[int]:
    dist = bfs_distances(g, root)
    masks = [0] * g.n
    for v in range(g.n):
        if v == root:
            continue
        # parent = least neighbor one layer closer
        for w in _bits(g.adj[v]):
            if dist[w] == dist[v] - 1:
                masks[v] |= 1 << w
                masks[w] |= 1 << v
                break
    return masks


def _improve_tree(g: Graph, masks: list[int]) -> None:
    """Reattach tree leaves hanging off maximum-degree vertices when that helps."""
    n = g.n
    for _ in range(n * n):
        deg = [m.bit_count() for m in masks]
        delta = max(deg)
        if delta <= 2:
            return
        moved = False
        for v in range(n):
            if deg[v] != delta:
                continue
            for u in _bits(masks[v]):
                if deg[u] != 1:
                    continue
                for w in _bits(g.adj[u] & ~(1 << v)):
                    if deg[w] + 1 < delta:
                        masks[v] &= ~(1 << u)
                        masks[u] = 1 << w
                        masks[w] |= 1 << u
                        moved = True
                        break
                if moved:
                    break
            if moved:
                break
        if not moved:
            return


def low_degree_spanning_tree(g: Graph) -> Graph:
    """Heuristic spanning tree with small maximum degree (BFS + leaf reattachment)."""
    best: list[int] | None = None
    best_delta = g.n
    for root in range(g.n):
        masks = _bfs_tree_masks(g, root)
        _improve_tree(g, masks)
        delta = max(m.bit_count() for m in masks)
        if delta < best_delta:
            best, best_delta = masks, delta
    assert best is not None
    return Graph(g.n, tuple(best))


def greedy_proper_edge_coloring(g: Graph) -> EdgeColoring:
    """Adjacent edges get distinct colors; every path is then proper."""
    used = [0] * g.n
    assignment = {}
    top = 0
    for u, v in g.edges:
        taken = used[u] | used[v]
        c = 1
        while taken >> (c - 1) & 1:
            c += 1
        assignment[(u, v)] = c
        used[u] |= 1 << (c - 1)
        used[v] |= 1 << (c - 1)
        top = max(top, c)
    return EdgeColoring(max(top, 1) if g.m else 0, assignment)


def _is_star(g: Graph) -> bool:
    return g.m == g.n - 1 and g.max_degree == g.n - 1 and g.n >= 3


def pc_upper_bound(g: Graph) -> UpperBound:
    if g.n < 2:
        raise PreconditionError("upper bound is defined for n >= 2")
    if not is_connected(g):
        raise PreconditionError("upper bound requires a connected graph")
    from .constructions import tree_proper_coloring  # deferred: avoids import cycle

    tree = low_degree_spanning_tree(g)
    tree_coloring = tree_proper_coloring(tree)
    delta = tree.max_degree
    assignment = dict(tree_coloring.assignment)
    for e in g.edges:
        if e not in assignment:
            assignment[e] = 1  # extra edges never break the tree's proper paths
    tree_cert = EdgeColoring(delta, assignment)

    greedy = greedy_proper_edge_coloring(g)
    if greedy.k < delta:
        value, tag, cert = greedy.k, "greedy_proper_edge_coloring", greedy
    else:
        value, tag, cert = delta, "spanning_tree_delta", tree_cert
    if _is_star(g):
        tag = "star_exact"
    check = is_proper_connected(g, cert)
    if not check.ok:  # pragma: no cover - construction is provably valid
        raise AssertionError(f"upper bound certificate failed at pair {check.witness}")
    return UpperBound(value, tag, cert)


def pc_bounds(g: Graph) -> Bounds:
    return Bounds(pc_lower_bound(g), pc_upper_bound(g))


class _Clock:
    __slots__ = ("deadline",)

    def __init__(self, max_seconds: Optional[float]):
        self.deadline = time.monotonic() + max_seconds if max_seconds else None

    def check(self, stage: str, stats: SolverStats) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError(
                f"time budget exceeded during {stage}", stage=stage, stats=stats)


def _structured_probes(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    edges = g.edges
    from .constructions import tree_proper_coloring  # deferred import, see above

    tree = low_degree_spanning_tree(g)
    if tree.max_degree <= k:
        base = tree_proper_coloring(tree).assignment
        yield tuple(base.get(e, 1) for e in edges)
    greedy = greedy_proper_edge_coloring(g)
    if greedy.k <= k:
        yield tuple(greedy.assignment[e] for e in edges)
    elif k >= 2:
        yield tuple((greedy.assignment[e] - 1) % k + 1 for e in edges)
    if k >= 2:
        sides = bipartition(g)
        if sides is not None:
            pos = [0] * g.n
            for side in sides:
                for i, v in enumerate(side):
                    pos[v] = i
            yield tuple((pos[u] + pos[v]) % 2 + 1 for u, v in edges)
        for root in range(g.n):
            dist = bfs_distances(g, root)
            yield tuple(min(dist[u], dist[v]) % k + 1 for u, v in edges)


def _verify(g: Graph, coloring: EdgeColoring, require_strong: bool) -> bool:
    if require_strong:
        return has_strong_property(g, coloring)
    return is_proper_connected(g, coloring).ok


def _search_k(g: Graph, k: int, require_strong: bool, budget: SolverBudget,
              stats: SolverStats, clock: _Clock) -> Optional[EdgeColoring]:
    """A verified k-coloring, or None after exhausting the canonical space."""
    edges = g.edges
    m = len(edges)
    if m == 0:
        return EdgeColoring(0, {})
    stage = f"k={k}" + ("+strong" if require_strong else "")
    clock.check(stage, stats)

    # tiny spaces go straight to enumeration
    if k ** m > max(64, budget.probes // 4):
        seen: set[tuple[int, ...]] = set()
        rng = random.Random(f"{budget.seed}:{k}:{require_strong}")
        probes_left = budget.probes
        for colors in _structured_probes(g, k):
            if probes_left <= 0:
                break
            if colors in seen:
                continue
            seen.add(colors)
            probes_left -= 1
            stats.probes += 1
            clock.check(stage, stats)
            coloring = EdgeColoring(k, dict(zip(edges, colors)))
            if _verify(g, coloring, require_strong):
                return coloring
        while probes_left > 0:
            probes_left -= 1
            colors = tuple(rng.randint(1, k) for _ in range(m))
            if colors in seen:
                continue
            seen.add(colors)
            stats.probes += 1
            if stats.probes % 64 == 0:
                clock.check(stage, stats)
            coloring = EdgeColoring(k, dict(zip(edges, colors)))
            if _verify(g, coloring, require_strong):
                return coloring

    # exhaustive pass over canonical assignments (first occurrences in order)
    colors_buf = [0] * m
    found: Optional[EdgeColoring] = None

    def rec(i: int, used: int) -> bool:
        nonlocal found
        if i == m:
            stats.assignments += 1
            if stats.assignments > budget.max_assignments:
                raise BudgetExceededError(
                    f"assignment budget exceeded during {stage}", stage=stage, stats=stats)
            if stats.assignments % 256 == 0:
                clock.check(stage, stats)
            coloring = EdgeColoring(k, dict(zip(edges, colors_buf)))
            if _verify(g, coloring, require_strong):
                found = coloring
                return True
            return False
        top = used + 1 if used < k else k
        for c in range(1, top + 1):
            colors_buf[i] = c
            if rec(i + 1, max(used, c)):
                return True
        return False

    rec(0, 0)
    return found


def exists_k_coloring(g: Graph, k: int, require_strong: bool = False,
                      budget: SolverBudget | None = None,
                      stats: SolverStats | None = None) -> Optional[EdgeColoring]:
    """A verified proper-connecting k-coloring (strong if asked), or None if refuted.

    Raises BudgetExceededError when the search is cut off: that outcome is
    "unknown", distinct from the None refutation.
    """
    if not is_connected(g):
        raise PreconditionError("search requires a connected graph")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    budget = budget or DEFAULT_BUDGET
    stats = stats if stats is not None else SolverStats()
    return _search_k(g, k, require_strong, budget, stats, _Clock(budget.max_seconds))


_EXACT_CACHE: dict[tuple, PcResult] = {}


def exact_pc(g: Graph, require_strong: bool = False,
             budget: SolverBudget | None = None) -> PcResult:
    """Exact pc(g) with a verified certificate; pc of the one-vertex graph is 0.

    ``exhausted`` is True when every smaller color count was ruled out, by the
    lower bound or by completed enumeration.  On a budget cutoff the result
    carries the best verified upper bound with exhausted=False.
    """
    if not is_connected(g):
        raise PreconditionError("pc is defined on connected graphs")
    cacheable = budget is None
    key = (g.adj, require_strong)
    if cacheable and key in _EXACT_CACHE:
        return _EXACT_CACHE[key]
    budget = budget or DEFAULT_BUDGET
    stats = SolverStats()
    clock = _Clock(budget.max_seconds)
    t0 = time.monotonic()

    if g.n == 1:
        result = PcResult(0, EdgeColoring(0, {}), True, 0, "trivial",
                          StrongResult(True, 0, EdgeColoring(0, {}), True) if require_strong else None,
                          stats.to_json())
        if cacheable:
            _EXACT_CACHE[key] = result
        return result

    lower = pc_lower_bound(g)
    if lower.tag == "complete":
        value = 1
        certificate = EdgeColoring(1, {e: 1 for e in g.edges})
        exhausted = True
    else:
        upper = pc_upper_bound(g)
        value = upper.value
        certificate: Optional[EdgeColoring] = upper.certificate
        exhausted = True
        for k in range(lower.value, upper.value):
            try:
                found = _search_k(g, k, False, budget, stats, clock)
            except BudgetExceededError:
                exhausted = False  # value is only an upper bound now
                break
            if found is not None:
                value = k
                certificate = found
                break

    strong = None
    if require_strong:
        strong = _strong_variant(g, value if exhausted else max(2, lower.value),
                                 budget, stats, clock)

    stats.elapsed_seconds = time.monotonic() - t0
    result = PcResult(value, certificate, exhausted, lower.value, lower.tag,
                      strong, stats.to_json())
    if cacheable and exhausted and (strong is None or strong.exhausted):
        _EXACT_CACHE[key] = result
    return result


def _strong_variant(g: Graph, start_k: int, budget: SolverBudget,
                    stats: SolverStats, clock: _Clock) -> StrongResult:
    if bridge_profile(g).bridges:
        # the endpoints of a bridge have a unique path between them
        return StrongResult(False, None, None, True)
    for k in range(max(2, start_k), g.m):
        try:
            found = _search_k(g, k, True, budget, stats, clock)
        except BudgetExceededError:
            return StrongResult(True, None, None, False)
        if found is not None:
            return StrongResult(True, k, found, True)
    # bridgeless: the all-distinct coloring is strong (two edge-disjoint paths per pair)
    rainbow = EdgeColoring(g.m, {e: i + 1 for i, e in enumerate(g.edges)})
    if not has_strong_property(g, rainbow):  # pragma: no cover - theory guarantees this
        raise AssertionError("all-distinct coloring failed the strong check on a bridgeless graph")
    return StrongResult(True, g.m, rainbow, True)
