"""Proper-path machinery over edge-colored graphs.

A proper path never repeats a color on consecutive edges.  Searches here are
exact: reachability in the (vertex, entering-color) state space is used only
to prune, because a proper walk need not shorten to a proper path.  The
answer always comes from backtracking over simple paths.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import BudgetExceededError, ColoringFormatError, PreconditionError
from .graph import Graph, _bits, is_connected

#: default work budget (node expansions) for exhaustive per-pair enumeration
DEFAULT_PATH_BUDGET = 10**6


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colors 1..k to the edges of a host graph.

    ``k`` may exceed the number of colors actually used; ``normalized()``
    shrinks it.  Keys are edge tuples (u,v) with u < v.
    """

    k: int
    assignment: Mapping[tuple[int, int], int]

    def __post_init__(self):
        if self.k < 0:
            raise ColoringFormatError(f"k must be >= 0, got {self.k}")
        if self.assignment and self.k < 1:
            raise ColoringFormatError("nonempty coloring needs k >= 1")
        for (u, v), c in self.assignment.items():
            if u >= v:
                raise ColoringFormatError(f"edge key ({u},{v}) must have u < v")
            if not 1 <= c <= self.k:
                raise ColoringFormatError(
                    f"color {c} on edge ({u},{v}) outside 1..{self.k}")

    @classmethod
    def from_sequence(cls, g: Graph, colors: Iterable[int], k: int | None = None) -> "EdgeColoring":
        colors = list(colors)
        if len(colors) != g.m:
            raise ColoringFormatError(
                f"expected {g.m} colors (one per edge), got {len(colors)}")
        if k is None:
            k = max(colors, default=0)
        return cls(k, dict(zip(g.edges, colors)))

    def color(self, u: int, v: int) -> int:
        return self.assignment[(u, v) if u < v else (v, u)]

    def used_colors(self) -> frozenset[int]:
        return frozenset(self.assignment.values())

    def normalized(self) -> "EdgeColoring":
        """Renumber the used colors to 1..t (ascending by original value)."""
        used = sorted(set(self.assignment.values()))
        remap = {c: i + 1 for i, c in enumerate(used)}
        return EdgeColoring(len(used), {e: remap[c] for e, c in self.assignment.items()})


@dataclass(frozen=True)
class ProperPath:
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def start_color(self) -> int:
        return self.colors[0]

    @property
    def end_color(self) -> int:
        return self.colors[-1]


@dataclass(frozen=True)
class PathCheck:
    ok: bool
    reason: Optional[str] = None  # too_short | repeated_vertex | missing_edge | color_clash
    index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ConnectivityCheck:
    ok: bool
    witness: Optional[tuple[int, int]] = None  # least failing pair when not ok

    def __bool__(self) -> bool:
        return self.ok


class _View:
    """Dense color matrix + sorted neighbor lists for the search loops."""

    __slots__ = ("n", "k", "col", "nbr")

    def __init__(self, g: Graph, coloring: EdgeColoring):
        if len(coloring.assignment) != g.m:
            raise ColoringFormatError(
                f"coloring has {len(coloring.assignment)} edges, graph has {g.m}")
        n = g.n
        col = [[0] * n for _ in range(n)]
        for u, v in g.edges:
            c = coloring.assignment.get((u, v))
            if c is None:
                raise ColoringFormatError(f"edge ({u},{v}) is uncolored")
            col[u][v] = col[v][u] = c
        self.n = n
        self.k = coloring.k
        self.col = col
        self.nbr = [list(_bits(g.adj[v])) for v in range(n)]


def is_proper_path(g: Graph, coloring: EdgeColoring, sequence: Iterable[int]) -> PathCheck:
    """Check one vertex sequence: simple path with no consecutive color repeat."""
    vs = tuple(sequence)
    if len(vs) < 2:
        return PathCheck(False, "too_short")
    seen = set()
    for i, v in enumerate(vs):
        if v in seen:
            return PathCheck(False, "repeated_vertex", i)
        seen.add(v)
    prev = 0
    for i in range(len(vs) - 1):
        u, v = vs[i], vs[i + 1]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return PathCheck(False, "missing_edge", i)
        try:
            c = coloring.color(u, v)
        except KeyError:
            raise ColoringFormatError(f"edge ({u},{v}) is uncolored") from None
        if i and c == prev:
            return PathCheck(False, "color_clash", i)
        prev = c
    return PathCheck(True)


def _back_reach(view: _View, target: int) -> list[int]:
    """reach[w] bit (c-1): a proper walk to target can leave w after entering via color c."""
    full = (1 << view.k) - 1
    reach = [0] * view.n
    reach[target] = full
    changed = True
    while changed:
        changed = False
        for w in range(view.n):
            if w == target:
                continue
            s = 0
            for x in view.nbr[w]:
                c = view.col[w][x]
                if reach[x] >> (c - 1) & 1:
                    s |= 1 << (c - 1)
            if s == 0:
                new = 0
            elif s & (s - 1):
                new = full  # two exit colors cover every entry color
            else:
                new = full & ~s
            if new != reach[w]:
                reach[w] = new
                changed = True
    return reach


def _fwd_reachable(view: _View, source: int) -> int:
    """Bitmask of vertices reachable from source by a proper walk."""
    state = [0] * view.n
    stack = []
    for x in view.nbr[source]:
        c = view.col[source][x]
        if not state[x] >> (c - 1) & 1:
            state[x] |= 1 << (c - 1)
            stack.append((x, c))
    while stack:
        w, c = stack.pop()
        for x in view.nbr[w]:
            c2 = view.col[w][x]
            if c2 != c and not state[x] >> (c2 - 1) & 1:
                state[x] |= 1 << (c2 - 1)
                stack.append((x, c2))
    mask = 1 << source
    for v, s in enumerate(state):
        if s:
            mask |= 1 << v
    return mask


def _depth_limited(view: _View, u: int, v: int, reach: list[int], limit: int) -> Optional[ProperPath]:
    col = view.col
    nbr = view.nbr
    path = [u]
    colors: list[int] = []

    def go(w: int, lastc: int, left: int, visited: int) -> bool:
        for x in nbr[w]:
            if visited >> x & 1:
                continue
            cx = col[w][x]
            if cx == lastc:
                continue
            if x == v:
                path.append(x)
                colors.append(cx)
                return True
            if left > 1 and reach[x] >> (cx - 1) & 1:
                path.append(x)
                colors.append(cx)
                if go(x, cx, left - 1, visited | 1 << x):
                    return True
                path.pop()
                colors.pop()
        return False

    if go(u, 0, limit, 1 << u):
        return ProperPath(tuple(path), tuple(colors))
    return None


def _find_path(view: _View, u: int, v: int, dist: Optional[tuple[int, ...]] = None,
               reach: Optional[list[int]] = None) -> Optional[ProperPath]:
    if view.col[u][v]:
        return ProperPath((u, v), (view.col[u][v],))
    if dist is None:
        dist = _plain_distances(view, u)
    if dist[v] < 0:
        return None
    if reach is None:
        reach = _back_reach(view, v)
    if not any(reach[x] >> (view.col[u][x] - 1) & 1 for x in view.nbr[u]):
        return None
    for limit in range(dist[v], view.n):
        found = _depth_limited(view, u, v, reach, limit)
        if found is not None:
            return found
    return None


def _plain_distances(view: _View, root: int) -> tuple[int, ...]:
    dist = [-1] * view.n
    dist[root] = 0
    queue = [root]
    while queue:
        nxt = []
        for w in queue:
            for x in view.nbr[w]:
                if dist[x] < 0:
                    dist[x] = dist[w] + 1
                    nxt.append(x)
        queue = nxt
    return tuple(dist)


def find_proper_path(g: Graph, coloring: EdgeColoring, u: int, v: int) -> Optional[ProperPath]:
    """Shortest proper u-v path, lexicographically least among those; None if none exists."""
    if u == v:
        raise ValueError("endpoints must be distinct")
    view = _View(g, coloring)
    return _find_path(view, u, v)


def is_proper_connected(g: Graph, coloring: EdgeColoring) -> ConnectivityCheck:
    """Every vertex pair joined by a proper path?  Witness = least failing pair."""
    if not is_connected(g):
        raise PreconditionError("proper connectivity is defined on connected graphs")
    view = _View(g, coloring)
    fwd: dict[int, int] = {}
    back: dict[int, list[int]] = {}
    for u in range(g.n):
        dist = None
        for v in range(u + 1, g.n):
            if view.col[u][v]:
                continue  # a single edge is always a proper path
            if u not in fwd:
                fwd[u] = _fwd_reachable(view, u)
            if not fwd[u] >> v & 1:
                return ConnectivityCheck(False, (u, v))
            if dist is None:
                dist = _plain_distances(view, u)
            if v not in back:
                back[v] = _back_reach(view, v)
            if _find_path(view, u, v, dist, back[v]) is None:
                return ConnectivityCheck(False, (u, v))
    return ConnectivityCheck(True)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError(
                "path enumeration budget exceeded", stage="path_enumeration")


def _enumerate_paths(view: _View, u: int, v: int, budget: _Budget, visit) -> None:
    """Call visit(colors) for every proper simple u-v path; visit may raise to stop."""
    reach = _back_reach(view, v)
    col = view.col
    nbr = view.nbr
    colors: list[int] = []

    def go(w: int, lastc: int, visited: int) -> None:
        budget.spend()
        for x in nbr[w]:
            if visited >> x & 1:
                continue
            cx = col[w][x]
            if cx == lastc:
                continue
            if x == v:
                colors.append(cx)
                visit(colors)
                colors.pop()
                continue
            if reach[x] >> (cx - 1) & 1:
                colors.append(cx)
                go(x, cx, visited | 1 << x)
                colors.pop()

    go(u, 0, 1 << u)


def endpoint_color_pairs(g: Graph, coloring: EdgeColoring, u: int, v: int,
                         budget: int = DEFAULT_PATH_BUDGET) -> frozenset[tuple[int, int]]:
    """Exact set of (start, end) colors over all proper u-v paths."""
    if u == v:
        raise ValueError("endpoints must be distinct")
    view = _View(g, coloring)
    pairs: set[tuple[int, int]] = set()
    _enumerate_paths(view, u, v, _Budget(budget),
                     lambda colors: pairs.add((colors[0], colors[-1])))
    return frozenset(pairs)


class _StrongPairFound(Exception):
    pass


def has_strong_property(g: Graph, coloring: EdgeColoring,
                        budget: int = DEFAULT_PATH_BUDGET) -> bool:
    """Every pair admits two proper paths differing in start color and in end color."""
    if not is_connected(g):
        raise PreconditionError("the strong property is defined on connected graphs")
    if g.n == 1:
        return True
    view = _View(g, coloring)
    # necessary: every vertex must see at least two colors on its incident edges
    for w in range(g.n):
        incident = {view.col[w][x] for x in view.nbr[w]}
        if len(incident) < 2:
            return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            seen: set[tuple[int, int]] = set()

            def visit(colors: list[int]) -> None:
                pair = (colors[0], colors[-1])
                if pair in seen:
                    return
                for s2, e2 in seen:
                    if s2 != pair[0] and e2 != pair[1]:
                        raise _StrongPairFound
                seen.add(pair)

            try:
                _enumerate_paths(view, u, v, _Budget(budget), visit)
            except _StrongPairFound:
                continue
            return False
    return True


# --- coloring file format ---------------------------------------------------
#
#   # optional comments
#   colors <k>
#   edge <u> <v> <c>        one line per edge, 0-indexed vertices, 1 <= c <= k


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    k: int | None = None
    assignment: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "colors":
            if k is not None:
                raise ColoringFormatError(f"line {lineno}: duplicate 'colors' line")
            if len(tokens) != 2:
                raise ColoringFormatError(f"line {lineno}: expected 'colors <k>'")
            k = _parse_int(tokens[1], lineno)
            if k < 1:
                raise ColoringFormatError(f"line {lineno}: k must be >= 1")
        elif tokens[0] == "edge":
            if k is None:
                raise ColoringFormatError(f"line {lineno}: 'colors' line must come first")
            if len(tokens) != 4:
                raise ColoringFormatError(f"line {lineno}: expected 'edge <u> <v> <c>'")
            u, v, c = (_parse_int(t, lineno) for t in tokens[1:])
            if u == v or not (0 <= u < g.n and 0 <= v < g.n):
                raise ColoringFormatError(f"line {lineno}: bad endpoints ({u},{v})")
            key = (u, v) if u < v else (v, u)
            if not g.has_edge(*key):
                raise ColoringFormatError(f"line {lineno}: ({u},{v}) is not a graph edge")
            if key in assignment:
                raise ColoringFormatError(f"line {lineno}: edge ({u},{v}) colored twice")
            if not 1 <= c <= k:
                raise ColoringFormatError(f"line {lineno}: color {c} outside 1..{k}")
            assignment[key] = c
        else:
            raise ColoringFormatError(f"line {lineno}: unknown directive {tokens[0]!r}")
    if k is None:
        raise ColoringFormatError("missing 'colors' line")
    missing = [e for e in g.edges if e not in assignment]
    if missing:
        raise ColoringFormatError(f"uncolored edges: {missing[:5]}")
    return EdgeColoring(k, assignment)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ColoringFormatError(f"line {lineno}: {token!r} is not an integer") from None


def format_coloring(coloring: EdgeColoring, g: Graph) -> str:
    lines = [f"colors {coloring.k}"]
    for u, v in g.edges:
        lines.append(f"edge {u} {v} {coloring.color(u, v)}")
    return "\n".join(lines) + "\n"
