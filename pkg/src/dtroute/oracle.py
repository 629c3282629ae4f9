"""Brute-force ground truth for small graphs.

Nothing here reuses the sweeps under test: first-hop costs come from simple
path enumeration and from a heap-based Dijkstra, and transverse-class costs
come from explicitly built paths whose weights are summed edge by edge.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

from .graph import Graph
from .spt import SptResult

INF = math.inf
MAX_NODES = 14


class OracleSizeError(ValueError):
    pass


def _guard(g: Graph, max_nodes: int | None) -> None:
    limit = MAX_NODES if max_nodes is None else max_nodes
    if g.n > limit:
        raise OracleSizeError(f"oracle limited to {limit} nodes, graph has {g.n}")


@dataclass
class OracleCosts:
    root: int
    via: dict[int, list[float]]  # via[v][d]: best loop-free s..d cost with first hop v

    def best(self, d: int) -> float:
        return min((row[d] for row in self.via.values()), default=INF)

    def hops(self, d: int) -> set[int]:
        return {v for v, row in self.via.items() if row[d] < INF}

    def alternate_exists(self, d: int) -> bool:
        return len(self.hops(d)) >= 2


def enumerate_first_hop_costs(g: Graph, s: int, *, prune: bool = True,
                              max_nodes: int | None = None) -> OracleCosts:
    """Depth-first enumeration of simple paths from ``s``.

    With ``prune`` a prefix is abandoned once it is no cheaper than the best
    prefix already seen at the same node under the same first hop. Because
    weights are positive, a cheapest simple path is never cut this way.
    """
    _guard(g, max_nodes)
    via: dict[int, list[float]] = {}
    for v, w in g.succ(s):
        best = [INF] * g.n
        visited = [False] * g.n
        visited[s] = True

        def walk(x: int, c: float) -> None:
            if prune and c >= best[x]:
                return
            best[x] = min(best[x], c)
            visited[x] = True
            for y, wy in g.succ(x):
                if not visited[y]:
                    walk(y, c + wy)
            visited[x] = False

        walk(v, w)
        via[v] = best
    return OracleCosts(s, via)


def heap_dijkstra(g: Graph, src: int, removed: int | None = None) -> list[float]:
    dist = [INF] * g.n
    dist[src] = 0
    heap = [(0, src)]
    while heap:
        c, x = heapq.heappop(heap)
        if c > dist[x]:
            continue
        for y, w in g.succ(x):
            if y != removed and c + w < dist[y]:
                dist[y] = c + w
                heapq.heappush(heap, (c + w, y))
    return dist


def dijkstra_first_hop_costs(g: Graph, s: int) -> OracleCosts:
    """``w(s, v) + C1(v, d)`` with ``s`` removed from the neighbor's search."""
    via = {}
    for v, w in g.succ(s):
        via[v] = [w + c for c in heap_dijkstra(g, v, removed=s)]
        via[v][s] = INF
    return OracleCosts(s, via)


def oracle_first_hop_costs(g: Graph, s: int, max_nodes: int | None = None) -> OracleCosts:
    """Per-first-hop exact costs; raises if the two methods disagree."""
    a = enumerate_first_hop_costs(g, s, max_nodes=max_nodes)
    b = dijkstra_first_hop_costs(g, s)
    for v in a.via:
        for d in range(g.n):
            if d != s and not math.isclose(a.via[v][d], b.via[v][d]) and a.via[v][d] != b.via[v][d]:
                raise AssertionError(f"oracle methods disagree at ({s}, {v}, {d})")
    return a


# -- transverse path classes -------------------------------------------------


def ancestors(spt: SptResult, x: int) -> list[int]:
    """x, F(x), F(F(x)), ..., root."""
    out = [x]
    while out[-1] != spt.root:
        out.append(spt.father[out[-1]])
    return out


def closest_common_ancestor(spt: SptResult, x: int, y: int) -> int:
    up = set(ancestors(spt, x))
    for a in ancestors(spt, y):
        if a in up:
            return a
    raise ValueError("nodes are not in the same tree")


def _branch_of(spt: SptResult, x: int) -> int:
    chain = ancestors(spt, x)
    return chain[-2] if len(chain) >= 2 else -1


@dataclass
class TransverseClassCosts:
    root: int
    primary: dict[int, dict[int, float]] = field(default_factory=dict)
    simple: dict[int, dict[int, float]] = field(default_factory=dict)
    backward: dict[int, dict[int, float]] = field(default_factory=dict)
    forward: dict[int, dict[int, float]] = field(default_factory=dict)
    paths: list[tuple[str, tuple[int, ...], float]] = field(default_factory=list)

    def best(self, k: int, d: int) -> float:
        return min(cls.get(k, {}).get(d, INF) for cls in (self.primary, self.simple, self.backward, self.forward))


def _edge_kind(g: Graph, spt: SptResult, x: int, y: int) -> str:
    s = spt.root
    if y == s:
        return "into_root"
    if x == s:
        return "first_hop" if spt.father[y] == s else "transverse"
    if _branch_of(spt, x) != _branch_of(spt, y):
        return "transverse"
    if spt.father[y] == x or spt.father[x] == y:
        return "branch"
    return "internal"


def _cost(g: Graph, path: tuple[int, ...]) -> float:
    return sum(g.weight(a, b) for a, b in zip(path, path[1:]))


def oracle_transverse_costs(g: Graph, spt: SptResult, max_nodes: int | None = None) -> TransverseClassCosts:
    """Per-class minimum cost by first hop and destination.

    Classes are built literally: a simple transverse path is a tree path to x
    followed by one transverse edge (x, c); a backward one climbs the tree from
    c to a proper ancestor below the root; a forward one descends the tree from
    the end of a simple or backward path. Every built path is checked to be
    simple, to contain exactly one transverse edge and no internal edge.
    """
    _guard(g, max_nodes)
    s = spt.root
    reach = [x for x in range(g.n) if spt.reachable(x)]
    children: dict[int, list[int]] = {x: [] for x in reach}
    for x in reach:
        if x != s:
            children[spt.father[x]].append(x)

    def tree_down(a: int) -> list[tuple[int, ...]]:
        """Tree paths from a to each proper descendant."""
        out = []
        stack = [(a,)]
        while stack:
            p = stack.pop()
            for c in children[p[-1]]:
                q = p + (c,)
                out.append(q)
                stack.append(q)
        return out

    res = TransverseClassCosts(s)

    def note(cls: dict, name: str, path: tuple[int, ...]) -> None:
        assert len(set(path)) == len(path), path
        kinds = [_edge_kind(g, spt, a, b) for a, b in zip(path, path[1:])]
        if name != "primary":
            assert kinds.count("transverse") == 1 and "internal" not in kinds, (name, path, kinds)
        c = _cost(g, path)
        k, d = path[1], path[-1]
        row = cls.setdefault(k, {})
        if c < row.get(d, INF):
            row[d] = c
        res.paths.append((name, path, c))

    for d in reach:
        if d != s:
            note(res.primary, "primary", tuple(spt.path(d)))

    simple_paths = []
    for x in reach:
        for c, _ in g.succ(x):
            if c == s or _edge_kind(g, spt, x, c) != "transverse":
                continue
            p = tuple(spt.path(x)) + (c,)
            simple_paths.append(p)
            note(res.simple, "simple", p)

    backward_paths = []
    for p in simple_paths:
        climb = ancestors(spt, p[-1])[1:-1]  # proper ancestors, root excluded
        q = p
        for a in climb:
            q = q + (a,)
            if a in p:
                break
            backward_paths.append(q)
            note(res.backward, "backward", q)

    for p in simple_paths + backward_paths:
        for tail in tree_down(p[-1]):
            q = p + tail[1:]
            if len(set(q)) == len(q):
                note(res.forward, "forward", q)
    return res


def all_simple_paths(g: Graph, s: int, d: int, max_nodes: int | None = 10):
    """Every simple s..d path as a node tuple (exponential; tiny graphs only)."""
    _guard(g, max_nodes)
    path = [s]
    on = {s}

    def walk(x: int):
        if x == d:
            yield tuple(path)
            return
        for y, _ in g.succ(x):
            if y not in on:
                path.append(y)
                on.add(y)
                yield from walk(y)
                on.discard(y)
                path.pop()

    yield from walk(s)


def path_cost(g: Graph, path) -> float:
    return _cost(g, tuple(path))


def edge_kind(g: Graph, spt: SptResult, x: int, y: int) -> str:
    return _edge_kind(g, spt, x, y)
