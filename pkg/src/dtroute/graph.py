"""Weighted symmetric router graphs: construction, edge-list I/O, fixtures and generators."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx


class GraphError(ValueError):
    """Invalid graph input. ``line`` is set when the error comes from a file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Graph:
    """Immutable directed graph in which every edge has its reverse.

    Nodes are dense indices ``0..n-1`` carrying string labels. Index order is the
    order of first appearance in the link list, and it is the tie-breaking order
    used by every algorithm in the package.
    """

    __slots__ = ("_labels", "_index", "_links", "_succ", "_weight", "_pred_count")

    def __init__(self, labels: Sequence[str], links: Iterable[tuple[int, int, float, float]]):
        self._labels = tuple(str(x) for x in labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise GraphError("duplicate node label")
        n = len(self._labels)
        weight: dict[tuple[int, int], float] = {}
        kept = []
        for u, v, w, w_rev in links:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"node index out of range in link ({u}, {v})")
            if u == v:
                raise GraphError(f"self-loop on {self._labels[u]}")
            for a, b, c in ((u, v, w), (v, u, w_rev)):
                if not c > 0 or math.isinf(c):
                    raise GraphError(f"weight of ({self._labels[a]}, {self._labels[b]}) must be positive and finite")
                if (a, b) in weight:
                    raise GraphError(f"duplicate edge ({self._labels[a]}, {self._labels[b]})")
                weight[(a, b)] = c
            kept.append((u, v, w, w_rev))
        succ: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for (a, b), c in weight.items():
            succ[a].append((b, c))
        self._succ = tuple(tuple(sorted(s)) for s in succ)
        self._links = tuple(kept)
        self._weight = weight
        self._pred_count = tuple(len(s) for s in self._succ)  # symmetric: k- == k+

    @classmethod
    def from_labeled_links(cls, links: Iterable[tuple]) -> "Graph":
        """Build from ``(u, v, w)`` or ``(u, v, w, w_rev)`` tuples of labels."""
        labels: dict[str, int] = {}
        out = []
        for link in links:
            u, v, w = str(link[0]), str(link[1]), link[2]
            w_rev = link[3] if len(link) > 3 else w
            for lab in (u, v):
                labels.setdefault(lab, len(labels))
            out.append((labels[u], labels[v], w, w_rev))
        return cls(list(labels), out)

    # -- accessors -------------------------------------------------------

    def __len__(self) -> int:
        return len(self._labels)

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def links(self) -> tuple[tuple[int, int, float, float], ...]:
        return self._links

    @property
    def num_edges(self) -> int:
        """Number of directed edges |E|."""
        return len(self._weight)

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise GraphError(f"unknown node {label!r}") from None

    def label(self, i: int) -> str:
        return self._labels[i]

    def succ(self, x: int) -> tuple[tuple[int, float], ...]:
        """Successors of ``x`` as ``(y, w(x, y))`` pairs, sorted by index."""
        return self._succ[x]

    def out_degree(self, x: int) -> int:
        return len(self._succ[x])

    def in_degree(self, x: int) -> int:
        return self._pred_count[x]

    def weight(self, x: int, y: int) -> float:
        return self._weight[(x, y)]

    def has_edge(self, x: int, y: int) -> bool:
        return (x, y) in self._weight

    def edges(self) -> Iterator[tuple[int, int, float]]:
        for x in range(self.n):
            for y, w in self._succ[x]:
                yield x, y, w

    def weights(self) -> set[float]:
        return set(self._weight.values())

    def mean_degree(self) -> float:
        return self.num_edges / self.n if self.n else 0.0

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y, _ in self._succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._weight == other._weight

    def __hash__(self) -> int:
        return hash((self._labels, frozenset(self._weight.items())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, links={len(self._links)})"


# -- edge-list format ------------------------------------------------------


def _parse_weight(tok: str, lineno: int) -> float:
    try:
        val = float(tok)
    except ValueError:
        raise GraphError(f"unparsable weight {tok!r}", lineno) from None
    if not val > 0 or math.isinf(val):
        raise GraphError(f"weight must be positive and finite, got {tok}", lineno)
    return int(val) if val.is_integer() and "." not in tok and "e" not in tok.lower() else val


def load_graph(text: str) -> Graph:
    """Parse an edge-list document: one ``u v w [w_rev]`` link per line, ``#`` comments."""
    labels: dict[str, int] = {}
    seen: set[tuple[str, str]] = set()
    links = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (3, 4):
            raise GraphError(f"expected 'u v w [w_rev]', got {raw.strip()!r}", lineno)
        u, v = parts[0], parts[1]
        if u == v:
            raise GraphError(f"self-loop on {u}", lineno)
        w = _parse_weight(parts[2], lineno)
        w_rev = _parse_weight(parts[3], lineno) if len(parts) == 4 else w
        for pair in ((u, v), (v, u)):
            if pair in seen:
                raise GraphError(f"duplicate edge ({pair[0]}, {pair[1]})", lineno)
            seen.add(pair)
        for lab in (u, v):
            labels.setdefault(lab, len(labels))
        links.append((labels[u], labels[v], w, w_rev))
    return Graph(list(labels), links)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


def _fmt(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def dump_graph(g: Graph) -> str:
    """Serialize ``g`` so that ``load_graph(dump_graph(g)) == g``.

    Isolated nodes cannot be represented in the format and raise ``GraphError``.
    """
    lines = []
    for u, v, w, w_rev in g.links:
        a, b = g.label(u), g.label(v)
        if w == w_rev:
            lines.append(f"{a} {b} {_fmt(w)}")
        else:
            lines.append(f"{a} {b} {_fmt(w)} {_fmt(w_rev)}")
    out = "\n".join(lines) + ("\n" if lines else "")
    if load_graph(out).labels != g.labels:
        raise GraphError("graph has isolated nodes or a link order that does not preserve node order")
    return out


# -- fixtures ---------------------------------------------------------------

FIG1_LINKS = (
    # first hops
    ("s", "1"), ("s", "n"), ("s", "6"),
    # branch of 1
    ("1", "b"), ("b", "2"), ("b", "3"), ("2", "4"), ("2", "5"),
    # branch of n
    ("n", "c"), ("n", "11"), ("c", "9"), ("c", "10"), ("11", "d"),
    # branch of 6
    ("6", "7"), ("6", "8"),
    # t1, t2, i
    ("6", "1"), ("b", "c"), ("c", "11"),
)


def fig1_fixture() -> Graph:
    """The 16-router edge partition example, all weights 1.

    Rooted at ``s`` it has three branches (under 1, n and 6), transverse links
    6-1 and b-c, and the internal link c-11.
    """
    return Graph.from_labeled_links((u, v, 1) for u, v in FIG1_LINKS)


# -- random graphs for testing and searches ----------------------------------


def random_connected_graph(
    n: int,
    rng: random.Random,
    *,
    extra: float = 0.5,
    weights: Sequence[int] | tuple[int, int] = (1, 10),
    constant: bool = False,
) -> Graph:
    """Random spanning tree plus about ``extra * n`` extra links, symmetric weights.

    Weights are uniform integers in the inclusive range ``weights``, or all 1
    when ``constant`` is set.
    """
    order = list(range(n))
    rng.shuffle(order)
    pairs = []
    present = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        pairs.append((a, b))
        present.add(frozenset((a, b)))
    n_extra = int(round(extra * n))
    candidates = [(a, b) for a in range(n) for b in range(a + 1, n) if frozenset((a, b)) not in present]
    rng.shuffle(candidates)
    pairs.extend(candidates[:n_extra])
    lo, hi = weights
    links = []
    for a, b in pairs:
        w = 1 if constant else rng.randint(lo, hi)
        links.append((f"v{a}", f"v{b}", w))
    return Graph.from_labeled_links(links)


def random_two_edge_connected_graph(n: int, rng: random.Random, *, extra: float = 0.3,
                                    weights: tuple[int, int] = (1, 10)) -> Graph:
    """Random Hamiltonian cycle plus chords; bridge-free by construction."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[(i + 1) % n]) for i in range(n)]
    present = {frozenset(p) for p in pairs}
    candidates = [(a, b) for a in range(n) for b in range(a + 1, n) if frozenset((a, b)) not in present]
    rng.shuffle(candidates)
    pairs.extend(candidates[: int(round(extra * n))])
    lo, hi = weights
    return Graph.from_labeled_links((f"v{a}", f"v{b}", rng.randint(lo, hi)) for a, b in pairs)


# -- two-tier generator -----------------------------------------------------


@dataclass(frozen=True)
class TopologyGenSpec:
    n_nodes: int
    cluster_size: int = 10
    access_weight: float = 64
    backbone_weight: float = 1
    mean_degree: float = 4.0
    seed: int = 0
    backbone_per_cluster: int = 2  # dual-homed clusters by default


def generate_topology(spec: TopologyGenSpec) -> Graph:
    """Two-tier access/backbone topology.

    Routers are split into ``ceil(n / cluster_size)`` clusters of near-equal
    size. The first ``backbone_per_cluster`` routers of each cluster are
    backbone routers. Inside a cluster the routers form a random ring of
    access links; the backbone routers of all clusters form a ring with chords
    between opposite positions. Random intra-cluster access chords are then
    added until the mean degree reaches the target.
    """
    n, cs = spec.n_nodes, spec.cluster_size
    if cs < 2 or n < cs:
        raise GraphError("need n_nodes >= cluster_size >= 2")
    rng = random.Random(spec.seed)
    n_clusters = math.ceil(n / cs)
    base, rem = divmod(n, n_clusters)
    clusters: list[list[int]] = []
    start = 0
    for c in range(n_clusters):
        size = base + (1 if c < rem else 0)
        clusters.append(list(range(start, start + size)))
        start += size

    links: list[tuple[int, int, float]] = []
    present: set[frozenset] = set()

    def add(a: int, b: int, w: float) -> None:
        key = frozenset((a, b))
        if a != b and key not in present:
            present.add(key)
            links.append((a, b, w))

    if spec.backbone_per_cluster < 1:
        raise GraphError("need at least one backbone router per cluster")
    heads = [h for members in clusters for h in members[:min(spec.backbone_per_cluster, len(members) - 1) or 1]]
    nb = len(heads)
    if nb == 2:
        add(heads[0], heads[1], spec.backbone_weight)
    elif nb > 2:
        for i in range(nb):
            add(heads[i], heads[(i + 1) % nb], spec.backbone_weight)
        if nb >= 4:
            half = nb // 2
            for i in range(0, half, 2):
                add(heads[i], heads[i + half], spec.backbone_weight)

    for members in clusters:
        ring = members[:]
        rng.shuffle(ring)
        if len(ring) == 2:
            add(ring[0], ring[1], spec.access_weight)
        else:
            for i in range(len(ring)):
                add(ring[i], ring[(i + 1) % len(ring)], spec.access_weight)

    target_links = int(round(spec.mean_degree * n / 2))
    if 2 * len(links) / n > spec.mean_degree + 1:
        raise GraphError(f"mean degree {spec.mean_degree} infeasible: base structure already has "
                         f"{2 * len(links) / n:.2f}")
    chords = [(a, b) for members in clusters for i, a in enumerate(members) for b in members[i + 1:]
              if frozenset((a, b)) not in present]
    rng.shuffle(chords)
    need = target_links - len(links)
    if need > len(chords) and 2 * (len(links) + len(chords)) / n < spec.mean_degree - 1:
        raise GraphError(f"mean degree {spec.mean_degree} infeasible for cluster size {cs}")
    for a, b in chords[: max(need, 0)]:
        add(a, b, spec.access_weight)

    labels = [f"r{i}" for i in range(n)]
    return Graph.from_labeled_links((labels[a], labels[b], w) for a, b, w in links)


# -- connectivity -------------------------------------------------------------


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v, _, _ in g.links)
    return h


def is_two_edge_connected(g: Graph) -> tuple[bool, list[tuple[str, str]]]:
    """Return ``(True, [])`` if no single link disconnects ``g``, else ``(False, bridges)``.

    Bridges are reported as label pairs in link order.
    """
    if not g.is_connected():
        raise GraphError("graph is not connected")
    found = {frozenset(e) for e in nx.bridges(to_networkx(g))}
    bridges = [(g.label(u), g.label(v)) for u, v, _, _ in g.links if frozenset((u, v)) in found]
    return not bridges, bridges
