"""Fixed, seeded graph corpus shared by the test suite and the acceptance run."""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .graph import (Graph, TopologyGenSpec, fig1_fixture, generate_topology, load_graph,
                    random_connected_graph, random_two_edge_connected_graph)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    constant_weight: bool = False


def _square() -> Graph:
    return Graph.from_labeled_links([("s", "a", 1), ("a", "d", 1), ("s", "b", 1), ("b", "d", 1)])


def _chain() -> Graph:
    return Graph.from_labeled_links([("s", "a", 1), ("a", "d", 1)])


def _triangle() -> Graph:
    return Graph.from_labeled_links([("a", "b", 2), ("b", "c", 3), ("a", "c", 4)])


def _asym() -> Graph:
    return Graph.from_labeled_links([("s", "a", 1, 5), ("a", "d", 2, 1), ("s", "b", 2, 2),
                                     ("b", "d", 2, 3), ("a", "b", 1, 4)])


def build_corpus(*, n_random: int = 40, n_constant: int = 15, n_bridgeless: int = 10,
                 n_generated: int = 3, fixtures: Path | None = None) -> list[CorpusEntry]:
    out = [
        CorpusEntry("fig1", fig1_fixture(), True),
        CorpusEntry("square", _square(), True),
        CorpusEntry("chain", _chain(), True),
        CorpusEntry("triangle", _triangle()),
        CorpusEntry("asymmetric", _asym()),
    ]
    for i in range(n_random):
        rng = random.Random(1000 + i)
        n = rng.randint(4, 12)
        out.append(CorpusEntry(f"random{i}", random_connected_graph(n, rng, extra=rng.choice([0.2, 0.5, 1.0]))))
    for i in range(n_constant):
        rng = random.Random(2000 + i)
        n = rng.randint(4, 12)
        out.append(CorpusEntry(f"const{i}", random_connected_graph(n, rng, extra=0.6, constant=True), True))
    for i in range(n_bridgeless):
        rng = random.Random(3000 + i)
        out.append(CorpusEntry(f"bridgeless{i}", random_two_edge_connected_graph(rng.randint(4, 12), rng)))
    for i in range(n_generated):
        g = generate_topology(TopologyGenSpec(20 + 10 * i, seed=4000 + i))
        out.append(CorpusEntry(f"twotier{i}", g))
    if fixtures is not None and fixtures.is_dir():
        for p in sorted(fixtures.glob("*.txt")):
            g = load_graph(p.read_text())
            out.append(CorpusEntry(p.stem, g, g.weights() == {1}))
    return out
