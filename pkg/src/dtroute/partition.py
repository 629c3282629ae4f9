"""Four-way edge partition relative to a root's shortest-path tree."""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass

from .graph import Graph
from .spt import SptResult


class EdgeClass(enum.Enum):
    FIRST_HOP = "first_hop"
    BRANCH = "branch"
    TRANSVERSE = "transverse"
    INTERNAL = "internal"
    # edge (x, s) into the root; outside the four-way partition
    ROOT_REVERSE = "root_reverse"


@dataclass
class EdgePartition:
    root: int
    classes: dict[tuple[int, int], EdgeClass]
    branch: list[int]  # branch head per node, -1 for the root and unreachable nodes

    def of(self, x: int, y: int) -> EdgeClass:
        return self.classes[(x, y)]

    def edges_of(self, cls: EdgeClass) -> list[tuple[int, int]]:
        return sorted(e for e, c in self.classes.items() if c is cls)

    def branch_members(self, head: int) -> list[int]:
        return [x for x, h in enumerate(self.branch) if h == head]

    def heads(self) -> list[int]:
        return sorted({h for h in self.branch if h >= 0})


def classify_edges(g: Graph, spt: SptResult) -> EdgePartition:
    """Classify every directed edge between reachable nodes.

    Both directions of a tree link below the first hops are ``BRANCH``: the
    partition describes links, and climbing a branch against the tree is how
    backward transverse paths are formed.
    """
    s = spt.root
    branch = list(spt.first_hop)
    classes: dict[tuple[int, int], EdgeClass] = {}
    for x, y, _ in g.edges():
        if not (spt.reachable(x) and spt.reachable(y)):
            continue
        if y == s:
            cls = EdgeClass.ROOT_REVERSE
        elif x == s:
            cls = EdgeClass.FIRST_HOP if spt.father[y] == s else EdgeClass.TRANSVERSE
        elif branch[x] != branch[y]:
            cls = EdgeClass.TRANSVERSE
        elif spt.father[y] == x or spt.father[x] == y:
            cls = EdgeClass.BRANCH
        else:
            cls = EdgeClass.INTERNAL
        classes[(x, y)] = cls
    return EdgePartition(s, classes, branch)


def partition_csv(g: Graph, part: EdgePartition) -> str:
    """CSV rows ``x,y,w,class,branch_of_x,branch_of_y`` (root has an empty branch)."""
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["x", "y", "w", "class", "branch_of_x", "branch_of_y"])

    def head(v: int) -> str:
        return g.label(part.branch[v]) if part.branch[v] >= 0 else ""

    for (x, y), cls in sorted(part.classes.items()):
        out.writerow([g.label(x), g.label(y), g.weight(x, y), cls.value, head(x), head(y)])
    return buf.getvalue()
