"""Evaluation harness: candidate, validated and operation counts per algorithm, as ratios to kD."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable

from .graph import Graph
from .kd import kd
from .spt import dijkstra, ecmp_candidates
from .transverse import dt, mdt
from .validation import validate_rule1, validate_rule2

ALGO_NAMES = ("EC", "DT", "mDT", "kD")
CSV_HEADER = ["network", "algo", "mean_candidates", "cand_ratio_pct", "mean_validated",
              "valid_ratio_pct", "mean_ops", "ops_ratio_pct"]


@dataclass
class RootResult:
    """Per-destination next-hop sets of every algorithm for one root."""

    root: int
    candidates: dict[str, list[set[int]]]
    validated: dict[str, list[set[int]]]
    ops: dict[str, int]
    dijkstra_ops: int


def run_root(g: Graph, s: int, algos: Iterable[str] = ALGO_NAMES) -> RootResult:
    algos = set(algos)
    cands: dict[str, list[set[int]]] = {}
    valid: dict[str, list[set[int]]] = {}
    ops: dict[str, int] = {}
    if "EC" in algos:
        ec = ecmp_candidates(g, s)
        cands["EC"] = [set(h) for h in ec.next_hops]
        # every equal-cost hop passes the downstream test
        valid["EC"] = [set(h) for h in ec.next_hops]
        ops["EC"] = ec.spt.ops.total
    for name, fn in (("DT", dt), ("mDT", mdt)):
        if name in algos:
            res = fn(g, s)
            cands[name] = [res.next_hops(d) for d in range(g.n)]
            valid[name] = [set(v) for v in validate_rule2(res.matrix)]
            ops[name] = res.ops.total
    if "kD" in algos:
        res = kd(g, s)
        cands["kD"] = [res.next_hops(d) for d in range(g.n)]
        valid["kD"] = [set(v) for v in validate_rule1(res.costs)]
        ops["kD"] = res.ops.total
    return RootResult(s, cands, valid, ops, dijkstra(g, s).ops.total)


@dataclass
class AlgoStats:
    algo: str
    total_candidates: int
    total_validated: int
    total_ops: int
    mean_candidates: float  # per ordered (router, destination) pair
    mean_validated: float
    mean_ops: float  # per router
    cand_ratio_pct: float | None = None
    valid_ratio_pct: float | None = None
    ops_ratio_pct: float | None = None


@dataclass
class EvalReport:
    network: str
    n_nodes: int
    n_edges: int
    pairs: int
    stats: dict[str, AlgoStats]
    mean_dijkstra_ops: float
    roots: list[RootResult] = field(default_factory=list, repr=False)

    def ratio(self, algo: str, metric: str = "cand") -> float:
        """Ratio to kD as a fraction (not a percentage)."""
        return getattr(self.stats[algo], f"{metric}_ratio_pct") / 100.0


def _run_root_args(args):
    return run_root(*args)


def evaluate(g: Graph, algos: Iterable[str] = ALGO_NAMES, *, network: str = "network",
             workers: int = 1, keep_roots: bool = False) -> EvalReport:
    """Run every algorithm from every root and aggregate.

    Ratios are ratios of totals (equivalently of means), taken against kD when
    kD is among ``algos``. Roots may be spread over ``workers`` processes; the
    reduction always runs in root order.
    """
    algos = [a for a in ALGO_NAMES if a in set(algos)]
    if not g.is_connected():
        raise ValueError("evaluation needs a connected graph")
    jobs = [(g, s, algos) for s in range(g.n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            roots = list(pool.map(_run_root_args, jobs, chunksize=max(1, g.n // (4 * workers))))
    else:
        roots = [run_root(*job) for job in jobs]

    pairs = g.n * (g.n - 1)
    stats: dict[str, AlgoStats] = {}
    for a in algos:
        tc = sum(len(r.candidates[a][d]) for r in roots for d in range(g.n))
        tv = sum(len(r.validated[a][d]) for r in roots for d in range(g.n))
        to = sum(r.ops[a] for r in roots)
        stats[a] = AlgoStats(a, tc, tv, to, tc / pairs if pairs else 0.0,
                             tv / pairs if pairs else 0.0, to / g.n)
    if "kD" in stats:
        ref = stats["kD"]
        for st in stats.values():
            st.cand_ratio_pct = 100.0 * st.total_candidates / ref.total_candidates if ref.total_candidates else 0.0
            st.valid_ratio_pct = 100.0 * st.total_validated / ref.total_validated if ref.total_validated else 0.0
            st.ops_ratio_pct = 100.0 * st.total_ops / ref.total_ops if ref.total_ops else 0.0
    mean_dij = sum(r.dijkstra_ops for r in roots) / g.n
    return EvalReport(network, g.n, g.num_edges, pairs, stats, mean_dij, roots if keep_roots else [])


def _pct(x: float | None) -> str:
    return "" if x is None else f"{x:.2f}"


def emit_csv(reports: EvalReport | Iterable[EvalReport], sink: IO[str]) -> None:
    """Write one CSV row per (network, algorithm), two decimals."""
    if isinstance(reports, EvalReport):
        reports = [reports]
    out = csv.writer(sink, lineterminator="\n")
    out.writerow(CSV_HEADER)
    for rep in reports:
        for a, st in rep.stats.items():
            out.writerow([rep.network, a, f"{st.mean_candidates:.2f}", _pct(st.cand_ratio_pct),
                          f"{st.mean_validated:.2f}", _pct(st.valid_ratio_pct),
                          f"{st.mean_ops:.2f}", _pct(st.ops_ratio_pct)])


def report_csv(reports) -> str:
    buf = io.StringIO()
    emit_csv(reports, buf)
    return buf.getvalue()


def read_csv(text: str) -> list[dict[str, object]]:
    """Parse rows written by :func:`emit_csv`; numeric columns become floats."""
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        parsed: dict[str, object] = {"network": row["network"], "algo": row["algo"]}
        for k in CSV_HEADER[2:]:
            parsed[k] = float(row[k]) if row[k] != "" else None
        rows.append(parsed)
    return rows
