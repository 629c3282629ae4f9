"""Command line interface: gen, compute, partition, eval, oracle, loopcheck.

Exit codes: 0 success, 1 invariant or loop failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import contextmanager

from .certify import certify, summary_lines
from .evaluation import ALGO_NAMES, emit_csv, evaluate
from .graph import GraphError, TopologyGenSpec, dump_graph, generate_topology, read_graph
from .kd import kd
from .oracle import OracleSizeError
from .partition import classify_edges, partition_csv
from .spt import dijkstra, ecmp_candidates
from .transverse import dt, mdt
from .validation import loopfreedom_audit

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@contextmanager
def _sink(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _load(args):
    if not args.topo:
        raise InputError("--topo is required")
    try:
        return read_graph(args.topo)
    except OSError as exc:
        raise InputError(f"cannot read {args.topo}: {exc.strerror}") from None


def _root(g, label):
    if label is None:
        return 0
    return g.index(label)


def cmd_gen(args) -> int:
    spec = TopologyGenSpec(args.nodes, args.cluster, args.access_weight, args.backbone_weight,
                           args.degree, args.seed)
    g = generate_topology(spec)
    with _sink(args.out) as out:
        out.write(f"# two-tier topology n={spec.n_nodes} cluster={spec.cluster_size} "
                  f"degree={spec.mean_degree} seed={spec.seed}\n")
        out.write(dump_graph(g))
    return EXIT_OK


def cmd_compute(args) -> int:
    g = _load(args)
    s = _root(g, args.root)
    spt = dijkstra(g, s)
    if args.algo == "dt":
        cands = dt(g, s).candidates
    elif args.algo == "mdt":
        cands = mdt(g, s).candidates
    elif args.algo == "kd":
        cands = kd(g, s).candidates
    else:
        ec = ecmp_candidates(g, s)
        cands = [ec.candidates(d) if d != s else [] for d in range(g.n)]
    with _sink(args.out) as out:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["dest", "nexthop", "cost", "is_primary"])
        for d in range(g.n):
            for k, c in cands[d]:
                w.writerow([g.label(d), g.label(k), c, int(k == spt.first_hop[d])])
    return EXIT_OK


def cmd_partition(args) -> int:
    g = _load(args)
    s = _root(g, args.root)
    part = classify_edges(g, dijkstra(g, s))
    with _sink(args.out) as out:
        out.write(partition_csv(g, part))
    return EXIT_OK


def cmd_eval(args) -> int:
    if args.topo:
        g = _load(args)
        name = args.name or args.topo
    else:
        g = generate_topology(TopologyGenSpec(args.nodes, seed=args.seed))
        name = args.name or f"gen-{args.nodes}-s{args.seed}"
    rep = evaluate(g, args.algos, network=name, workers=args.workers)
    with _sink(args.out) as out:
        emit_csv(rep, out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load(args)
    try:
        fails = certify(g, max_nodes=args.max_nodes)
    except OracleSizeError as exc:
        raise InputError(str(exc)) from None
    with _sink(args.out) as out:
        for line in summary_lines(fails):
            out.write(line + "\n")
    return EXIT_FAIL if any(fails.values()) else EXIT_OK


def cmd_loopcheck(args) -> int:
    g = _load(args)
    if not g.is_connected():
        raise InputError("graph is not connected")
    bad = [v for v in loopfreedom_audit(g, args.algo) if not v.ok]
    with _sink(args.out) as out:
        if not bad:
            out.write(f"{args.algo}: all {g.n} destinations loop-free\n")
            return EXIT_OK
        v = bad[0]
        if v.cycle:
            out.write(f"{args.algo}: cycle towards {g.label(v.destination)}: "
                      + " -> ".join(g.label(x) for x in v.cycle) + "\n")
        else:
            out.write(f"{args.algo}: {g.label(v.stuck)} has no next hop towards {g.label(v.destination)}\n")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--topo", help="edge-list file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output file (default stdout)")

    p = argparse.ArgumentParser(prog="dtroute", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("gen", parents=[common], help="generate a two-tier topology")
    q.add_argument("--nodes", type=int, default=100)
    q.add_argument("--cluster", type=int, default=10)
    q.add_argument("--degree", type=float, default=4.0)
    q.add_argument("--access-weight", type=float, default=64)
    q.add_argument("--backbone-weight", type=float, default=1)
    q.set_defaults(func=cmd_gen)

    q = sub.add_parser("compute", parents=[common], help="candidate next hops of one root")
    q.add_argument("--algo", choices=["dt", "mdt", "kd", "ecmp"], default="mdt")
    q.add_argument("--root", help="root label (default: first node)")
    q.set_defaults(func=cmd_compute)

    q = sub.add_parser("partition", parents=[common], help="edge partition of one root")
    q.add_argument("--root", help="root label (default: first node)")
    q.set_defaults(func=cmd_partition)

    q = sub.add_parser("eval", parents=[common], help="diversity and complexity table")
    q.add_argument("--algos", nargs="+", choices=ALGO_NAMES, default=list(ALGO_NAMES))
    q.add_argument("--name", help="network name in the CSV")
    q.add_argument("--nodes", type=int, default=100, help="generated size when --topo is absent")
    q.add_argument("--workers", type=int, default=1)
    q.set_defaults(func=cmd_eval)

    q = sub.add_parser("oracle", parents=[common], help="certify against brute force")
    q.add_argument("--max-nodes", type=int, default=14)
    q.set_defaults(func=cmd_oracle)

    q = sub.add_parser("loopcheck", parents=[common], help="audit forwarding loops")
    q.add_argument("--algo", choices=["ecmp", "dt", "mdt", "kd"], default="mdt")
    q.set_defaults(func=cmd_loopcheck)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError) as exc:
        print(f"dtroute: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
