"""Evaluate EC, DT, mDT and kD on the generated two-tier suite and print ratios to kD.

    python3 scripts/reproduce_ratios.py --sizes 20 40 60 --csv out.csv
"""

import argparse
import sys
import time

from dtroute.evaluation import emit_csv, evaluate
from dtroute.graph import TopologyGenSpec, generate_topology


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=list(range(20, 201, 20)))
    ap.add_argument("--seed-offset", type=int, default=1, help="topology i uses seed i + offset")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--csv", help="also write the full table here")
    args = ap.parse_args(argv)

    reports = []
    print(f"{'N':>4} {'EC':>6} {'DT':>6} {'mDT':>6} {'val mDT':>8} {'kD/mDT ops':>11} {'mDT/dij':>8}")
    for i, n in enumerate(args.sizes):
        t0 = time.perf_counter()
        g = generate_topology(TopologyGenSpec(n, seed=i + args.seed_offset))
        rep = evaluate(g, network=f"gen{n}", workers=args.workers)
        reports.append(rep)
        st = rep.stats
        print(f"{n:>4} {rep.ratio('EC'):6.2f} {rep.ratio('DT'):6.2f} {rep.ratio('mDT'):6.2f} "
              f"{rep.ratio('mDT', 'valid'):8.2f} {st['kD'].mean_ops / st['mDT'].mean_ops:11.2f} "
              f"{st['mDT'].mean_ops / rep.mean_dijkstra_ops:8.2f}   ({time.perf_counter() - t0:.1f}s)")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            emit_csv(reports, fh)


if __name__ == "__main__":
    sys.exit(main())
