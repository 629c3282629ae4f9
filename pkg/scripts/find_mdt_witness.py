"""Search seeded random graphs for an equal-cost hop that mDT keeps and DT drops.

Writes the first witness as an edge list so the test suite can pin it.

    python3 scripts/find_mdt_witness.py --out tests/fixtures/mdt_witness.txt
"""

import argparse
import sys
from pathlib import Path

from dtroute.graph import dump_graph
from dtroute.spt import ecmp_candidates
from dtroute.transverse import dt, mdt
from dtroute.witness import find_mdt_witness


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-seeds", type=int, default=10_000)
    ap.add_argument("--out", type=Path, default=Path("tests/fixtures/mdt_witness.txt"))
    args = ap.parse_args(argv)

    w = find_mdt_witness(args.max_seeds)
    if w is None:
        print(f"no witness in {args.max_seeds} seeds", file=sys.stderr)
        return 1
    g, s, d = w.graph, w.root, w.dest
    lab = g.label
    ec = sorted(lab(v) for v in ecmp_candidates(g, s).next_hops[d])
    print(f"seed {w.seed}: n={g.n} root={lab(s)} dest={lab(d)}")
    print(f"  ecmp {ec}")
    print(f"  dt   {[(lab(k), c) for k, c in dt(g, s).candidates[d]]}")
    print(f"  mdt  {[(lab(k), c) for k, c in mdt(g, s).candidates[d]]}")
    header = f"# mdt/dt separation witness: seed={w.seed} root={lab(s)} dest={lab(d)}\n"
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(header + dump_graph(g))
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
