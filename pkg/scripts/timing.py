#!/usr/bin/env python3
"""Depth-engine wall time over n and dimension p (N = 50, beta = 0.2).

Prints a p-by-n table of whole-call times, then the two scaling summaries:
the d = 65 / d = 5 ratio at the smallest n and the log-log slope in n at the
smallest p, both on the depth stage (projection plus window counting).
"""
import argparse
import json
from pathlib import Path

from localdepth.bench import bench_depth, format_bench_table, loglog_exponent
from localdepth.projection import ProjectionSpec

if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-list", default="300,2100,3900")
    p.add_argument("--d-list", default="5,35,65")
    p.add_argument("--projections", type=int, default=50)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path)
    args = p.parse_args()
    ns = [int(v) for v in args.n_list.split(",")]
    ds = [int(v) for v in args.d_list.split(",")]
    rows = bench_depth(ns, ds, 0.2, ProjectionSpec(args.projections, args.seed), args.seed, args.repeats)
    print(format_bench_table(rows))
    stage = {(r["n"], r["d"]): r["depth_stage_seconds"] for r in rows}
    n0, d0, d1 = min(ns), min(ds), max(ds)
    print(f"depth stage d={d1}/d={d0} at n={n0}: {stage[n0, d1] / stage[n0, d0]:.3f}")
    if len(ns) > 1:
        print(f"depth stage log-log slope in n at d={d0}: "
              f"{loglog_exponent(ns, [stage[n, d0] for n in ns]):.3f}")
    if args.out:
        args.out.write_text(json.dumps(rows, indent=2) + "\n")
