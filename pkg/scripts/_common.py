"""Shared helpers for the experiment scripts."""
import argparse
import json
import sys
from pathlib import Path

from localdepth.bench import default_config, format_report_table, run_experiment


def parser(description, replicates=50):
    p = argparse.ArgumentParser(description=description)
    p.add_argument("--replicates", type=int, default=replicates)
    p.add_argument("--seed", type=int, default=0, help="base seed; replicate r uses seed + r")
    p.add_argument("--out", type=Path, help="write the reports as JSON here")
    return p


def run_models(model_ids, args, metric="mean_ccr"):
    reports = []
    for mid in model_ids:
        rep = run_experiment(mid, args.replicates, default_config(mid), args.seed)
        reports.append(rep)
        print(f"model {mid}: {metric} = {getattr(rep, metric):.4f}", file=sys.stderr)
    print(format_report_table(reports))
    if args.out:
        args.out.write_text(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    return reports
