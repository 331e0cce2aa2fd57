"""Command line interface.

Subcommands: depth, cluster, simulate, bench. Settings come from built-in
defaults, then an optional --config file (flat key=value lines, or the JSON
sidecar written by a previous run), then explicit flags.

Exit codes: 0 success, 2 input error, 3 parameter error, 4 infeasible clustering.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import bench, io
from .idld import eidld_self
from .ldc import InfeasibleClustering, LdcConfig, ldc_fit
from .projection import ProjectionSpec
from .synthgen import MODEL_IDS, generate

EXIT_OK, EXIT_INPUT, EXIT_PARAM, EXIT_INFEASIBLE = 0, 2, 3, 4

DEFAULTS = {
    "depth": dict(input=None, format="csv_matrix", delimiter=",", header=False,
                  beta=0.2, projections=50, seed=0, threads=1, out=None),
    "cluster": dict(input=None, format="csv_matrix", delimiter=",", header=False,
                    k=3, alpha=0.4, beta=0.2, projections=50, seed=0, threads=1,
                    restarts=10, max_iter=100, out=None),
    "simulate": dict(model="1", replicates=50, seed=0, alpha=0.4, beta=0.2,
                     projections=50, k=None, restarts=10, max_iter=100, threads=1,
                     out_dir=None, save_data=False),
    "bench": dict(n_list="300,2100,3900", d_list="5,35,65", beta=0.2, projections=50,
                  seed=0, repeats=5, out=None),
}
_INT = {"projections", "seed", "threads", "k", "restarts", "max_iter", "replicates", "repeats"}
_FLOAT = {"beta", "alpha"}
_BOOL = {"header", "save_data"}


class ParamError(ValueError):
    pass


def _coerce(key, value):
    if value is None:
        return None
    try:
        if key in _INT:
            return int(value)
        if key in _FLOAT:
            return float(value)
    except (TypeError, ValueError):
        raise ParamError(f"{key} expects a number, got {value!r}")
    if key in _BOOL:
        if isinstance(value, bool):
            return value
        return str(value).strip().lower() in ("1", "true", "yes", "on")
    return value


def read_config(path) -> dict:
    """Flat key=value file, or a JSON object (e.g. a run sidecar)."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
        if isinstance(doc, dict):
            return dict(doc.get("settings", doc))
    except json.JSONDecodeError:
        pass
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise io.InputError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def write_config(settings: dict, path) -> None:
    """Flat key=value form of a settings dict."""
    lines = [f"{k}={'' if v is None else v}" for k, v in settings.items()]
    Path(path).write_text("\n".join(lines) + "\n")


def resolve_settings(command: str, args: argparse.Namespace) -> dict:
    settings = dict(DEFAULTS[command])
    if getattr(args, "config", None):
        for key, value in read_config(args.config).items():
            if key in settings:
                settings[key] = value
    for key in settings:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return {k: _coerce(k, v) for k, v in settings.items()}


def _sidecar(command: str, settings: dict, target) -> None:
    if target is None:
        return
    path = Path(str(target) + ".config.json")
    path.write_text(json.dumps({"command": command, "settings": settings},
                               indent=2, sort_keys=True) + "\n")


def _write_text(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _spec(s) -> ProjectionSpec:
    if s["projections"] < 1:
        raise ParamError("--projections must be at least 1")
    return ProjectionSpec(s["projections"], s["seed"])


def _load(s):
    if not s["input"]:
        raise io.InputError("--input is required")
    if s["format"] not in io.FORMATS:
        raise ParamError(f"--format must be one of {', '.join(io.FORMATS)}")
    return io.read_dataset(s["input"], s["format"], s["delimiter"], s["header"])


def cmd_depth(s: dict) -> int:
    data = _load(s)
    res = eidld_self(data, s["beta"], _spec(s), threads=s["threads"])
    lines = ["index,depth"] + [f"{i},{io.fmt_num(v)}" for i, v in enumerate(res.depths)]
    _write_text("\n".join(lines) + "\n", s["out"])
    _sidecar("depth", s, s["out"])
    return EXIT_OK


def cmd_cluster(s: dict) -> int:
    data = _load(s)
    cfg = LdcConfig(k=s["k"], alpha=s["alpha"], beta=s["beta"], spec=_spec(s),
                    kmeans_restarts=s["restarts"], kmeans_max_iter=s["max_iter"],
                    seed=s["seed"], threads=s["threads"])
    model = ldc_fit(data, cfg)
    core = model.is_core
    lines = ["index,label,depth,is_core"] + [
        f"{i},{int(model.labels[i])},{io.fmt_num(model.depth.depths[i])},{int(core[i])}"
        for i in range(data.n)
    ]
    _write_text("\n".join(lines) + "\n", s["out"])
    _sidecar("cluster", s, s["out"])
    return EXIT_OK


def cmd_simulate(s: dict) -> int:
    model_id = str(s["model"])
    if model_id not in MODEL_IDS:
        raise ParamError(f"unknown model {model_id!r}; choose from {', '.join(MODEL_IDS)}")
    if s["replicates"] < 1:
        raise ParamError("--replicates must be at least 1")
    overrides = dict(alpha=s["alpha"], beta=s["beta"], spec=_spec(s),
                     kmeans_restarts=s["restarts"], kmeans_max_iter=s["max_iter"],
                     threads=s["threads"])
    if s["k"] is not None:
        overrides["k"] = s["k"]
    cfg = bench.default_config(model_id, **overrides)
    report = bench.run_experiment(model_id, s["replicates"], cfg, s["seed"])
    out_dir = Path(s["out_dir"]) if s["out_dir"] else None
    body = json.dumps(report.to_dict(timings=False), indent=2, sort_keys=True) + "\n"
    if out_dir is None:
        sys.stdout.write(body)
        return EXIT_OK
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "report.json").write_text(body)
    (out_dir / "report.txt").write_text(bench.format_report_table([report]) + "\n")
    (out_dir / "timings.json").write_text(json.dumps(report.mean_runtime_seconds, indent=2) + "\n")
    if s["save_data"]:
        for r in range(s["replicates"]):
            sample = generate(model_id, s["seed"] + r)
            io.write_dataset(sample.data, out_dir / f"replicate_{r:03d}.data")
            np.savetxt(out_dir / f"replicate_{r:03d}.labels", sample.labels, fmt="%d")
    _sidecar("simulate", s, out_dir / "report.json")
    return EXIT_OK


def _int_list(text, name):
    try:
        values = [int(v) for v in str(text).split(",") if v.strip()]
    except ValueError:
        raise ParamError(f"{name} must be a comma-separated list of integers")
    if not values:
        raise ParamError(f"{name} is empty")
    return values


def cmd_bench(s: dict) -> int:
    ns = _int_list(s["n_list"], "--n-list")
    ds = _int_list(s["d_list"], "--d-list")
    if min(ds) < 3:
        raise ParamError("--d-list entries must be at least 3")
    rows = bench.bench_depth(ns, ds, s["beta"], _spec(s), s["seed"], s["repeats"])
    _write_text(json.dumps({"settings": s, "rows": rows}, indent=2) + "\n", s["out"])
    return EXIT_OK


COMMANDS = {"depth": cmd_depth, "cluster": cmd_cluster, "simulate": cmd_simulate, "bench": cmd_bench}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="localdepth", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, cmd):
        d = DEFAULTS[cmd]
        sp.add_argument("--config", help="key=value file or JSON sidecar")
        if "input" in d:
            sp.add_argument("--input", help="data file")
            sp.add_argument("--format", choices=io.FORMATS, help=f"default {d['format']}")
            sp.add_argument("--delimiter", help="CSV delimiter (default ',')")
            sp.add_argument("--header", action="store_const", const=True,
                            help="skip the first CSV row")
        sp.add_argument("--beta", type=float, help=f"locality level (default {d['beta']})")
        sp.add_argument("--projections", type=int, help=f"random directions N (default {d['projections']})")
        sp.add_argument("--seed", type=int, help=f"seed (default {d['seed']})")
        if "threads" in d:
            sp.add_argument("--threads", type=int, help="worker cap; output does not depend on it")

    sp = sub.add_parser("depth", help="local depth of every observation")
    common(sp, "depth")
    sp.add_argument("--out", help="output CSV (default stdout)")

    sp = sub.add_parser("cluster", help="LDC clustering")
    common(sp, "cluster")
    sp.add_argument("--k", type=int, help="number of clusters (default 3)")
    sp.add_argument("--alpha", type=float, help="core proportion (default 0.4)")
    sp.add_argument("--restarts", type=int, help="k-means restarts (default 10)")
    sp.add_argument("--max-iter", dest="max_iter", type=int, help="k-means iterations (default 100)")
    sp.add_argument("--out", help="output CSV (default stdout)")

    sp = sub.add_parser("simulate", help="replicated synthetic experiment")
    common(sp, "simulate")
    sp.add_argument("--model", help=f"model id: {', '.join(MODEL_IDS)}")
    sp.add_argument("--replicates", type=int, help="default 50")
    sp.add_argument("--k", type=int, help="clusters (default: the model's group count)")
    sp.add_argument("--alpha", type=float, help="core proportion (default 0.4)")
    sp.add_argument("--restarts", type=int)
    sp.add_argument("--max-iter", dest="max_iter", type=int)
    sp.add_argument("--out-dir", dest="out_dir", help="directory for report.json etc.")
    sp.add_argument("--save-data", dest="save_data", action="store_const", const=True,
                    help="also write each replicate's dataset")

    sp = sub.add_parser("bench", help="time the depth engine over (n, d)")
    common(sp, "bench")
    sp.add_argument("--n-list", dest="n_list", help="comma list (default 300,2100,3900)")
    sp.add_argument("--d-list", dest="d_list", help="comma list (default 5,35,65)")
    sp.add_argument("--repeats", type=int, help="timed runs per cell (default 5)")
    sp.add_argument("--out", help="output JSON (default stdout)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        settings = resolve_settings(args.command, args)
        return COMMANDS[args.command](settings)
    except (io.InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InfeasibleClustering as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ParamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
