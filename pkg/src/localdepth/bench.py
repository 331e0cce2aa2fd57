"""Replicated clustering experiments and depth-engine timing."""
from __future__ import annotations

import dataclasses
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from .data import Dataset
from .depth_core import EmpiricalLocality
from .idld import eidld_self, projected_depths
from .ldc import LdcConfig, ldc_fit
from .metrics import ari, ccr
from .projection import ProjectionSpec, Projector, sample_directions
from .synthgen import FUNCTIONAL_IDS, MFD_IDS, gen_timing_data, generate

STAGES = ("depth", "kmeans", "assign")


@dataclass
class ExperimentReport:
    model_id: str
    replicates: int
    mean_ccr: float
    sd_ccr: float
    mean_ari: float
    ccrs: list
    aris: list
    config: dict
    mean_runtime_seconds: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> dict:
        d = dataclasses.asdict(self)
        if not timings:
            d.pop("mean_runtime_seconds")
        return d


def config_to_dict(cfg: LdcConfig) -> dict:
    d = dataclasses.asdict(cfg)
    d.pop("threads")
    return d


def default_config(model_id, **overrides) -> LdcConfig:
    """Settings used for a model's experiments: alpha 0.4, beta 0.2, N = 50."""
    mid = str(model_id)
    k = 3
    if mid in FUNCTIONAL_IDS:
        k = {"fda-A": 2, "fda-B": 2, "fda-C": 3, "fda-D": 4}[mid]
    elif mid in MFD_IDS:
        k = 3 if mid == "mfd-A" else 4
    base = dict(k=k, alpha=0.4, beta=0.2, spec=ProjectionSpec(50, 0))
    base.update(overrides)
    return LdcConfig(**base)


def run_experiment(model_id, replicates: int, cfg: LdcConfig | None = None,
                   base_seed: int = 0, progress=None) -> ExperimentReport:
    """Replicate r draws data and runs LDC with seed base_seed + r."""
    if replicates < 1:
        raise ValueError("need at least one replicate")
    cfg = cfg or default_config(model_id)
    ccrs, aris = [], []
    times = {s: 0.0 for s in STAGES}
    for r in range(replicates):
        seed = int(base_seed) + r
        sample = generate(model_id, seed)
        run_cfg = dataclasses.replace(cfg, seed=seed, spec=ProjectionSpec(
            cfg.spec.n_projections, seed, cfg.spec.kind))
        model = ldc_fit(sample.data, run_cfg)
        ccrs.append(ccr(sample.labels, model.labels))
        aris.append(ari(sample.labels, model.labels))
        for s in STAGES:
            times[s] += model.timings[s]
        if progress:
            progress(r, ccrs[-1], aris[-1])
    return ExperimentReport(
        model_id=str(model_id),
        replicates=replicates,
        mean_ccr=float(np.mean(ccrs)),
        sd_ccr=float(np.std(ccrs, ddof=1)) if replicates > 1 else 0.0,
        mean_ari=float(np.mean(aris)),
        ccrs=[float(c) for c in ccrs],
        aris=[float(a) for a in aris],
        config={"base_seed": int(base_seed), **config_to_dict(cfg)},
        mean_runtime_seconds={s: v / replicates for s, v in times.items()},
    )


def time_call(fn, repeats: int = 5) -> float:
    """Median wall time of ``repeats`` calls after one discarded warm-up."""
    fn()
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def bench_depth(n_list, d_list, beta: float = 0.2, spec: ProjectionSpec | None = None,
                seed: int = 0, repeats: int = 5) -> list[dict]:
    """Wall time of the self-depth of Model-3-style data for each (n, d).

    ``total_seconds`` times the whole self-depth call; the sub-timings split
    it into drawing directions, projecting, and the window kernel, and
    ``depth_stage_seconds`` is projection plus kernel for fixed directions.
    """
    n_list, d_list = list(n_list), list(d_list)
    if not n_list or not d_list:
        raise ValueError("n_list and d_list must be nonempty")
    spec = spec or ProjectionSpec(50, seed)
    rows = []
    for d in d_list:
        for n in n_list:
            data = Dataset(vectors=gen_timing_data(int(n), int(d), seed))
            k = EmpiricalLocality.from_beta(data.n, beta).k
            dirs = sample_directions(spec, data)
            proj = Projector(dirs, data).transform(data)

            def stage(dirs=dirs, data=data, k=k):
                # everything after the directions exist: project, sort, count
                p = Projector(dirs, data).transform(data)
                return projected_depths(p, p, k)

            rows.append({
                "n": int(n),
                "d": int(d),
                "projections": int(spec.n_projections),
                "total_seconds": time_call(lambda: eidld_self(data, beta, spec), repeats),
                "directions_seconds": time_call(lambda: sample_directions(spec, data), repeats),
                "projection_seconds": time_call(lambda: Projector(dirs, data).transform(data), repeats),
                "depth_seconds": time_call(lambda: projected_depths(proj, proj, k), repeats),
                "depth_stage_seconds": time_call(stage, repeats),
            })
    return rows


def loglog_exponent(ns, ts) -> float:
    return float(np.polyfit(np.log(ns), np.log(ts), 1)[0])


def format_report_table(reports) -> str:
    header = f"{'model':>8} {'reps':>5} {'mean CCR':>9} {'sd CCR':>7} {'mean ARI':>9}"
    lines = [header, "-" * len(header)]
    for r in reports:
        lines.append(f"{r.model_id:>8} {r.replicates:>5} {r.mean_ccr:>9.4f} "
                     f"{r.sd_ccr:>7.4f} {r.mean_ari:>9.4f}")
    return "\n".join(lines)


def format_bench_table(rows) -> str:
    ns = sorted({r["n"] for r in rows})
    header = f"{'p':>4} | " + " ".join(f"{n:>10}" for n in ns)
    lines = [header, "-" * len(header)]
    for d in sorted({r["d"] for r in rows}):
        cells = {r["n"]: r["total_seconds"] for r in rows if r["d"] == d}
        lines.append(f"{d:>4} | " + " ".join(f"{cells.get(n, float('nan')):>10.4f}" for n in ns))
    return "\n".join(lines)
