"""Benchmark harness: run heuristics over subset sweeps, emit CSV and plots.

A run is fully described by an :class:`ExperimentConfig`.  For every
repetition the member pool is shuffled once (seeded), and each requested
set size takes a prefix of that shuffle, so sizes within a repetition are
nested subsets.  Every (repetition, size, heuristic) cell starts from the
subset's set median and runs to convergence, recording one metrics row per
refinement iteration.

Wall time is recorded per run and stamped on each of its rows; it is the
one column excluded from determinism guarantees.  Everything else in the
CSV is byte-deterministic for a given config.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .alphabet import Alphabet, StringSet
from .costs import CostModel, ring_costs, unit_costs
from .datasets import DatasetSpec, builtin_table1, gen_dataset, load_cost_matrix, load_strings
from .instrument import OpCounter
from .refine import RefineConfig, refine_from_set_median

CSV_HEADER = (
    "heuristic,set_size,rep,iteration,sum,dp_cells,distance_evals,"
    "stat_updates,rep_updates,total_ops,wall_ms"
)

HEURISTIC_NAMES = ("frequency", "frequency_cost", "repercussion", "sweep")


@dataclass(frozen=True)
class ExperimentConfig:
    """A complete, reproducible description of one benchmark run."""

    dataset: DatasetSpec | None = None
    input_path: str | None = None
    costs: str = "unit"
    heuristics: tuple[str, ...] = ("repercussion", "frequency_cost")
    sizes: tuple[int, ...] = (20,)
    repetitions: int = 1
    seed: int = 0
    positive_only: bool = False
    deletion_repercussion: bool = True
    max_iterations: int | None = None

    def __post_init__(self):
        if (self.dataset is None) == (self.input_path is None):
            raise ValueError("exactly one of dataset and input_path is required")
        if not self.heuristics:
            raise ValueError("at least one heuristic is required")
        for h in self.heuristics:
            if h not in HEURISTIC_NAMES:
                raise ValueError(f"unknown heuristic {h!r}")
        if len(set(self.heuristics)) != len(self.heuristics):
            raise ValueError("duplicate heuristics in config")
        if not self.sizes or any(s < 1 for s in self.sizes):
            raise ValueError("sizes must be positive")
        if len(set(self.sizes)) != len(self.sizes):
            raise ValueError("duplicate sizes in config")
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")


@dataclass(frozen=True)
class MetricsRow:
    heuristic: str
    set_size: int
    rep: int
    iteration: int
    sum_distances: float
    dp_cells: int
    distance_evals: int
    stat_updates: int
    rep_updates: int
    total_ops: int
    wall_ms: float


@dataclass(frozen=True)
class SummaryRow:
    heuristic: str
    set_size: int
    runs: int
    mean_final_sum: float
    mean_iterations: float
    mean_total_ops: float
    mean_wall_ms: float


@dataclass
class RunReport:
    config: ExperimentConfig
    rows: list[MetricsRow] = field(default_factory=list)
    summary: list[SummaryRow] = field(default_factory=list)


def resolve_cost_model(costs: str, alphabet: Alphabet) -> CostModel:
    """Turn a config cost token (unit / ring / builtin-table1 / path) into a model."""
    if costs == "unit":
        return unit_costs(alphabet)
    if costs == "ring":
        return ring_costs(alphabet)
    if costs == "builtin-table1":
        model = builtin_table1()
        if model.alphabet.symbols != alphabet.symbols:
            raise ValueError(
                "builtin-table1 covers symbols 0124 only; the data uses "
                f"{''.join(alphabet.symbols)!r}"
            )
        return model
    return load_cost_matrix(costs, alphabet)


def materialize_set(config: ExperimentConfig) -> StringSet:
    if config.dataset is not None:
        return gen_dataset(config.dataset)
    return load_strings(config.input_path)


def run_experiment(config: ExperimentConfig) -> RunReport:
    """Execute the full (repetition x size x heuristic) grid."""
    strset = materialize_set(config)
    model = resolve_cost_model(config.costs, strset.alphabet)
    sizes = sorted(config.sizes)
    if sizes[-1] > len(strset):
        raise ValueError(
            f"largest size {sizes[-1]} exceeds the pool of {len(strset)} members"
        )
    refine_cfg = RefineConfig(
        positive_only=config.positive_only,
        deletion_repercussion=config.deletion_repercussion,
        max_iterations=config.max_iterations,
    )
    report = RunReport(config)
    rng = np.random.default_rng(config.seed)
    for rep in range(config.repetitions):
        perm = rng.permutation(len(strset))
        for size in sizes:
            subset = strset.subset(perm[:size])
            for heuristic in config.heuristics:
                counter = OpCounter()
                t0 = time.perf_counter()
                _, trace = refine_from_set_median(
                    subset, heuristic, model, refine_cfg, counter
                )
                wall_ms = (time.perf_counter() - t0) * 1000.0
                report.rows.extend(trace_rows(heuristic, size, rep, trace, wall_ms))
    report.summary = summarize(report.rows)
    return report


def trace_rows(heuristic, size, rep, trace, wall_ms) -> list[MetricsRow]:
    """One metrics row per trace entry, stamped with the run's wall time."""
    rows = []
    for it, entry in enumerate(trace.entries):
        c = entry.counters
        rows.append(
            MetricsRow(
                heuristic,
                size,
                rep,
                it,
                entry.sum_distances,
                c.dp_cells,
                c.distance_evals,
                c.stat_updates,
                c.rep_updates,
                c.total,
                wall_ms,
            )
        )
    return rows


def summarize(rows: list[MetricsRow]) -> list[SummaryRow]:
    """Aggregate final-iteration rows per (heuristic, size)."""
    finals: dict[tuple[str, int], list[MetricsRow]] = {}
    for row in rows:
        key = (row.heuristic, row.set_size, row.rep)
        cur = finals.get(key)
        if cur is None or row.iteration > cur.iteration:
            finals[key] = row
    grouped: dict[tuple[str, int], list[MetricsRow]] = {}
    for (heuristic, size, _rep), row in finals.items():
        grouped.setdefault((heuristic, size), []).append(row)
    out = []
    for (heuristic, size) in sorted(grouped):
        rs = grouped[(heuristic, size)]
        out.append(
            SummaryRow(
                heuristic,
                size,
                len(rs),
                float(np.mean([r.sum_distances for r in rs])),
                float(np.mean([r.iteration + 1 for r in rs])),
                float(np.mean([r.total_ops for r in rs])),
                float(np.mean([r.wall_ms for r in rs])),
            )
        )
    return out


def _fmt_value(v) -> str:
    if isinstance(v, float):
        if v == int(v):
            return str(int(v))
        return repr(v)
    return str(v)


def emit_csv(report: RunReport, path) -> None:
    """Write the per-iteration rows in canonical order (error if empty)."""
    if not report.rows:
        raise ValueError("refusing to write an empty report")
    rows = sorted(
        report.rows, key=lambda r: (r.heuristic, r.set_size, r.rep, r.iteration)
    )
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    r.heuristic,
                    str(r.set_size),
                    str(r.rep),
                    str(r.iteration),
                    _fmt_value(r.sum_distances),
                    str(r.dp_cells),
                    str(r.distance_evals),
                    str(r.stat_updates),
                    str(r.rep_updates),
                    str(r.total_ops),
                    _fmt_value(r.wall_ms),
                ]
            )
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def emit_plots(report: RunReport, outdir) -> list[str]:
    """Render the three standard SVG figures into ``outdir``.

    (a) mean total work vs set size, (b) mean final sum vs set size,
    (c) sum per iteration at the largest size (first repetition).
    Each heuristic's line carries a ``series-<name>`` gid in the SVG.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if not report.rows:
        raise ValueError("refusing to plot an empty report")
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    heuristics = sorted({r.heuristic for r in report.rows})
    sizes = sorted({r.set_size for r in report.rows})
    written = []

    def by_summary(attr):
        table = {(s.heuristic, s.set_size): getattr(s, attr) for s in report.summary}
        return {
            h: [table[(h, size)] for size in sizes if (h, size) in table]
            for h in heuristics
        }

    def line_figure(fname, series, ylabel, title, xlabel="set size", x=None):
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        for name, ys in series.items():
            xs = x[name] if isinstance(x, dict) else (x or sizes)
            (ln,) = ax.plot(xs[: len(ys)], ys, marker="o", label=name)
            ln.set_gid(f"series-{name}")
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.set_title(title)
        ax.legend()
        fig.tight_layout()
        path = outdir / fname
        fig.savefig(path, format="svg")
        plt.close(fig)
        written.append(str(path))

    line_figure(
        "ops_vs_size.svg",
        by_summary("mean_total_ops"),
        "mean total ops",
        "work vs set size",
    )
    line_figure(
        "quality_vs_size.svg",
        by_summary("mean_final_sum"),
        "mean final sum of distances",
        "result quality vs set size",
    )
    top = sizes[-1]
    conv = {}
    conv_x = {}
    for h in heuristics:
        rows = sorted(
            (
                r
                for r in report.rows
                if r.heuristic == h and r.set_size == top and r.rep == 0
            ),
            key=lambda r: r.iteration,
        )
        conv[h] = [r.sum_distances for r in rows]
        conv_x[h] = [r.iteration for r in rows]
    line_figure(
        "error_decrease.svg",
        conv,
        "sum of distances",
        f"refinement progress at size {top}",
        xlabel="iteration",
        x=conv_x,
    )
    return written
