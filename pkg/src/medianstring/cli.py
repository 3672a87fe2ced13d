"""Command line entry points.

``median compute`` refines one median for a string set and prints it;
``median bench`` runs a configured benchmark sweep and writes the CSV.
Both are thin wrappers over the library; everything they can do is also
available programmatically.
"""

from __future__ import annotations

import argparse
import sys
import time

from .bench import (
    ExperimentConfig,
    RunReport,
    emit_csv,
    emit_plots,
    materialize_set,
    resolve_cost_model,
    run_experiment,
    summarize,
    trace_rows,
)
from .datasets import KINDS, DatasetSpec, gen_dataset, load_strings
from .instrument import OpCounter
from .refine import RefineConfig, refine_from_set_median

# CLI shorthand for the frequency-times-cost scorer.
_HEURISTIC_TOKENS = {
    "repercussion": "repercussion",
    "frequency": "frequency",
    "freqcost": "frequency_cost",
    "frequency_cost": "frequency_cost",
    "sweep": "sweep",
}


def parse_gen_spec(text: str) -> DatasetSpec:
    """Parse ``kind:key=value,key=value`` into a DatasetSpec."""
    kind, _, rest = text.partition(":")
    if kind not in KINDS:
        raise ValueError(f"unknown dataset kind {kind!r} (expected one of {KINDS})")
    kwargs: dict = {}
    if rest:
        for item in rest.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"bad generator parameter {item!r} (want key=value)")
            key = key.strip()
            value = value.strip()
            if key == "noise_rate":
                kwargs[key] = float(value)
            elif key in (
                "alphabet_size",
                "count",
                "mean_length",
                "length_jitter",
                "seed",
            ):
                kwargs[key] = int(value)
            else:
                raise ValueError(f"unknown generator parameter {key!r}")
    try:
        return DatasetSpec(kind=kind, **kwargs)
    except TypeError as exc:
        raise ValueError(f"incomplete generator spec {text!r}: {exc}") from None


def _add_compute(subparsers):
    p = subparsers.add_parser(
        "compute", help="refine a median for one string set and print it"
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="string-set file (one member per line)")
    src.add_argument("--gen", help="generator spec, e.g. perturbed_cluster:alphabet_size=8,count=20,mean_length=30,noise_rate=0.1,seed=1")
    p.add_argument(
        "--costs",
        default=None,
        help="cost-matrix file, or the builtin 'unit' / 'ring' models",
    )
    p.add_argument(
        "--builtin-table1",
        action="store_true",
        help="use the built-in worked-example cost table (symbols 0124)",
    )
    p.add_argument(
        "--init",
        choices=["setmedian"],
        default="setmedian",
        help="initial candidate (the set median)",
    )
    p.add_argument(
        "--heuristic",
        choices=sorted(_HEURISTIC_TOKENS),
        default="repercussion",
    )
    p.add_argument("--positive-only", action="store_true")
    p.add_argument(
        "--no-del-rep",
        action="store_true",
        help="exclude deletions from repercussion cross terms",
    )
    p.add_argument("--max-iterations", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the per-iteration metrics CSV here")
    p.add_argument("--plots", help="write the standard SVG figures here")
    p.set_defaults(func=cmd_compute)


def _add_bench(subparsers):
    p = subparsers.add_parser("bench", help="run a configured benchmark sweep")
    p.add_argument("--config", required=True, help="key = value config file")
    p.set_defaults(func=cmd_bench)


def _resolve_costs_arg(args, alphabet):
    if args.builtin_table1:
        if args.costs is not None:
            raise ValueError("give either --costs or --builtin-table1, not both")
        return resolve_cost_model("builtin-table1", alphabet)
    return resolve_cost_model(args.costs or "unit", alphabet)


def cmd_compute(args) -> int:
    if args.gen is not None:
        strset = gen_dataset(parse_gen_spec(args.gen))
    else:
        strset = load_strings(args.input)
    model = _resolve_costs_arg(args, strset.alphabet)
    heuristic = _HEURISTIC_TOKENS[args.heuristic]
    cfg = RefineConfig(
        positive_only=args.positive_only,
        deletion_repercussion=not args.no_del_rep,
        max_iterations=args.max_iterations,
        seed=args.seed,
    )
    counter = OpCounter()
    t0 = time.perf_counter()
    median, trace = refine_from_set_median(strset, heuristic, model, cfg, counter)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    final = trace.final
    print(f"median: {median}")
    print(f"sum_of_distances: {final.sum_distances:g}")
    print(
        f"iterations: {len(trace.entries)}  total_ops: {counter.total}  "
        f"converged: {trace.converged}"
    )
    if args.out or args.plots:
        costs_token = "builtin-table1" if args.builtin_table1 else (args.costs or "unit")
        config = ExperimentConfig(
            input_path=args.input or "<generated>",
            costs=costs_token,
            heuristics=(heuristic,),
            sizes=(len(strset),),
        )
        report = RunReport(config)
        report.rows = trace_rows(heuristic, len(strset), 0, trace, wall_ms)
        report.summary = summarize(report.rows)
        if args.out:
            emit_csv(report, args.out)
            print(f"wrote {args.out}")
        if args.plots:
            for path in emit_plots(report, args.plots):
                print(f"wrote {path}")
    return 0


def parse_config_file(path) -> tuple[ExperimentConfig, str | None, str | None]:
    """Read the flat ``key = value`` bench config.

    Returns the experiment config plus the optional out/plots paths.
    """
    pairs: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            pairs[key.strip()] = value.strip()

    def pop(key, default=None):
        return pairs.pop(key, default)

    dataset = None
    gen = pop("gen")
    if gen is not None:
        dataset = parse_gen_spec(gen)
    input_path = pop("input")
    heuristics = tuple(
        _HEURISTIC_TOKENS[tok.strip()]
        for tok in pop("heuristics", "repercussion,frequency_cost").split(",")
    )
    sizes = tuple(int(s) for s in pop("sizes", "20").split(","))
    max_iter = pop("max_iterations")
    config = ExperimentConfig(
        dataset=dataset,
        input_path=input_path,
        costs=pop("costs", "unit"),
        heuristics=heuristics,
        sizes=sizes,
        repetitions=int(pop("repetitions", "1")),
        seed=int(pop("seed", "0")),
        positive_only=pop("positive_only", "false").lower() == "true",
        deletion_repercussion=pop("deletion_repercussion", "true").lower() == "true",
        max_iterations=int(max_iter) if max_iter else None,
    )
    out = pop("out")
    plots = pop("plots")
    if pairs:
        raise ValueError(f"{path}: unknown config keys {sorted(pairs)}")
    return config, out, plots


def cmd_bench(args) -> int:
    config, out, plots = parse_config_file(args.config)
    report = run_experiment(config)
    print(f"{'heuristic':<16} {'size':>5} {'runs':>5} {'final sum':>12} "
          f"{'iters':>7} {'total ops':>14} {'wall ms':>10}")
    for s in report.summary:
        print(
            f"{s.heuristic:<16} {s.set_size:>5} {s.runs:>5} "
            f"{s.mean_final_sum:>12.2f} {s.mean_iterations:>7.1f} "
            f"{s.mean_total_ops:>14.0f} {s.mean_wall_ms:>10.1f}"
        )
    if out:
        emit_csv(report, out)
        print(f"wrote {out}")
    if plots:
        for path in emit_plots(report, plots):
            print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="median",
        description="approximate median strings by iterative refinement",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_compute(subparsers)
    _add_bench(subparsers)
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
