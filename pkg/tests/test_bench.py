"""The experiment runner, CSV emission, and plots."""

import csv

import pytest

from medianstring import (
    DatasetSpec,
    ExperimentConfig,
    MetricsRow,
    RunReport,
    emit_csv,
    emit_plots,
    run_experiment,
)
from medianstring.bench import CSV_HEADER, summarize


def small_config(**overrides):
    base = dict(
        dataset=DatasetSpec(
            "perturbed_cluster", 4, 12, 8, noise_rate=0.2, seed=5
        ),
        costs="unit",
        heuristics=("repercussion", "frequency_cost"),
        sizes=(4, 8),
        repetitions=2,
        seed=3,
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def test_config_validation():
    with pytest.raises(ValueError, match="exactly one"):
        ExperimentConfig()
    with pytest.raises(ValueError, match="exactly one"):
        ExperimentConfig(
            dataset=DatasetSpec("protein_like", 4, 4, 4), input_path="x"
        )
    with pytest.raises(ValueError, match="heuristic"):
        small_config(heuristics=("voodoo",))
    with pytest.raises(ValueError, match="duplicate"):
        small_config(heuristics=("repercussion", "repercussion"))
    with pytest.raises(ValueError, match="sizes"):
        small_config(sizes=())
    with pytest.raises(ValueError, match="repetitions"):
        small_config(repetitions=0)


def test_run_experiment_covers_the_grid():
    report = run_experiment(small_config())
    cells = {(r.heuristic, r.set_size, r.rep) for r in report.rows}
    assert cells == {
        (h, s, r)
        for h in ("repercussion", "frequency_cost")
        for s in (4, 8)
        for r in (0, 1)
    }
    for row in report.rows:
        assert row.total_ops == row.dp_cells + row.stat_updates + row.rep_updates
    # summary has one line per heuristic and size
    assert len(report.summary) == 4
    for s in report.summary:
        assert s.runs == 2


def test_run_experiment_rejects_oversized_requests():
    with pytest.raises(ValueError, match="exceeds"):
        run_experiment(small_config(sizes=(4, 200)))


def test_sums_within_each_run_never_increase():
    report = run_experiment(small_config())
    by_run: dict = {}
    for r in report.rows:
        by_run.setdefault((r.heuristic, r.set_size, r.rep), []).append(r)
    for rows in by_run.values():
        rows.sort(key=lambda r: r.iteration)
        sums = [r.sum_distances for r in rows]
        assert all(a >= b for a, b in zip(sums, sums[1:]))


def test_emit_csv_format_and_order(tmp_path):
    report = run_experiment(small_config())
    path = tmp_path / "out.csv"
    emit_csv(report, path)
    text = path.read_text()
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    keys = [
        (r["heuristic"], int(r["set_size"]), int(r["rep"]), int(r["iteration"]))
        for r in rows
    ]
    assert keys == sorted(keys)
    # numeric fields parse back to exactly the values in the report
    report_by_key = {
        (r.heuristic, r.set_size, r.rep, r.iteration): r for r in report.rows
    }
    for r in rows:
        key = (r["heuristic"], int(r["set_size"]), int(r["rep"]), int(r["iteration"]))
        assert float(r["sum"]) == report_by_key[key].sum_distances
        assert int(r["total_ops"]) == report_by_key[key].total_ops


def test_emit_csv_refuses_empty_report(tmp_path):
    report = RunReport(small_config())
    path = tmp_path / "nope.csv"
    with pytest.raises(ValueError, match="empty"):
        emit_csv(report, path)
    assert not path.exists()


def test_csv_determinism_modulo_wall_time(tmp_path):
    config = small_config()
    emit_csv(run_experiment(config), tmp_path / "a.csv")
    emit_csv(run_experiment(config), tmp_path / "b.csv")

    def strip_wall(path):
        return [line.rsplit(",", 1)[0] for line in path.read_text().splitlines()]

    assert strip_wall(tmp_path / "a.csv") == strip_wall(tmp_path / "b.csv")


def test_emit_plots_writes_svg_series(tmp_path):
    report = run_experiment(small_config())
    written = emit_plots(report, tmp_path / "plots")
    assert sorted(p.rsplit("/", 1)[-1] for p in written) == [
        "error_decrease.svg",
        "ops_vs_size.svg",
        "quality_vs_size.svg",
    ]
    for name in ("ops_vs_size.svg", "quality_vs_size.svg"):
        svg = (tmp_path / "plots" / name).read_text()
        assert 'id="series-repercussion"' in svg
        assert 'id="series-frequency_cost"' in svg


def test_summarize_takes_final_iteration():
    rows = [
        MetricsRow("repercussion", 4, 0, 0, 10.0, 100, 5, 3, 2, 105, 1.0),
        MetricsRow("repercussion", 4, 0, 1, 7.0, 200, 9, 6, 4, 210, 1.0),
        MetricsRow("repercussion", 4, 1, 0, 9.0, 90, 5, 3, 2, 95, 2.0),
    ]
    (summary,) = summarize(rows)
    assert summary.heuristic == "repercussion"
    assert summary.runs == 2
    assert summary.mean_final_sum == 8.0
    assert summary.mean_total_ops == (210 + 95) / 2
    assert summary.mean_iterations == 1.5
