"""Approximate median strings under weighted edit distance.

The package refines a candidate string toward the median of a set by
applying single edit operations, ranked so that the first one probed is
very likely to lower the sum of distances.  See the README for the model
and the benchmark harness.
"""

from .alphabet import Alphabet, StringSet
from .costs import CostModel, ring_costs, unit_costs, validate_cost_model
from .datasets import (
    ChainCodeRecord,
    DatasetSpec,
    builtin_table1,
    gen_dataset,
    load_cost_matrix,
    load_strings,
    planted_center,
    save_cost_matrix,
    save_strings,
)
from .distance import (
    EditOp,
    EditScript,
    apply_op,
    apply_script,
    distance,
    distance_with_script,
)
from .heuristics import (
    PositionStats,
    ScoredOp,
    collect_stats,
    lemma1_holds,
    score_frequency,
    score_frequency_cost,
    score_repercussion,
    set_median,
    sum_distances,
)
from .instrument import OpCounter
from .refine import (
    RefineConfig,
    RefinementTrace,
    TraceEntry,
    position_sweep,
    refine,
    refine_from_set_median,
)
from .bench import (
    ExperimentConfig,
    MetricsRow,
    RunReport,
    SummaryRow,
    emit_csv,
    emit_plots,
    run_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "StringSet",
    "CostModel",
    "unit_costs",
    "ring_costs",
    "validate_cost_model",
    "EditOp",
    "EditScript",
    "distance",
    "distance_with_script",
    "apply_op",
    "apply_script",
    "PositionStats",
    "ScoredOp",
    "collect_stats",
    "score_frequency",
    "score_frequency_cost",
    "score_repercussion",
    "lemma1_holds",
    "set_median",
    "sum_distances",
    "RefineConfig",
    "RefinementTrace",
    "TraceEntry",
    "refine",
    "refine_from_set_median",
    "position_sweep",
    "OpCounter",
    "DatasetSpec",
    "ChainCodeRecord",
    "gen_dataset",
    "planted_center",
    "load_strings",
    "save_strings",
    "load_cost_matrix",
    "save_cost_matrix",
    "builtin_table1",
    "ExperimentConfig",
    "MetricsRow",
    "RunReport",
    "SummaryRow",
    "run_experiment",
    "emit_csv",
    "emit_plots",
    "__version__",
]
