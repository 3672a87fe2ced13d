"""Iterative median refinement by single edit operations.

:func:`refine` is the statistics-driven search: each outer iteration tallies
the ops the members demand of the current candidate, ranks them with the
chosen scorer, and walks the ranked queue until the first op that strictly
lowers the sum of distances.  The walk is the expensive part (every probe
costs a full sum evaluation), so a ranking that puts a winning op early
saves real work; that is exactly what the repercussion scorer is for.

:func:`position_sweep` is the classic baseline that ignores the scripts and
exhaustively probes every possible single edit, family by family.  It is
far more thorough per step and far more expensive; it serves as the quality
yardstick in the benchmarks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import StringSet
from .costs import CostModel
from .distance import EditOp, apply_op
from .heuristics import (
    SCORERS,
    collect_stats,
    score_repercussion,
    set_median,
    sum_distances,
)
from .instrument import OpCounter


@dataclass(frozen=True)
class RefineConfig:
    """Knobs for :func:`refine`.

    ``positive_only`` drops queue entries with non-positive total score
    (fewer probes, possibly earlier stops).  ``deletion_repercussion``
    lets deletions collect same-position substitution terms in the
    repercussion scorer.  ``max_iterations`` truncates the outer loop
    (None = run to convergence).  ``seed`` is reserved for stochastic
    tie-breaking experiments; the default behaviour is fully deterministic
    and ignores it.
    """

    scorer: str = "repercussion"
    positive_only: bool = False
    deletion_repercussion: bool = True
    max_iterations: int | None = None
    seed: int | None = None


@dataclass(frozen=True)
class TraceEntry:
    """State of one outer iteration, recorded at its start.

    ``ops_dequeued`` counts the queue probes the iteration spent and
    ``accepted`` is the op it ended up applying (None when the queue ran
    out, which terminates the search).  ``counters`` is the work snapshot
    at the end of the iteration.
    """

    candidate: str
    sum_distances: float
    ops_dequeued: int
    accepted: EditOp | None
    counters: OpCounter


@dataclass(frozen=True)
class RefinementTrace:
    entries: tuple[TraceEntry, ...]
    converged: bool

    @property
    def final(self) -> TraceEntry:
        return self.entries[-1]

    def sums(self) -> list[float]:
        return [e.sum_distances for e in self.entries]


def _make_queue(scorer: str, stats, model: CostModel, config: RefineConfig, counter):
    if scorer == "repercussion":
        queue = score_repercussion(
            stats, model, config.deletion_repercussion, counter
        )
    else:
        try:
            queue = SCORERS[scorer](stats, model)
        except KeyError:
            raise ValueError(f"unknown scorer {scorer!r}") from None
    if config.positive_only:
        queue = [so for so in queue if so.total_score > 0.0]
    return queue


def refine(
    strset: StringSet,
    init: str,
    scorer: str | None = None,
    model: CostModel | None = None,
    config: RefineConfig = RefineConfig(),
    counter: OpCounter | None = None,
) -> tuple[str, RefinementTrace]:
    """Refine ``init`` toward a median of the set by single accepted edits.

    Returns the final candidate and the per-iteration trace.  ``scorer``
    overrides ``config.scorer`` when given.  Iteration sums are
    non-increasing; each accepted op strictly lowers the sum, and the run
    stops when a whole ranked queue yields no improvement (or when
    ``config.max_iterations`` cuts it short, flagged by ``converged``).
    """
    if model is None:
        raise ValueError("refine needs a cost model")
    scorer = scorer or config.scorer
    if scorer not in SCORERS:
        raise ValueError(f"unknown scorer {scorer!r}")
    if config.max_iterations is not None and config.max_iterations < 1:
        raise ValueError("max_iterations must be at least 1 (or None)")
    if counter is None:
        counter = OpCounter()
    tol = model.tolerance
    current = init
    entries: list[TraceEntry] = []
    converged = False
    while True:
        stats, cur_sum, _ = collect_stats(current, strset, model, counter)
        queue = _make_queue(scorer, stats, model, config, counter)
        dequeued = 0
        accepted = None
        next_candidate = None
        for so in queue:
            dequeued += 1
            trial = apply_op(current, so.op)
            trial_sum = sum_distances(trial, strset, model, counter)
            if trial_sum < cur_sum - tol:
                accepted = so.op
                next_candidate = trial
                break
        entries.append(
            TraceEntry(current, cur_sum, dequeued, accepted, counter.snapshot())
        )
        if accepted is None:
            converged = True
            break
        current = next_candidate
        if config.max_iterations is not None and len(entries) >= config.max_iterations:
            break
    if not converged:
        # Truncated: record the state we stopped in so the trace always ends
        # with a no-accept entry.
        final_sum = sum_distances(current, strset, model, counter)
        entries.append(TraceEntry(current, final_sum, 0, None, counter.snapshot()))
    return current, RefinementTrace(tuple(entries), converged)


def position_sweep(
    strset: StringSet,
    init: str,
    model: CostModel,
    counter: OpCounter | None = None,
    max_cycles: int | None = None,
) -> tuple[str, RefinementTrace]:
    """Exhaustive single-edit descent, one op family at a time.

    Each pass probes every candidate reachable by one op of the current
    family (all substitutions, then all deletions, then all insertions,
    position by position, symbol by symbol) and moves to the best strictly
    improving one.  Cycles of the three families repeat until a full cycle
    makes no move.  The trace records one entry per family pass, with
    ``ops_dequeued`` counting the probes of that pass.
    """
    if counter is None:
        counter = OpCounter()
    symbols = model.alphabet.symbols
    tol = model.tolerance
    current = init
    cur_sum = sum_distances(current, strset, model, counter)
    entries: list[TraceEntry] = []
    converged = False
    cycles = 0
    while True:
        improved_in_cycle = False
        for family in ("sub", "del", "ins"):
            probes = 0
            best_sum = cur_sum
            best_op = None
            for op in _family_ops(current, symbols, family):
                trial = apply_op(current, op)
                trial_sum = sum_distances(trial, strset, model, counter)
                probes += 1
                if trial_sum < best_sum - tol:
                    best_sum = trial_sum
                    best_op = op
            entries.append(
                TraceEntry(current, cur_sum, probes, best_op, counter.snapshot())
            )
            if best_op is not None:
                current = apply_op(current, best_op)
                cur_sum = best_sum
                improved_in_cycle = True
        cycles += 1
        if not improved_in_cycle:
            converged = True
            break
        if max_cycles is not None and cycles >= max_cycles:
            break
    if not converged:
        entries.append(TraceEntry(current, cur_sum, 0, None, counter.snapshot()))
    return current, RefinementTrace(tuple(entries), converged)


def _family_ops(current: str, symbols, family: str):
    if family == "sub":
        for pos, ch in enumerate(current):
            for sym in symbols:
                if sym != ch:
                    yield EditOp(pos, ch, sym)
    elif family == "del":
        for pos, ch in enumerate(current):
            yield EditOp(pos, ch, "")
    else:
        for gap in range(len(current) + 1):
            for sym in symbols:
                yield EditOp(gap, "", sym)


def refine_from_set_median(
    strset: StringSet,
    scorer: str,
    model: CostModel,
    config: RefineConfig = RefineConfig(),
    counter: OpCounter | None = None,
) -> tuple[str, RefinementTrace]:
    """Convenience wrapper: initialize at the set median, then refine."""
    if counter is None:
        counter = OpCounter()
    init = set_median(strset, model, counter)
    if scorer == "sweep":
        return position_sweep(strset, init, model, counter)
    return refine(strset, init, scorer, model, config, counter)
