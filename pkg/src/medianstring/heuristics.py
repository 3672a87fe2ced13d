"""Edit-demand statistics and operation ranking.

Given a candidate string and a set, we compute one canonical edit script per
member and tally which operations the members "demand" at each candidate
position (gap positions for insertions).  Three rankings over the demanded
operations are provided:

- frequency: how many members demand the op,
- frequency_cost: op cost times how many members demand it,
- repercussion: the cost the op removes for its demanders, corrected by the
  signed effect it has on members that demand a *different* rewrite of the
  same position.

The repercussion correction is what makes the ranking track the true change
in the sum of distances: if members want position j to become ``c`` and we
write ``b`` there instead, their distances change by about
``cost(b, c) - cost(a, c)`` each, which the score accumulates with the
opposite sign (positive when the move helps them too).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _dp
from .alphabet import StringSet
from .costs import CostModel
from .distance import (
    DELETION,
    INSERTION,
    SUBSTITUTION,
    EditOp,
    EditScript,
    distance_with_script,
)
from .instrument import OpCounter


@dataclass
class PositionStats:
    """Demanded operations, keyed by the op itself, with their demanders.

    ``members[op]`` lists the ids of set members whose canonical script
    contains ``op`` (for insertions: at most one tally per member per gap,
    the first the script demands there).  Sum of counts at any one position
    therefore never exceeds the set size.
    """

    members: dict[EditOp, list[int]] = field(default_factory=dict)
    _slots: dict[tuple[str, int], list[EditOp]] | None = field(
        default=None, repr=False, compare=False
    )

    def count(self, op: EditOp) -> int:
        return len(self.members.get(op, ()))

    def ops(self) -> list[EditOp]:
        return list(self.members.keys())

    def _slot_index(self) -> dict[tuple[str, int], list[EditOp]]:
        if self._slots is None:
            slots: dict[tuple[str, int], list[EditOp]] = {}
            for op in self.members:
                slots.setdefault((op.kind, op.pos), []).append(op)
            self._slots = slots
        return self._slots

    def same_slot(self, op: EditOp) -> list[EditOp]:
        """All demanded ops of the same kind at the same position as ``op``."""
        return self._slot_index().get((op.kind, op.pos), [])


@dataclass(frozen=True)
class ScoredOp:
    """A demanded op with its ranking score.

    ``supporters`` are the demanders; ``lemma_supporters`` are members
    demanding a different same-kind rewrite of the position that provably
    cannot get farther when this op is applied (their indirect term is
    non-negative).  The two sets never overlap.
    """

    op: EditOp
    direct_gain: float
    indirect_delta: float
    total_score: float
    supporters: frozenset[int]
    lemma_supporters: frozenset[int]


def sum_distances(
    candidate: str, strset: StringSet, model: CostModel, counter: OpCounter | None = None
) -> float:
    """Sum of distances from ``candidate`` to every member of the set."""
    model.alphabet.validate_string(candidate)
    a = model.alphabet.encode(candidate)
    flat, starts, lengths = _packed_members(strset, model.alphabet)
    if counter is not None:
        cells = sum((len(candidate) + 1) * (l + 1) for l in lengths)
        counter.add_distance(int(cells), evals=len(strset))
    return float(_dp.dp_cost_batch(a, flat, starts, lengths, model.costs))


def _packed_members(strset: StringSet, alphabet):
    """Member code arrays packed flat for the batch kernel (cached on the set)."""
    cached = getattr(strset, "_packed", None)
    if cached is not None:
        return cached
    codes = [alphabet.encode(m) for m in strset.members]
    lengths = np.array([len(c) for c in codes], dtype=np.int64)
    starts = np.zeros(len(codes), dtype=np.int64)
    if len(codes) > 1:
        starts[1:] = np.cumsum(lengths)[:-1]
    flat = (
        np.concatenate(codes)
        if any(len(c) for c in codes)
        else np.empty(0, dtype=np.uint16)
    )
    packed = (flat, starts, lengths)
    object.__setattr__(strset, "_packed", packed)
    return packed


def set_median(
    strset: StringSet, model: CostModel, counter: OpCounter | None = None
) -> str:
    """The member with the smallest sum of distances to the others.

    Ties go to the smallest member id, so the result is deterministic.
    """
    best_id = 0
    best_sum = None
    for i, member in enumerate(strset.members):
        total = sum_distances(member, strset, model, counter)
        if best_sum is None or total < best_sum:
            best_id = i
            best_sum = total
    return strset.members[best_id]


def collect_stats(
    candidate: str,
    strset: StringSet,
    model: CostModel,
    counter: OpCounter | None = None,
) -> tuple[PositionStats, float, list[EditScript]]:
    """Tally the ops every member demands of the candidate.

    Returns the statistics, the current sum of distances, and the canonical
    scripts (one per member, in member order).
    """
    stats = PositionStats()
    scripts: list[EditScript] = []
    total = 0.0
    for member_id, member in enumerate(strset.members):
        dist, script = distance_with_script(candidate, member, model, counter)
        total += dist
        scripts.append(script)
        seen_gaps: set[int] = set()
        for op in script.ops:
            if op.kind == INSERTION:
                # One insertion demand per member per gap: after the first is
                # applied the rest shift anyway, and keeping one per member
                # keeps position counts bounded by the set size.
                if op.pos in seen_gaps:
                    continue
                seen_gaps.add(op.pos)
            stats.members.setdefault(op, []).append(member_id)
            if counter is not None:
                counter.stat_updates += 1
    return stats, total, scripts


def lemma1_holds(applied: EditOp, other: EditOp, model: CostModel) -> bool:
    """Whether applying ``applied`` cannot hurt a member demanding ``other``.

    Both ops must be of the same kind at the same position and distinct.
    The guarantee holds when rewriting the applied symbol into the other
    member's wish is no more expensive than the original rewrite was:
    ``cost(applied.dst, other.dst) <= cost(applied.src, other.dst)``.
    """
    if applied.kind != other.kind or applied.pos != other.pos:
        raise ValueError("lemma applies to same-kind ops at the same position")
    if applied == other:
        raise ValueError("lemma compares two distinct ops")
    return model.cost(applied.dst, other.dst) <= model.cost(applied.src, other.dst)


def _sorted_scored(scored: list[ScoredOp], model: CostModel) -> list[ScoredOp]:
    eps = model.eps_code
    code = model.alphabet.code

    def key(so: ScoredOp):
        op = so.op
        kind_rank = {SUBSTITUTION: 0, DELETION: 1, INSERTION: 2}[op.kind]
        dst = eps if op.dst == "" else code(op.dst)
        return (-so.total_score, -so.direct_gain, op.pos, kind_rank, dst)

    return sorted(scored, key=key)


def score_frequency(stats: PositionStats, model: CostModel) -> list[ScoredOp]:
    """Rank demanded ops by how many members demand them."""
    scored = []
    for op, ids in stats.members.items():
        n = float(len(ids))
        scored.append(ScoredOp(op, n, 0.0, n, frozenset(ids), frozenset()))
    return _sorted_scored(scored, model)


def score_frequency_cost(stats: PositionStats, model: CostModel) -> list[ScoredOp]:
    """Rank demanded ops by op cost times demand count."""
    scored = []
    for op, ids in stats.members.items():
        gain = model.cost(op.src, op.dst) * len(ids)
        scored.append(ScoredOp(op, gain, 0.0, gain, frozenset(ids), frozenset()))
    return _sorted_scored(scored, model)


def score_repercussion(
    stats: PositionStats,
    model: CostModel,
    include_deletion_rep: bool = True,
    counter: OpCounter | None = None,
) -> list[ScoredOp]:
    """Rank demanded ops by direct gain plus signed same-position repercussion.

    For op ``a -> b`` at position j, the direct gain is its cost times its
    demand count.  Every other demanded op ``a -> c`` of the same kind at j
    contributes ``count * (cost(a, c) - cost(b, c))``: positive when writing
    ``b`` leaves those members closer than ``a`` did, negative when it moves
    the position away from their wish.  With ``include_deletion_rep`` a
    deletion of ``a`` at j also collects the terms of members demanding
    ``a -> c`` substitutions there (the deleted position's survivors).
    """
    cost = model.cost
    scored = []
    for op, ids in stats.members.items():
        direct = cost(op.src, op.dst) * len(ids)
        indirect = 0.0
        lemma_ids: set[int] = set()
        if op.kind in (SUBSTITUTION, INSERTION):
            for other in stats.same_slot(op):
                if other == op:
                    continue
                term = cost(op.src, other.dst) - cost(op.dst, other.dst)
                indirect += term * stats.count(other)
                if counter is not None:
                    counter.rep_updates += 1
                if term >= 0.0:
                    lemma_ids.update(stats.members[other])
        elif op.kind == DELETION and include_deletion_rep:
            for other in stats._slot_index().get((SUBSTITUTION, op.pos), []):
                term = cost(op.src, other.dst) - cost("", other.dst)
                indirect += term * stats.count(other)
                if counter is not None:
                    counter.rep_updates += 1
        scored.append(
            ScoredOp(
                op,
                direct,
                indirect,
                direct + indirect,
                frozenset(ids),
                frozenset(lemma_ids),
            )
        )
    return _sorted_scored(scored, model)


SCORERS = {
    "frequency": score_frequency,
    "frequency_cost": score_frequency_cost,
    "repercussion": score_repercussion,
}
