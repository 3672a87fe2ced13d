"""Weighted edit distance, optimal edit scripts, and script application.

Distances come from the standard dynamic program over a cost matrix.  The
traceback that extracts an edit script is deterministic: on ties it prefers
substitution (or match) over deletion over insertion, so every call yields
the same canonical script.  Matches are not recorded as operations.

Script coordinates always refer to the *source* string: substitutions and
deletions carry the index of the affected symbol, insertions carry the gap
index (0 = before the first symbol, len = after the last).  Applying a
script walks the operations right to left so earlier coordinates stay valid.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _dp
from .costs import CostModel
from .instrument import OpCounter

SUBSTITUTION = "sub"
DELETION = "del"
INSERTION = "ins"

_KIND_RANK = {SUBSTITUTION: 0, DELETION: 1, INSERTION: 2}


@dataclass(frozen=True)
class EditOp:
    """A single edit: ``src`` -> ``dst`` at ``pos`` ("" is the empty symbol).

    Substitution has both symbols, deletion has ``dst == ""``, insertion has
    ``src == ""`` with ``pos`` naming a gap.  ``src == dst == ""`` is invalid.
    """

    pos: int
    src: str
    dst: str

    def __post_init__(self):
        if self.src == "" and self.dst == "":
            raise ValueError("an edit op needs at least one non-empty symbol")
        if self.pos < 0:
            raise ValueError("op position must be non-negative")

    @property
    def kind(self) -> str:
        if self.src == "":
            return INSERTION
        if self.dst == "":
            return DELETION
        return SUBSTITUTION

    def __str__(self):
        a = self.src or "-"
        b = self.dst or "-"
        return f"{a}>{b}@{self.pos}"


def op_sort_key(op: EditOp, eps_code: int, code) -> tuple:
    """Deterministic ordering key: position, then kind, then target symbol."""
    dst = eps_code if op.dst == "" else code(op.dst)
    return (op.pos, _KIND_RANK[op.kind], dst)


@dataclass(frozen=True)
class EditScript:
    """An ordered list of edits turning ``source`` into ``target``.

    Ops are stored in alignment order (non-decreasing source position) and
    ``total_cost`` equals the sum of the op costs, which for a canonical
    script is the edit distance.
    """

    source: str
    target: str
    ops: tuple[EditOp, ...]
    total_cost: float

    def __len__(self):
        return len(self.ops)


def _check_strings(model: CostModel, *strings: str) -> None:
    for s in strings:
        model.alphabet.validate_string(s)


def distance(s1: str, s2: str, model: CostModel, counter: OpCounter | None = None) -> float:
    """Weighted edit distance between two strings."""
    _check_strings(model, s1, s2)
    a = model.alphabet.encode(s1)
    b = model.alphabet.encode(s2)
    if counter is not None:
        counter.add_distance((len(s1) + 1) * (len(s2) + 1))
    return float(_dp.dp_cost(a, b, model.costs))


def distance_with_script(
    s1: str, s2: str, model: CostModel, counter: OpCounter | None = None
) -> tuple[float, EditScript]:
    """Distance plus the canonical optimal edit script from ``s1`` to ``s2``."""
    _check_strings(model, s1, s2)
    a = model.alphabet.encode(s1)
    b = model.alphabet.encode(s2)
    if counter is not None:
        counter.add_distance((len(s1) + 1) * (len(s2) + 1))
    D = _dp.dp_matrix(a, b, model.costs)
    costs = model.costs
    eps = model.eps_code
    tol = model.tolerance
    ops: list[EditOp] = []
    i, j = len(s1), len(s2)
    while i > 0 or j > 0:
        here = D[i, j]
        if i > 0 and j > 0:
            step = costs[a[i - 1], b[j - 1]]
            if abs(here - (D[i - 1, j - 1] + step)) <= tol:
                if a[i - 1] != b[j - 1] or step != 0.0:
                    ops.append(EditOp(i - 1, s1[i - 1], s2[j - 1]))
                i -= 1
                j -= 1
                continue
        if i > 0 and abs(here - (D[i - 1, j] + costs[a[i - 1], eps])) <= tol:
            ops.append(EditOp(i - 1, s1[i - 1], ""))
            i -= 1
            continue
        if j > 0 and abs(here - (D[i, j - 1] + costs[eps, b[j - 1]])) <= tol:
            ops.append(EditOp(i, "", s2[j - 1]))
            j -= 1
            continue
        raise AssertionError("traceback lost the optimal path (tolerance too tight?)")
    ops.reverse()
    dist = float(D[len(s1), len(s2)])
    return dist, EditScript(s1, s2, tuple(ops), dist)


def apply_op(s: str, op: EditOp) -> str:
    """Apply one edit to a string, returning the edited copy."""
    kind = op.kind
    if kind == INSERTION:
        if op.pos > len(s):
            raise ValueError(f"insertion gap {op.pos} is outside {s!r}")
        return s[: op.pos] + op.dst + s[op.pos :]
    if op.pos >= len(s):
        raise ValueError(f"position {op.pos} is outside {s!r}")
    if s[op.pos] != op.src:
        raise ValueError(
            f"op expects {op.src!r} at position {op.pos} but {s!r} has {s[op.pos]!r}"
        )
    if kind == DELETION:
        return s[: op.pos] + s[op.pos + 1 :]
    return s[: op.pos] + op.dst + s[op.pos + 1 :]


def apply_script(s: str, script: EditScript) -> str:
    """Apply a whole script to ``s``, which must equal the script's source.

    Ops are applied right to left so that source coordinates never shift.
    The result is checked against the script's declared target.
    """
    if s != script.source:
        raise ValueError("script source does not match the given string")
    last = None
    for op in script.ops:
        if last is not None and op.pos < last:
            raise ValueError("script ops must be in non-decreasing position order")
        last = op.pos
    out = s
    for op in reversed(script.ops):
        out = apply_op(out, op)
    if out != script.target:
        raise ValueError(
            f"script is inconsistent: produced {out!r}, declared {script.target!r}"
        )
    return out
