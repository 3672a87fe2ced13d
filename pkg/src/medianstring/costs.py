"""Weighted edit-cost models.

A cost model is an ``(n+1) x (n+1)`` matrix over an alphabet of ``n`` symbols
plus the empty symbol in the last row/column.  Entry ``[a, b]`` is the cost of
rewriting symbol ``a`` into symbol ``b``; row ``eps`` prices insertions and
column ``eps`` prices deletions.  The ``(eps, eps)`` entry is meaningless and
pinned to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .alphabet import Alphabet

# Violation kinds reported by validate_cost_model.
NEGATIVE = "negative"
NONZERO_DIAGONAL = "nonzero_diagonal"
ASYMMETRIC = "asymmetric"
TRIANGLE = "triangle"


@dataclass
class CostModel:
    """An edit-cost matrix bound to its alphabet.

    ``metric_validated`` is set by :meth:`validate` when the matrix passes
    every metric check; a few identities (see the refinement engine) are only
    guaranteed for validated models.
    """

    alphabet: Alphabet
    costs: np.ndarray
    metric_validated: bool = False
    _integer_valued: bool = field(init=False, repr=False)

    def __post_init__(self):
        n = self.alphabet.size + 1
        mat = np.asarray(self.costs, dtype=np.float64)
        if mat.shape != (n, n):
            raise ValueError(
                f"cost matrix must be {n}x{n} for this alphabet, got {mat.shape}"
            )
        if not np.all(np.isfinite(mat)):
            raise ValueError("cost matrix entries must be finite")
        mat = mat.copy()
        mat[n - 1, n - 1] = 0.0
        if np.any(mat < 0.0):
            raise ValueError("cost matrix entries must be non-negative")
        self.costs = mat
        self._integer_valued = bool(np.all(mat == np.floor(mat)))

    def cost(self, a: str, b: str) -> float:
        """Cost of rewriting symbol ``a`` into ``b`` ("" is the empty symbol)."""
        return float(self.costs[self.alphabet.code(a), self.alphabet.code(b)])

    @property
    def eps_code(self) -> int:
        return self.alphabet.eps_code

    @property
    def tolerance(self) -> float:
        """Comparison tolerance: exact for integer tables, 1e-9 otherwise."""
        return 0.0 if self._integer_valued else 1e-9

    def validate(self) -> list[tuple]:
        """Run the metric checks, record the outcome, return the violations."""
        violations = validate_cost_model(self)
        self.metric_validated = not violations
        return violations

    def scaled(self, factor: float) -> "CostModel":
        """A copy with every cost multiplied by a positive factor."""
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return CostModel(self.alphabet, self.costs * factor, self.metric_validated)


def validate_cost_model(model: CostModel) -> list[tuple]:
    """Check a cost model for metric behaviour.

    Returns a list of violation tuples, empty when the model is a metric:

    - ``(NEGATIVE, a, b)``: entry below zero,
    - ``(NONZERO_DIAGONAL, a)``: a symbol costs something to keep,
    - ``(ASYMMETRIC, a, b)``: ``cost[a][b] != cost[b][a]``,
    - ``(TRIANGLE, a, b, c)``: ``cost[a][c] > cost[a][b] + cost[b][c]``.

    Indices are symbol codes; the empty symbol appears as the last code.
    """
    mat = model.costs
    n = mat.shape[0]
    eps = n - 1
    out: list[tuple] = []
    for a in range(n):
        for b in range(n):
            if mat[a, b] < 0.0:
                out.append((NEGATIVE, a, b))
    for a in range(n - 1):
        if mat[a, a] != 0.0:
            out.append((NONZERO_DIAGONAL, a))
    for a in range(n):
        for b in range(a + 1, n):
            if mat[a, b] != mat[b, a]:
                out.append((ASYMMETRIC, a, b))
    # Direct rewrites must never cost more than a detour through a third
    # symbol; the empty symbol takes part (a->eps->c bounds substitutions).
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if a == b or b == c:
                    continue
                if a == eps and c == eps:
                    continue
                if mat[a, c] > mat[a, b] + mat[b, c]:
                    out.append((TRIANGLE, a, b, c))
    return out


def unit_costs(alphabet: Alphabet) -> CostModel:
    """The classic model: every change costs 1, keeping a symbol costs 0."""
    n = alphabet.size + 1
    mat = np.ones((n, n), dtype=np.float64)
    np.fill_diagonal(mat, 0.0)
    model = CostModel(alphabet, mat)
    model.validate()
    return model


def ring_costs(alphabet: Alphabet) -> CostModel:
    """Circular difference costs for direction-like alphabets.

    Symbols are treated as points on a ring in alphabet order; substituting
    one for another costs the shorter arc between them, and inserting or
    deleting costs half the longest arc (rounded up).  This is a metric and
    gives nearby directions a discount, which is the natural model for
    contour chain codes.
    """
    k = alphabet.size
    if k < 2:
        raise ValueError("ring costs need at least two symbols")
    n = k + 1
    mat = np.zeros((n, n), dtype=np.float64)
    for a in range(k):
        for b in range(k):
            d = abs(a - b)
            mat[a, b] = min(d, k - d)
    indel = (k // 2 + 1) // 2
    mat[:k, k] = indel
    mat[k, :k] = indel
    model = CostModel(alphabet, mat)
    violations = model.validate()
    if violations:
        raise AssertionError(f"ring cost construction broke metricity: {violations}")
    return model
