"""Work counters for comparing algorithms on equal footing.

Wall time on a shared box is noisy, so the benchmark harness counts the
dominant unit operations instead: DP cells filled, distance evaluations,
statistics-table increments, and repercussion-accumulator increments.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass
class OpCounter:
    dp_cells: int = 0
    distance_evals: int = 0
    stat_updates: int = 0
    rep_updates: int = 0

    @property
    def total(self) -> int:
        """Combined work figure; distance_evals is a call count, not work."""
        return self.dp_cells + self.stat_updates + self.rep_updates

    def snapshot(self) -> "OpCounter":
        return replace(self)

    def add_distance(self, cells: int, evals: int = 1) -> None:
        self.dp_cells += cells
        self.distance_evals += evals
