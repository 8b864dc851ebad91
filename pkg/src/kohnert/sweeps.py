"""Exhaustive enumerations of small diagrams and the cross-checks run over them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .closure import kohnert_closure, kohnert_polynomial
from .diagram import Diagram, is_northwest, is_percent_avoiding
from .errors import ScaleGuardError
from .magyar import magyar_character
from .schur import MAX_CELLS, MAX_ROWS, flagged_character


def diagrams_in_box(rows: int, cols: int, max_cells: int) -> Iterator[Diagram]:
    """Every diagram inside ``rows x cols`` with at most ``max_cells`` cells, by size."""
    cells = [(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    for k in range(min(max_cells, len(cells)) + 1):
        for chosen in combinations(cells, k):
            yield Diagram._wrap(frozenset(chosen))


def northwest_diagrams(rows: int, cols: int, max_cells: int) -> Iterator[Diagram]:
    return (D for D in diagrams_in_box(rows, cols, max_cells) if is_northwest(D))


def tight_candidates(rows: int, cols: int, max_cells: int) -> Iterator[Diagram]:
    """%-avoiding diagrams that are not northwest."""
    return (
        D
        for D in diagrams_in_box(rows, cols, max_cells)
        if is_percent_avoiding(D) and not is_northwest(D)
    )


@dataclass
class Verification:
    diagram: Diagram
    closure_size: int
    kohnert: object
    magyar: object
    oracle: object = None
    oracle_skipped: str | None = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def oracle_in_range(D: Diagram) -> bool:
    return len(D) <= MAX_CELLS and D.max_row <= MAX_ROWS


def verify_diagram(D: Diagram, with_oracle: bool = True) -> Verification:
    """Compare the Kohnert polynomial, Magyar's recurrence and (in range) the module oracle."""
    K = kohnert_polynomial(D)
    M = magyar_character(D)
    out = Verification(D, len(kohnert_closure(D)), K, M)
    if K != M:
        out.mismatches.append("kohnert != magyar")
    if with_oracle:
        if oracle_in_range(D):
            try:
                out.oracle = flagged_character(D)
            except ScaleGuardError as exc:
                out.oracle_skipped = str(exc)
            else:
                if out.oracle != K:
                    out.mismatches.append("kohnert != oracle")
        else:
            out.oracle_skipped = "outside oracle limits"
    return out


def sweep(rows: int, cols: int, max_cells: int, with_oracle: bool = True) -> list[Verification]:
    return [verify_diagram(D, with_oracle) for D in northwest_diagrams(rows, cols, max_cells)]
