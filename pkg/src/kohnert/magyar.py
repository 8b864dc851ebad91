"""Characters of flagged Schur modules of northwest diagrams by Magyar's recurrence.

The recurrence has three rules:

* ``M1``: the empty diagram has character 1;
* ``M2``: if the first column is the tower ``C_k``, peel it off and multiply
  by ``x_1 ... x_k``;
* ``M3``: if row ``r`` is contained in row ``r+1``, the character is
  ``pi_r`` of the character of ``s_r D``.

It does not say which rule to use when.  The strategy here: peel a tower if
the leftmost occupied column is one, otherwise lift the topmost gap of that
column with ``M3``.  For a northwest diagram the row just above that gap is
empty, so ``M3`` applies and the sum of row indices drops.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import Diagram, first_column_tower, is_northwest, render_grid, swap_rows
from .errors import PreconditionError, StructuralError
from .poly import Polynomial, demazure_pi


@dataclass(frozen=True)
class Step:
    """One rule application; ``param`` is ``k`` for M2, ``r`` for M3 and ``None`` for M1."""

    rule: str
    param: int | None
    diagram: Diagram

    def __str__(self) -> str:
        if self.rule == "M1":
            return "M1"
        name = "k" if self.rule == "M2" else "r"
        return f"{self.rule}({name}={self.param})"


def _next_step(D: Diagram) -> tuple[str, int | None, Diagram]:
    """Choose the rule for ``D`` and return ``(rule, param, reduced diagram)``."""
    if not D:
        return "M1", None, D
    k = first_column_tower(D)
    c = D.occupied_columns()[0]
    if k is not None:
        rest = Diagram._wrap(frozenset(cell for cell in D.cells if cell[1] != c))
        return "M2", k, rest
    rows = set(D.column(c))
    t = min(t for t in rows if t >= 2 and t - 1 not in rows)
    r = t - 1
    if D.row(r):
        raise StructuralError(f"row {r} should be empty when lifting column {c}")
    return "M3", r, swap_rows(D, r)


def reduction_trace(D: Diagram) -> list[Step]:
    """The rule applications made by :func:`magyar_character`, outermost first.

    Each step carries the diagram it was applied to.
    """
    if not is_northwest(D):
        raise PreconditionError("Magyar's recurrence is only used for northwest diagrams")
    steps = []
    while True:
        rule, param, nxt = _next_step(D)
        steps.append(Step(rule, param, D))
        if rule == "M1":
            return steps
        D = nxt


@lru_cache(maxsize=20000)
def _character(D: Diagram) -> Polynomial:
    rule, param, nxt = _next_step(D)
    if rule == "M1":
        return Polynomial.one()
    if rule == "M2":
        return Polynomial.x_product(param) * _character(nxt)
    return demazure_pi(_character(nxt), param)


def magyar_character(D: Diagram) -> Polynomial:
    if not is_northwest(D):
        raise PreconditionError("Magyar's recurrence is only used for northwest diagrams")
    return _character(D).widen(D.max_row)


def format_trace(steps: list[Step]) -> str:
    """Text rendering: each diagram followed by the rule that reduces it."""
    blocks = []
    for step in steps:
        grid = render_grid(step.diagram) or "(empty)"
        blocks.append(f"{grid}\n  -> {step}")
    return "\n".join(blocks)
