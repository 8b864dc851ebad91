"""Kohnert labelings, Kohnert tableaux and rectification.

Membership in ``KD(D)`` can be decided without enumerating the closure: label
the cells of a candidate column by column, right to left, and check that no
label is smaller than its row.  For left-justified ``D`` the labeling is
driven by a weak composition; for northwest ``D`` it is driven by the
rectification of the already-labeled suffix.

Rectification is the column analogue of the Kohnert raising operators.  A
cell in column ``i+1`` is column-paired with a cell of column ``i`` in the
same row or below it; ``rect_i`` slides the topmost unpaired column-``i+1``
cell one step left.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .crystal import Pairing, _bracket
from .diagram import Cell, Diagram, WeakComposition, column_weight, is_northwest, key_diagram, pad
from .errors import PreconditionError


@dataclass(frozen=True)
class LabeledDiagram:
    """Cells with positive integer labels, stored as a sorted tuple."""

    entries: tuple[tuple[Cell, int], ...]

    def __init__(self, labels: Mapping[Cell, int] | Iterable[tuple[Cell, int]]):
        items = labels.items() if isinstance(labels, Mapping) else labels
        entries = tuple(sorted(((int(r), int(c)), int(v)) for (r, c), v in items))
        for (r, c), v in entries:
            if r < 1 or c < 1 or v < 1:
                raise ValueError(f"bad labeled cell {(r, c)} -> {v}")
        if len({cell for cell, _ in entries}) != len(entries):
            raise ValueError("a cell carries two labels")
        object.__setattr__(self, "entries", entries)

    @property
    def diagram(self) -> Diagram:
        return Diagram(cell for cell, _ in self.entries)

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def label(self, cell: Cell) -> int | None:
        return self.as_dict().get(cell)

    def column(self, c: int) -> list[tuple[int, int]]:
        """``(row, label)`` pairs of column ``c``, top to bottom."""
        return [(r, v) for (r, cc), v in self.entries if cc == c]

    def content(self, n: int | None = None) -> WeakComposition:
        counts = Counter(v for _, v in self.entries)
        if n is None:
            n = max(counts, default=0)
        return tuple(counts.get(i, 0) for i in range(1, n + 1))

    def to_json(self) -> dict:
        return {"cells": [{"r": r, "c": c, "label": v} for (r, c), v in self.entries]}

    def render(self) -> str:
        """Grid with the label in each cell and ``.`` elsewhere; labels above 9 are bracketed."""
        d = self.as_dict()
        if not d:
            return ""
        rows = max(r for r, _ in d)
        cols = max(c for _, c in d)
        lines = []
        for r in range(1, rows + 1):
            chunks = []
            for c in range(1, cols + 1):
                v = d.get((r, c))
                chunks.append("." if v is None else (str(v) if v < 10 else f"[{v}]"))
            lines.append("".join(chunks))
        return "\n".join(lines)


def _same_column_weight(T: Diagram, D: Diagram) -> bool:
    w1, w2 = column_weight(T), column_weight(D)
    n = max(len(w1), len(w2))
    return pad(w1, n) == pad(w2, n)


# ---------------------------------------------------------------------------
# left-justified labeling
# ---------------------------------------------------------------------------


def label_left(T: Diagram, a: Sequence[int]) -> LabeledDiagram | None:
    """Labeling of ``T`` with respect to the key diagram of ``a``.

    Columns are handled right to left.  Column ``c`` receives the labels
    ``{i : a_i >= c}``; its cells are visited top to bottom and each takes the
    smallest remaining label ``i`` whose copy in column ``c+1`` (if any) is
    in the same row or higher.  Returns ``None`` when some cell has no
    admissible label.
    """
    a = tuple(a)
    if not _same_column_weight(T, key_diagram(a)):
        raise PreconditionError("label_left needs T and the key diagram of a to share column weights")
    labels: dict[Cell, int] = {}
    prev: dict[int, int] = {}  # label -> row in column c+1
    for c in range(T.max_col, 0, -1):
        avail = sorted(i for i, ai in enumerate(a, start=1) if ai >= c)
        here: dict[int, int] = {}
        for r in T.column(c):
            choice = next((i for i in avail if i not in prev or prev[i] <= r), None)
            if choice is None:
                return None
            avail.remove(choice)
            labels[(r, c)] = choice
            here[choice] = r
        prev = here
    return LabeledDiagram(labels)


def is_flagged(L: LabeledDiagram) -> bool:
    """No label is smaller than the index of its row."""
    return all(v >= r for (r, _), v in L.entries)


def is_kohnert_tableau(L: LabeledDiagram, a: Sequence[int]) -> bool:
    a = tuple(a)
    pos: dict[int, dict[int, int]] = {}  # label -> column -> row
    for (r, c), v in L.entries:
        if v > len(a):
            return False
        cols = pos.setdefault(v, {})
        if c in cols:
            return False
        cols[c] = r
    # (i) one i in each of the columns 1..a_i and nowhere else
    for i, ai in enumerate(a, start=1):
        if set(pos.get(i, {})) != set(range(1, ai + 1)):
            return False
    # (ii)
    if not is_flagged(L):
        return False
    # (iii) rows weakly decrease as the column index grows
    for cols in pos.values():
        for c, r in cols.items():
            if c + 1 in cols and cols[c + 1] > r:
                return False
    # (iv)
    by_col: dict[int, list[tuple[int, int]]] = {}
    for (r, c), v in L.entries:
        by_col.setdefault(c, []).append((r, v))
    for c, items in by_col.items():
        for ri, i in items:
            for rj, j in items:
                if i < j and ri > rj:
                    nxt = pos[i].get(c + 1)
                    if nxt is None or nxt <= rj:
                        return False
    return True


def member_left(T: Diagram, a: Sequence[int]) -> bool:
    """``T in KD(key_diagram(a))`` decided through the labeling."""
    if not _same_column_weight(T, key_diagram(a)):
        return False
    L = label_left(T, a)
    return L is not None and is_flagged(L)


# ---------------------------------------------------------------------------
# rectification
# ---------------------------------------------------------------------------


def column_pair(T: Diagram, i: int) -> Pairing:
    """Column ``i``-pairing: column-``i+1`` cells match column-``i`` cells in the same row or below.

    Scan rows from the bottom up, a column-``i`` cell before the column-``i+1``
    cell of the same row.  Unpaired column-``i+1`` cells are listed bottom to
    top in ``unpaired_closers``.
    """
    if i < 1:
        raise PreconditionError(f"column index must be positive, got {i}")
    seq = sorted(
        ((-r, 0 if c == i else 1), (r, c))
        for r, c in T.cells
        if c == i or c == i + 1
    )
    return _bracket(((r, c), c == i) for _, (r, c) in seq)


def rect_step(T: Diagram, i: int) -> Diagram:
    """Slide the topmost unpaired column-``i+1`` cell into column ``i``; identity if none."""
    free = column_pair(T, i).unpaired_closers
    if not free:
        return T
    r, c = free[-1]
    return Diagram._wrap((T.cells - {(r, c)}) | {(r, i)})


def is_rectified(T: Diagram) -> bool:
    return all(not column_pair(T, i).unpaired_closers for i in range(1, T.max_col))


def rectify(T: Diagram, choose: Callable[[list[int]], int] | None = None) -> Diagram:
    """Apply ``rect_i`` until nothing moves.

    ``choose`` picks which active operator fires next (default: the
    smallest ``i``); the result does not depend on it.
    """
    while True:
        active = [i for i in range(1, T.max_col) if column_pair(T, i).unpaired_closers]
        if not active:
            return T
        T = rect_step(T, active[0] if choose is None else choose(active))


def _rect_labels_step(labels: dict[Cell, int], i: int) -> bool:
    """One ``rect_i`` on a labeled diagram, in place; returns whether anything moved.

    The moving cell ``x`` normally keeps its label.  If column ``i`` has a
    cell ``y`` paired with some ``z`` in column ``i+1`` such that
    ``L(y) <= L(x) < L(z)``, then ``x`` first swaps labels with the ``z``
    of largest label, so no column ends up with a repeated label.
    """
    p = column_pair(Diagram._wrap(frozenset(labels)), i)
    if not p.unpaired_closers:
        return False
    x = p.unpaired_closers[-1]
    lx = labels[x]
    swaps = [(labels[z], z) for z, y in p.pairs if labels[y] <= lx < labels[z]]
    if swaps:
        _, z = max(swaps)
        labels[x], labels[z] = labels[z], lx
    labels[(x[0], i)] = labels.pop(x)
    return True


def _rectify_labels(labels: dict[Cell, int]) -> dict[Cell, int]:
    labels = dict(labels)
    while True:
        width = max((c for _, c in labels), default=0)
        if not any(_rect_labels_step(labels, i) for i in range(1, width)):
            return labels


def rectify_labeled(L: LabeledDiagram) -> LabeledDiagram:
    """Rectify a labeled diagram, carrying labels along with the swap rule above."""
    return LabeledDiagram(_rectify_labels(L.as_dict()))


# ---------------------------------------------------------------------------
# northwest labeling
# ---------------------------------------------------------------------------


def _suffix_anchor(labels: dict[Cell, int], c: int) -> dict[int, int]:
    """Row of each label in the first column of the rectified suffix right of column ``c``."""
    suffix = {cell: v for cell, v in labels.items() if cell[1] > c}
    if not suffix:
        return {}
    shift = 1 - min(cc for _, cc in suffix)
    moved = _rectify_labels({(r, cc + shift): v for (r, cc), v in suffix.items()})
    return {v: r for (r, cc), v in moved.items() if cc == 1}


def label_northwest(T: Diagram, D: Diagram) -> LabeledDiagram | None:
    """Labeling of ``T`` with respect to a northwest diagram ``D``.

    For each column ``c`` from right to left, the labels ``{r : (r, c) in D}``
    are placed from smallest to largest.  Label ``r`` goes to the topmost
    unlabeled cell of column ``c`` lying in the same row as, or below, the
    cell labeled ``r`` in the first column of the rectified suffix
    ``T_{>c}`` (no constraint if that column has no ``r``).  The suffix is
    translated so its leftmost occupied column sits at ``c+1`` and rectified
    with its labels.  ``None`` means some label found no cell.
    """
    if not is_northwest(D):
        raise PreconditionError("label_northwest needs a northwest diagram D")
    if not _same_column_weight(T, D):
        raise PreconditionError("T and D must share column weights")
    labels: dict[Cell, int] = {}
    for c in range(T.max_col, 0, -1):
        wanted = D.column(c)
        if not wanted:
            continue
        anchor = _suffix_anchor(labels, c)
        free = list(T.column(c))
        for r in wanted:
            bound = anchor.get(r, 0)
            x = next((row for row in free if row >= bound), None)
            if x is None:
                return None
            free.remove(x)
            labels[(x, c)] = r
    return LabeledDiagram(labels)


def member_northwest(T: Diagram, D: Diagram) -> bool:
    """``T in KD(D)`` for northwest ``D``, decided through the labeling."""
    if not is_northwest(D):
        raise PreconditionError("member_northwest needs a northwest diagram D")
    if not _same_column_weight(T, D):
        return False
    L = label_northwest(T, D)
    return L is not None and is_flagged(L)
