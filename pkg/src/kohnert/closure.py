"""Kohnert moves, the closure KD(D), Kohnert polynomials and the move poset."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .diagram import Diagram, weight, pad
from .poly import Exponent, Polynomial


def _move(cells: frozenset, r: int) -> frozenset | None:
    cols = [c for rr, c in cells if rr == r]
    if not cols:
        return None
    c = max(cols)
    for target in range(r - 1, 0, -1):
        if (target, c) not in cells:
            return (cells - {(r, c)}) | {(target, c)}
    return None


def apply_kohnert_move(D: Diagram, r: int) -> Diagram | None:
    """Move the rightmost cell of row ``r`` to the lowest vacancy above it.

    Returns ``None`` when row ``r`` is empty or its rightmost cell has no
    vacancy anywhere above it in its column.
    """
    moved = _move(D.cells, r)
    return None if moved is None else Diagram._wrap(moved)


def kohnert_moves(D: Diagram) -> list[tuple[int, Diagram]]:
    out = []
    seen = set()
    for r in sorted({r for r, _ in D.cells}):
        moved = _move(D.cells, r)
        if moved is not None and moved not in seen:
            seen.add(moved)
            out.append((r, Diagram._wrap(moved)))
    return out


@dataclass(frozen=True)
class DiagramSet:
    """Deduplicated, canonically ordered set of diagrams generated from ``origin``."""

    origin: Diagram
    members: tuple[Diagram, ...]
    _index: frozenset = field(repr=False, compare=False)

    def __contains__(self, D: object) -> bool:
        return D in self._index

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Diagram]:
        return iter(self.members)

    def as_set(self) -> frozenset[Diagram]:
        return self._index

    def is_closed(self) -> bool:
        """Every Kohnert move from a member lands on a member."""
        return all(T in self._index for S in self.members for _, T in kohnert_moves(S))


def _closure_cells(origin: frozenset) -> set[frozenset]:
    seen = {origin}
    queue = deque([origin])
    while queue:
        cells = queue.popleft()
        for r in {r for r, _ in cells}:
            moved = _move(cells, r)
            if moved is not None and moved not in seen:
                seen.add(moved)
                queue.append(moved)
    return seen


@lru_cache(maxsize=20000)
def kohnert_closure(D: Diagram) -> DiagramSet:
    """All diagrams reachable from ``D`` by Kohnert moves, ``D`` included."""
    members = sorted((Diagram._wrap(cells) for cells in _closure_cells(D.cells)), key=Diagram.sort_key)
    return DiagramSet(D, tuple(members), frozenset(members))


def character(diagrams, n: int | None = None) -> Polynomial:
    """Sum of ``x^wt(T)`` over a collection of diagrams."""
    diagrams = list(diagrams)
    if n is None:
        n = max((T.max_row for T in diagrams), default=0)
    terms: dict[Exponent, int] = {}
    for T in diagrams:
        e = pad(weight(T), n)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(terms, n=n)


def kohnert_polynomial(D: Diagram) -> Polynomial:
    """Generating polynomial of row weights over KD(D); the empty diagram gives 1."""
    return character(kohnert_closure(D).members, n=D.max_row)


def poset_edges(D: Diagram) -> list[tuple[Diagram, Diagram]]:
    """Covering pairs ``(S, T)`` inside KD(D) where ``T`` is one move from ``S``."""
    edges = []
    for S in kohnert_closure(D).members:
        for _, T in kohnert_moves(S):
            edges.append((S, T))
    return edges
