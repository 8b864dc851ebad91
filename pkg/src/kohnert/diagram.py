"""Diagrams in matrix convention and the shape predicates used everywhere else.

A diagram is a finite set of cells ``(row, col)`` with both coordinates
positive; row 1 is the top row.  Weak compositions are plain tuples of
nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, PreconditionError

Cell = tuple[int, int]
WeakComposition = tuple[int, ...]


class Diagram:
    """Immutable set of cells.

    Equality and hashing are set-based; iteration is always in sorted
    ``(row, col)`` order so nothing downstream depends on insertion order.
    """

    __slots__ = ("_cells", "_hash")

    def __init__(self, cells: Iterable[Cell] = ()):
        fs = frozenset((int(r), int(c)) for r, c in cells)
        for r, c in fs:
            if r < 1 or c < 1:
                raise ValueError(f"cell {(r, c)} has a coordinate below 1")
        self._cells = fs
        self._hash = hash(fs)

    @classmethod
    def _wrap(cls, cells: frozenset) -> "Diagram":
        # trusted constructor for hot loops; cells already validated
        obj = cls.__new__(cls)
        obj._cells = cells
        obj._hash = hash(cells)
        return obj

    @property
    def cells(self) -> frozenset[Cell]:
        return self._cells

    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self._cells))

    def __contains__(self, cell: object) -> bool:
        return cell in self._cells

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._cells)

    def __repr__(self) -> str:
        return f"Diagram({sorted(self._cells)!r})"

    def __lt__(self, other: "Diagram") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def max_row(self) -> int:
        return max((r for r, _ in self._cells), default=0)

    @property
    def max_col(self) -> int:
        return max((c for _, c in self._cells), default=0)

    def row(self, r: int) -> tuple[int, ...]:
        """Occupied columns of row ``r``, ascending."""
        return tuple(sorted(c for rr, c in self._cells if rr == r))

    def column(self, c: int) -> tuple[int, ...]:
        """Occupied rows of column ``c``, ascending (top to bottom)."""
        return tuple(sorted(r for r, cc in self._cells if cc == c))

    def occupied_columns(self) -> tuple[int, ...]:
        return tuple(sorted({c for _, c in self._cells}))

    def sort_key(self) -> tuple:
        return (weight(self), tuple(sorted(self._cells)))

    def with_cells(self, remove: Iterable[Cell] = (), add: Iterable[Cell] = ()) -> "Diagram":
        return Diagram((self._cells - frozenset(remove)) | frozenset(add))

    def restrict_columns(self, lo: int = 1, hi: int | None = None) -> "Diagram":
        """Cells with ``lo <= col <= hi``."""
        return Diagram._wrap(
            frozenset((r, c) for r, c in self._cells if c >= lo and (hi is None or c <= hi))
        )

    def shift_columns(self, delta: int) -> "Diagram":
        return Diagram((r, c + delta) for r, c in self._cells)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def parse_diagram(text: str) -> Diagram:
    """Parse a grid over ``.``/``#`` (row 1 first) or a list of ``r,c`` pairs.

    Coordinate pairs may be separated by newlines or whitespace.  Any line
    containing a comma switches the parser to coordinate mode.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        return Diagram()
    if any("," in line for line in lines):
        return _parse_coordinates(lines)
    cells = []
    for lineno, line in enumerate(lines, start=1):
        for col, ch in enumerate(line.strip(), start=1):
            if ch == "#":
                cells.append((lineno, col))
            elif ch != ".":
                raise ParseError(f"unexpected character {ch!r} in grid row", lineno)
    return Diagram(cells)


def _parse_coordinates(lines: Sequence[str]) -> Diagram:
    cells = []
    for lineno, line in enumerate(lines, start=1):
        for token in line.split():
            parts = token.split(",")
            if len(parts) != 2:
                raise ParseError(f"expected 'row,col', got {token!r}", lineno)
            try:
                r, c = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer coordinate in {token!r}", lineno) from None
            if r < 1 or c < 1:
                raise ParseError(f"coordinates must be positive, got {token!r}", lineno)
            cells.append((r, c))
    return Diagram(cells)


def render_grid(D: Diagram) -> str:
    """Canonical grid text; inverse of :func:`parse_diagram`."""
    if not D:
        return ""
    width = D.max_col
    rows = []
    for r in range(1, D.max_row + 1):
        rows.append("".join("#" if (r, c) in D else "." for c in range(1, width + 1)))
    return "\n".join(rows)


def parse_composition(text: str) -> WeakComposition:
    try:
        parts = tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
    except ValueError:
        raise ParseError(f"invalid weak composition {text!r}") from None
    if any(p < 0 for p in parts):
        raise ParseError(f"weak composition has a negative part: {text!r}")
    return parts


# ---------------------------------------------------------------------------
# weights and predicates
# ---------------------------------------------------------------------------


def weight(D: Diagram) -> WeakComposition:
    """Row counts; length is the lowest occupied row (0 for the empty diagram)."""
    out = [0] * D.max_row
    for r, _ in D.cells:
        out[r - 1] += 1
    return tuple(out)


def column_weight(D: Diagram) -> WeakComposition:
    out = [0] * D.max_col
    for _, c in D.cells:
        out[c - 1] += 1
    return tuple(out)


def pad(a: Sequence[int], n: int) -> WeakComposition:
    """Zero-pad ``a`` to length ``n`` (never truncates nonzero parts)."""
    a = tuple(a)
    if len(a) > n:
        if any(a[n:]):
            raise ValueError(f"cannot shorten {a} to length {n}")
        return a[:n]
    return a + (0,) * (n - len(a))


def _violations(D: Diagram) -> Iterator[tuple[Cell, Cell]]:
    # pairs (j,k), (i,l) with i < j and k < l
    cells = D.cells
    for (j, k), (i, l) in combinations(sorted(cells), 2):
        for lower, upper in (((j, k), (i, l)), ((i, l), (j, k))):
            (jj, kk), (ii, ll) = lower, upper
            if ii < jj and kk < ll:
                yield lower, upper


def is_northwest(D: Diagram) -> bool:
    cells = D.cells
    for (j, k), (i, _l) in _violations(D):
        if (i, k) not in cells:
            return False
    return True


def is_percent_avoiding(D: Diagram) -> bool:
    cells = D.cells
    for (j, k), (i, l) in _violations(D):
        if (i, k) not in cells and (j, l) not in cells:
            return False
    return True


# ---------------------------------------------------------------------------
# constructors and row operations
# ---------------------------------------------------------------------------


def key_diagram(a: Sequence[int]) -> Diagram:
    """Left-justified diagram with ``a[i-1]`` cells in row ``i``."""
    return Diagram((i, j) for i, ai in enumerate(a, start=1) for j in range(1, ai + 1))


def tower(k: int, col: int = 1) -> Diagram:
    """Rows ``1..k`` of a single column."""
    return Diagram((i, col) for i in range(1, k + 1))


def rothe_diagram(w: "Permutation | Sequence[int]") -> Diagram:
    if not isinstance(w, Permutation):
        w = Permutation(tuple(w))
    winv = w.inverse().one_line
    n = len(w.one_line)
    return Diagram(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if w.one_line[i - 1] > j and winv[j - 1] > i
    )


def swap_rows(D: Diagram, r: int) -> Diagram:
    """Exchange the contents of rows ``r`` and ``r+1``."""
    if r < 1:
        raise PreconditionError(f"row index must be positive, got {r}")
    swap = {r: r + 1, r + 1: r}
    return Diagram._wrap(frozenset((swap.get(i, i), c) for i, c in D.cells))


def row_subset(D: Diagram, r: int) -> bool:
    """Whether every occupied column of row ``r`` is also occupied in row ``r+1``."""
    if r < 1:
        raise PreconditionError(f"row index must be positive, got {r}")
    below = set(D.row(r + 1))
    return all(c in below for c in D.row(r))


def first_column_tower(D: Diagram) -> int | None:
    """``k`` if the leftmost occupied column is exactly rows ``1..k``."""
    if not D:
        raise PreconditionError("first_column_tower needs a nonempty diagram")
    c = D.occupied_columns()[0]
    rows = D.column(c)
    if rows == tuple(range(1, len(rows) + 1)):
        return len(rows)
    return None


def add_alpha(a: Sequence[int], r: int, s: int, m: int = 1) -> WeakComposition:
    """``a + m * alpha_{r,s}``: move ``m`` units from part ``s`` to part ``r``."""
    if not 1 <= r < s:
        raise PreconditionError(f"need 1 <= r < s, got r={r}, s={s}")
    out = list(pad(a, max(len(a), s)))
    out[r - 1] += m
    out[s - 1] -= m
    if min(out) < 0:
        raise PreconditionError(f"{tuple(a)} + {m}*alpha_({r},{s}) has a negative entry")
    return tuple(out)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """Permutation of ``1..n`` in one-line notation."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(int(x) for x in self.one_line))
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise ValueError(f"{self.one_line} is not a permutation of 1..n")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(p) for p in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int | None = None) -> "Permutation":
        """Permutation named by ``s_{word[0]} ... s_{word[-1]}``.

        Convention: start from the identity and, reading the word left to
        right, exchange the values ``i`` and ``i+1`` for each letter ``i``.
        With it, ``[1, 2, 3, 1]`` gives ``4213``, and the permutation sorting
        ``a`` to ``lambda`` satisfies ``a[i] = lambda[w(i)]``.
        """
        if n is None:
            n = max(word, default=0) + 1
        vals = list(range(1, n + 1))
        for i in word:
            vals = [i + 1 if v == i else i if v == i + 1 else v for v in vals]
        return cls(tuple(vals))

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.one_line)
        for i, wi in enumerate(self.one_line, start=1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        w = self.one_line
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def __str__(self) -> str:
        if len(self.one_line) < 10:
            return "".join(map(str, self.one_line))
        return ",".join(map(str, self.one_line))
