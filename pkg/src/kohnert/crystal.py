"""Crystal operators on diagrams and on semistandard tableaux.

Both crystals share the same bracket-matching core: scan the relevant cells
in a fixed order, treat one kind as openers and the other as closers, and
match each closer with the nearest unmatched opener before it.  The raising
operator changes the last unmatched closer, the lowering operator the first
unmatched opener.

Tableaux use French convention: ``rows[0]`` is the bottom row, entries weakly
increase along rows and strictly increase up columns.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

from .closure import character, kohnert_closure
from .diagram import Cell, Diagram, WeakComposition, is_northwest, pad, weight
from .errors import PreconditionError, StructuralError
from .poly import Polynomial, key_expand, sorting_permutation


@dataclass(frozen=True)
class Pairing:
    """Result of ``i``-pairing.

    ``pairs`` holds ``(closer, opener)`` positions; ``unpaired_closers`` are
    the positions ``e_i`` may act on, ``unpaired_openers`` those ``f_i`` may
    act on, each in scan order.
    """

    pairs: tuple
    unpaired_openers: tuple
    unpaired_closers: tuple


def _bracket(sequence: Iterable[tuple[object, bool]]) -> Pairing:
    # sequence of (position, is_opener) in scan order
    stack: list = []
    pairs = []
    closers = []
    for pos, is_opener in sequence:
        if is_opener:
            stack.append(pos)
        elif stack:
            pairs.append((pos, stack.pop()))
        else:
            closers.append(pos)
    return Pairing(tuple(pairs), tuple(stack), tuple(closers))


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------


def pair_diagram(T: Diagram, i: int) -> Pairing:
    """``i``-pair cells of rows ``i`` (openers) and ``i+1`` (closers).

    Scan left to right by column, a row-``i`` cell before the row-``i+1``
    cell of the same column, so a closer may match an opener weakly left.
    """
    seq = sorted(
        ((c, 0 if r == i else 1), (r, c))
        for r, c in T.cells
        if r == i or r == i + 1
    )
    return _bracket(((r, c), r == i) for _, (r, c) in seq)


def raise_diagram(T: Diagram, i: int) -> Diagram | None:
    """Kohnert raising operator ``e_i``: rightmost unpaired row-``i+1`` cell goes up."""
    free = pair_diagram(T, i).unpaired_closers
    if not free:
        return None
    r, c = free[-1]
    return Diagram._wrap((T.cells - {(r, c)}) | {(i, c)})


def lower_diagram(T: Diagram, i: int) -> Diagram | None:
    """Kohnert lowering operator ``f_i``: leftmost unpaired row-``i`` cell goes down."""
    free = pair_diagram(T, i).unpaired_openers
    if not free:
        return None
    r, c = free[0]
    return Diagram._wrap((T.cells - {(r, c)}) | {(i + 1, c)})


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Tableau:
    """Semistandard tableau in French convention; ``rows[0]`` is the bottom row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        if not is_semistandard(rows):
            raise ValueError(f"not semistandard: {rows}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> list[tuple[Cell, int]]:
        """``((row, col), value)`` with row 1 at the bottom."""
        return [((k + 1, j + 1), v) for k, row in enumerate(self.rows) for j, v in enumerate(row)]

    def column_reading_positions(self) -> list[Cell]:
        """Columns left to right, each read from its top cell down."""
        width = len(self.rows[0]) if self.rows else 0
        out = []
        for j in range(width):
            height = sum(1 for row in self.rows if len(row) > j)
            out.extend((k + 1, j + 1) for k in reversed(range(height)))
        return out

    def value(self, cell: Cell) -> int:
        return self.rows[cell[0] - 1][cell[1] - 1]

    def replace(self, cell: Cell, v: int) -> "Tableau":
        rows = [list(r) for r in self.rows]
        rows[cell[0] - 1][cell[1] - 1] = v
        return Tableau(tuple(tuple(r) for r in rows))

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in reversed(self.rows))


def is_semistandard(rows: Sequence[Sequence[int]]) -> bool:
    for k, row in enumerate(rows):
        if any(v < 1 for v in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if k and len(row) > len(rows[k - 1]):
            return False
        if k and any(row[j] <= rows[k - 1][j] for j in range(len(row))):
            return False
    return True


def highest_weight_tableau(shape: Sequence[int]) -> Tableau:
    """``u_lambda``: row ``i`` filled with ``i``."""
    return Tableau(tuple((k + 1,) * p for k, p in enumerate(shape) if p))


def tableau_weight(T: Tableau, n: int | None = None) -> WeakComposition:
    values = [v for row in T.rows for v in row]
    if n is None:
        n = max(values, default=0)
    out = [0] * n
    for v in values:
        out[v - 1] += 1
    return tuple(out)


def ssyt(shape: Sequence[int], n: int) -> list[Tableau]:
    """All semistandard tableaux of ``shape`` with entries in ``1..n``."""
    shape = [p for p in shape if p]
    cells = [(k, j) for k, p in enumerate(shape) for j in range(p)]
    out: list[Tableau] = []
    grid = [[0] * p for p in shape]

    def fill(idx: int) -> None:
        if idx == len(cells):
            out.append(Tableau(tuple(tuple(r) for r in grid)))
            return
        k, j = cells[idx]
        lo = 1
        if j:
            lo = max(lo, grid[k][j - 1])
        if k:
            lo = max(lo, grid[k - 1][j] + 1)
        for v in range(lo, n + 1):
            grid[k][j] = v
            fill(idx + 1)
        grid[k][j] = 0

    fill(0)
    return sorted(out)


def pair_tableau(T: Tableau, i: int) -> Pairing:
    """``i``-pair entries ``i+1`` (openers) with entries ``i`` (closers) weakly right."""
    seq = []
    for cell in T.column_reading_positions():
        v = T.value(cell)
        if v == i + 1:
            seq.append((cell, True))
        elif v == i:
            seq.append((cell, False))
    return _bracket(seq)


def raise_tableau(T: Tableau, i: int) -> Tableau | None:
    """``e_i``: leftmost unpaired ``i+1`` becomes ``i``."""
    free = pair_tableau(T, i).unpaired_openers
    if not free:
        return None
    return T.replace(free[0], i)


def lower_tableau(T: Tableau, i: int) -> Tableau | None:
    """``f_i``: rightmost unpaired ``i`` becomes ``i+1``."""
    free = pair_tableau(T, i).unpaired_closers
    if not free:
        return None
    return T.replace(free[-1], i + 1)


# ---------------------------------------------------------------------------
# generic crystal machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrystalOps:
    """Raising/lowering operators and weight map for colors ``1..rank-1``."""

    raise_op: Callable
    lower_op: Callable
    weight: Callable
    rank: int

    @property
    def colors(self) -> range:
        return range(1, self.rank)


def diagram_ops(n: int) -> CrystalOps:
    return CrystalOps(raise_diagram, lower_diagram, lambda T: pad(weight(T), n), n)


def tableau_ops(n: int) -> CrystalOps:
    return CrystalOps(raise_tableau, lower_tableau, lambda T: tableau_weight(T, n), n)


def demazure_set_op(X: Iterable[Hashable], i: int, lower: Callable) -> frozenset:
    """All ``b`` with ``e_i^k(b)`` in ``X`` for some ``k >= 0``.

    Computed forwards: close ``X`` under ``f_i`` (``lower``), which reaches
    exactly the same elements because ``e_i`` and ``f_i`` invert each other.
    """
    result = set(X)
    frontier = list(result)
    while frontier:
        nxt = []
        for b in frontier:
            c = lower(b, i)
            if c is not None and c not in result:
                result.add(c)
                nxt.append(c)
        frontier = nxt
    return frozenset(result)


def demazure_word(X: Iterable[Hashable], word: Sequence[int], lower: Callable) -> frozenset:
    """Apply ``D_{word[0]} ... D_{word[-1]}``; the last letter acts first."""
    out = frozenset(X)
    for i in reversed(word):
        out = demazure_set_op(out, i, lower)
    return out


def demazure_crystal(lam: Sequence[int], a: Sequence[int], n: int) -> frozenset[Tableau]:
    """Demazure crystal of ``lam`` indexed by the rearrangement ``a``."""
    lam = tuple(lam)
    a = pad(a, n)
    if sorted(a, reverse=True) != sorted(pad(lam, n), reverse=True):
        raise PreconditionError(f"{a} is not a rearrangement of {lam}")
    _, word = sorting_permutation(a)
    return demazure_word({highest_weight_tableau(lam)}, word, lower_tableau)


def highest_weights(X: Iterable, ops: CrystalOps) -> list:
    return [b for b in X if all(ops.raise_op(b, i) is None for i in ops.colors)]


@dataclass(frozen=True)
class CrystalGraph:
    """A connected piece of a crystal: vertices plus ``f_i`` edges inside it."""

    vertices: frozenset
    edges: dict = field(compare=False)  # (vertex, color) -> vertex
    highest_weight: object
    ops: CrystalOps = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def character(self) -> Polynomial:
        terms: dict = {}
        for v in self.vertices:
            w = self.ops.weight(v)
            terms[w] = terms.get(w, 0) + 1
        return Polynomial(terms, n=self.ops.rank)

    def f(self, v, i):
        return self.edges.get((v, i))

    def e(self, v, i):
        u = self.ops.raise_op(v, i)
        return u if u in self.vertices else None


def induced_edges(X: frozenset, ops: CrystalOps) -> dict:
    edges = {}
    for v in X:
        for i in ops.colors:
            w = ops.lower_op(v, i)
            if w is not None and w in X:
                edges[(v, i)] = w
    return edges


def components(X: Iterable, ops: CrystalOps) -> list[CrystalGraph]:
    """Connected components of the induced crystal on ``X``.

    Each component must have exactly one highest weight vertex; anything
    else raises :class:`StructuralError`.  Components are ordered by their
    size (largest first), then by highest weight vertex.
    """
    X = frozenset(X)
    edges = induced_edges(X, ops)
    adj: dict = {v: [] for v in X}
    for (v, _), w in edges.items():
        adj[v].append(w)
        adj[w].append(v)
    seen: set = set()
    out = []
    for start in sorted(X, key=_vertex_key):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comp = frozenset(comp)
        tops = highest_weights(comp, ops)
        if len(tops) != 1:
            raise StructuralError(f"component of size {len(comp)} has {len(tops)} highest weight vertices")
        sub = {k: w for k, w in edges.items() if k[0] in comp}
        out.append(CrystalGraph(comp, sub, tops[0], ops))
    out.sort(key=lambda g: (-len(g), _vertex_key(g.highest_weight)))
    return out


def _vertex_key(v):
    if isinstance(v, Diagram):
        return v.sort_key()
    return v


def crystal_graph(X: Iterable, ops: CrystalOps) -> CrystalGraph:
    """Wrap a connected set as a single :class:`CrystalGraph`."""
    comps = components(X, ops)
    if len(comps) != 1:
        raise PreconditionError(f"expected a connected crystal, found {len(comps)} components")
    return comps[0]


def crystal_isomorphic(G: CrystalGraph, H: CrystalGraph, check_weights: bool = True) -> bool:
    """Whether the map seeded at the highest weights extends to a colored isomorphism."""
    if len(G) != len(H) or G.ops.rank != H.ops.rank:
        return False
    colors = G.ops.colors
    phi = {G.highest_weight: H.highest_weight}
    used = {H.highest_weight}
    queue = deque([G.highest_weight])
    while queue:
        g = queue.popleft()
        h = phi[g]
        if check_weights and G.ops.weight(g) != H.ops.weight(h):
            return False
        for i in colors:
            for gn, hn in ((G.f(g, i), H.f(h, i)), (G.e(g, i), H.e(h, i))):
                if (gn is None) != (hn is None):
                    return False
                if gn is None:
                    continue
                if gn in phi:
                    if phi[gn] != hn:
                        return False
                elif hn in used:
                    return False
                else:
                    phi[gn] = hn
                    used.add(hn)
                    queue.append(gn)
    return len(phi) == len(G)


@dataclass(frozen=True)
class DemazureComponent:
    size: int
    highest_weight: WeakComposition
    key_index: WeakComposition
    graph: CrystalGraph = field(repr=False, compare=False)


def kohnert_crystal(D: Diagram) -> list[CrystalGraph]:
    n = max(D.max_row, 1)
    return components(kohnert_closure(D).members, diagram_ops(n))


def demazure_components(D: Diagram) -> list[DemazureComponent]:
    """Split the Kohnert crystal of a northwest ``D`` into Demazure crystals.

    For every component the character must be a single key polynomial
    ``kappa_a``; the component is then checked to be isomorphic to the
    tableau Demazure crystal for ``a``.
    """
    if not is_northwest(D):
        raise PreconditionError("decompose_demazure needs a northwest diagram")
    n = max(D.max_row, 1)
    out = []
    for comp in kohnert_crystal(D):
        terms = key_expand(comp.character())
        if len(terms) != 1 or terms[0][1] != 1:
            raise StructuralError(f"component character is not a single key polynomial: {terms}")
        a = pad(terms[0][0], n)
        lam = tuple(sorted(a, reverse=True))
        tab = crystal_graph(demazure_crystal(lam, a, n), tableau_ops(n))
        if not crystal_isomorphic(comp, tab):
            raise StructuralError(f"component with key index {a} is not a Demazure crystal")
        out.append(DemazureComponent(len(comp), comp.ops.weight(comp.highest_weight), a, comp))
    return out


def decompose_demazure(D: Diagram) -> list[WeakComposition]:
    """Key indices of the Demazure components of ``KD(D)``, with multiplicity, sorted."""
    return sorted(c.key_index for c in demazure_components(D))


def kohnert_highest_weights(D: Diagram, n: int | None = None) -> frozenset[Diagram]:
    n = max(D.max_row, 1) if n is None else n
    return frozenset(highest_weights(kohnert_closure(D).members, diagram_ops(n)))


def check_tableau_pairing(T: Tableau, i: int) -> tuple:
    """Row-reading-word signature rule; independent cross-check for ``pair_tableau``.

    Returns the ``(e_i, f_i)`` images computed from the row reading word
    (rows top to bottom, each left to right).
    """
    positions = [(k + 1, j + 1) for k in reversed(range(len(T.rows))) for j in range(len(T.rows[k]))]
    seq = []
    for cell in positions:
        v = T.value(cell)
        if v == i + 1:
            seq.append((cell, True))
        elif v == i:
            seq.append((cell, False))
    p = _bracket(seq)
    e = T.replace(p.unpaired_openers[0], i) if p.unpaired_openers else None
    f = T.replace(p.unpaired_closers[-1], i + 1) if p.unpaired_closers else None
    return e, f
