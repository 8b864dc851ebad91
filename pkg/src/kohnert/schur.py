"""Brute-force characters of flagged Schur modules.

The module of a diagram ``D`` is spanned by the products of minors
``Delta_T`` over flagged fillings ``T``, taken modulo the ideal generated by
the lower-triangular variables ``z_{k,l}`` (``k > l``).  Each ``Delta_T`` is a
weight vector of weight ``wt(T)``, so the character is the sum over weights
of ``x^wt`` times the rank of the ``Delta_T`` of that weight.

Everything is exact and exponential; hard limits keep it at desk scale.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator

from .closure import kohnert_polynomial
from .diagram import (
    Cell,
    Diagram,
    WeakComposition,
    add_alpha,
    is_northwest,
    is_percent_avoiding,
    pad,
    weight,
)
from .errors import PreconditionError, ScaleGuardError, StructuralError
from .linalg import sparse_rank
from .poly import Polynomial

MAX_CELLS = 6
MAX_ROWS = 4
MAX_FILLINGS = 20000

# a monomial in the z variables: sorted tuple of (k, l) factors
ZMonomial = tuple[tuple[int, int], ...]
ZPolynomial = dict[ZMonomial, int]


@dataclass(frozen=True)
class FlaggedFilling:
    """Values on the cells of a diagram, stored as a sorted tuple of ``(cell, value)``."""

    entries: tuple[tuple[Cell, int], ...]

    @classmethod
    def from_dict(cls, values: dict[Cell, int]) -> "FlaggedFilling":
        return cls(tuple(sorted(values.items())))

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def column(self, c: int) -> tuple[int, ...]:
        """Entries of column ``c`` read top to bottom."""
        return tuple(v for (r, cc), v in self.entries if cc == c)

    def is_flagged(self) -> bool:
        return all(v <= r for (r, _), v in self.entries)

    def weight(self, n: int | None = None) -> WeakComposition:
        vals = [v for _, v in self.entries]
        if n is None:
            n = max(vals, default=0)
        out = [0] * n
        for v in vals:
            out[v - 1] += 1
        return tuple(out)


def row_filling(D: Diagram) -> FlaggedFilling:
    """Each cell filled with its own row index."""
    return FlaggedFilling.from_dict({(r, c): r for r, c in D.cells})


def _guard(D: Diagram, n: int, max_cells: int | None) -> None:
    limit = max_cells
    if limit is None:
        env = os.environ.get("KOHNERT_MAX_CELLS")
        limit = int(env) if env else MAX_CELLS
    if len(D) > limit:
        raise ScaleGuardError(
            f"diagram has {len(D)} cells; the oracle accepts at most {limit} "
            "(pass max_cells or set KOHNERT_MAX_CELLS to override)"
        )
    if max_cells is None and n > MAX_ROWS and not os.environ.get("KOHNERT_MAX_CELLS"):
        raise ScaleGuardError(f"n = {n} exceeds the oracle limit of {MAX_ROWS} rows")


def enumerate_flagged_fillings(D: Diagram, n: int | None = None) -> Iterator[FlaggedFilling]:
    """Flagged fillings of ``D`` with entries in ``1..n`` and no repeat inside a column.

    Fillings with a repeated column entry are skipped because their
    ``Delta_T`` vanishes.
    """
    n = D.max_row if n is None else n
    if D.max_row > n:
        raise PreconditionError(f"diagram reaches row {D.max_row} but n = {n}")
    cols = D.occupied_columns()
    per_column = []
    for c in cols:
        rows = D.column(c)
        choices = [
            vals
            for vals in product(*(range(1, min(r, n) + 1) for r in rows))
            if len(set(vals)) == len(vals)
        ]
        per_column.append([tuple(((r, c), v) for r, v in zip(rows, vals)) for vals in choices])
    for combo in product(*per_column):
        yield FlaggedFilling(tuple(sorted(e for col in combo for e in col)))


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _minor(top: tuple[int, ...], bottom: tuple[int, ...]) -> ZPolynomial:
    """``det(z_{top[a], bottom[b]})`` with lower-triangular variables set to zero."""
    out: ZPolynomial = {}
    for p in permutations(range(len(top))):
        factors = []
        for a, b in enumerate(p):
            if top[a] > bottom[b]:
                break
            factors.append((top[a], bottom[b]))
        else:
            mono = tuple(sorted(factors))
            v = out.get(mono, 0) + _perm_sign(p)
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def _zmul(f: ZPolynomial, g: ZPolynomial) -> ZPolynomial:
    out: ZPolynomial = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(sorted(m1 + m2))
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def delta(T: FlaggedFilling, D: Diagram) -> ZPolynomial:
    """``Delta_T`` modulo the lower-triangular ideal, as ``{z-monomial: coefficient}``."""
    values = T.as_dict()
    if set(values) != set(D.cells):
        raise PreconditionError("filling does not cover exactly the cells of D")
    result: ZPolynomial = {(): 1}
    for c in D.occupied_columns():
        rows = D.column(c)
        top = tuple(values[(r, c)] for r in rows)
        result = _zmul(result, _minor(top, rows))
        if not result:
            break
    return result


@dataclass(frozen=True)
class OracleResult:
    character: Polynomial
    dimensions: dict  # weight -> dimension of that weight space
    fillings: int


def flagged_character_report(
    D: Diagram, n: int | None = None, max_cells: int | None = None
) -> OracleResult:
    n = max(D.max_row, 1) if n is None else n
    _guard(D, n, max_cells)
    groups: dict[WeakComposition, list[ZPolynomial]] = {}
    count = 0
    for T in enumerate_flagged_fillings(D, n):
        count += 1
        if count > MAX_FILLINGS and max_cells is None:
            raise ScaleGuardError(f"more than {MAX_FILLINGS} fillings; pass max_cells to override")
        d = delta(T, D)
        if d:
            groups.setdefault(pad(T.weight(), n), []).append(d)
    dims = {}
    for w, vectors in sorted(groups.items()):
        rk = sparse_rank(vectors)
        if rk:
            dims[w] = rk
    if not D:
        dims = {(0,) * n: 1}
    return OracleResult(Polynomial(dims, n=n), dims, count)


def flagged_character(D: Diagram, n: int | None = None, max_cells: int | None = None) -> Polynomial:
    """Character of the flagged Schur module of ``D`` by exact linear algebra."""
    return flagged_character_report(D, n, max_cells).character


# ---------------------------------------------------------------------------
# certificates for extra monomials
# ---------------------------------------------------------------------------


def a1_filling(D: Diagram, r: int, s: int, C: Iterable[int]) -> FlaggedFilling:
    """Flagged filling of weight ``wt(D) + |C| alpha_{r,s}``.

    Outside ``C`` each column keeps its row filling.  In a column of ``C``
    with rows ``a_1 < ... < a_m``, ``a_k`` the first row below ``r`` and
    ``a_l = s``: the cell at ``a_k`` gets ``r`` and the cells at
    ``a_{k+1} .. a_l`` take the rows one position earlier.
    """
    C = set(C)
    if not 1 <= r < s:
        raise PreconditionError(f"need 1 <= r < s, got r={r}, s={s}")
    values = {(row, c): row for row, c in D.cells}
    for c in sorted(C):
        rows = D.column(c)
        if s not in rows or r in rows:
            raise PreconditionError(f"column {c} must contain row {s} and not row {r}")
        k = next(i for i, a in enumerate(rows) if a > r)
        l = rows.index(s)
        values[(rows[k], c)] = r
        for i in range(k + 1, l + 1):
            values[(rows[i], c)] = rows[i - 1]
    return FlaggedFilling.from_dict(values)


@dataclass(frozen=True)
class Witness:
    r: int
    s: int
    K: int
    columns: tuple[int, ...]
    exponent: WeakComposition
    filling: FlaggedFilling

    @property
    def monomial(self) -> Polynomial:
        return Polynomial.monomial(self.exponent)


def _violating_rows(D: Diagram) -> tuple[int, int]:
    best = None
    cells = D.cells
    for (s, k) in cells:
        for (r, l) in cells:
            if r < s and k < l and (r, k) not in cells:
                key = (s - r, r)
                if best is None or key < best:
                    best = key
    if best is None:
        raise PreconditionError("diagram is northwest")
    gap, r = best
    return r, r + gap


def tightness_witness(D: Diagram) -> Witness:
    """A monomial of the flagged Schur character that is missing from the Kohnert polynomial.

    Picks the closest pair of rows ``r < s`` with a northwest violation, the
    rightmost row-``s`` cell ``y`` with a row-``r`` cell strictly to its right
    and none above it, and the ``K`` cells of row ``s`` weakly right of ``y``
    with nothing in row ``r`` of their column.  The candidate exponent is
    ``wt(D) + K alpha_{r,s}``.  Both claims are checked: the filling from
    :func:`a1_filling` must have nonzero ``Delta`` and the Kohnert closure must
    have no diagram of that weight.
    """
    if not is_percent_avoiding(D):
        raise PreconditionError("tightness_witness needs a %-avoiding diagram")
    if is_northwest(D):
        raise PreconditionError("tightness_witness needs a diagram that is not northwest")
    r, s = _violating_rows(D)
    row_r = set(D.row(r))
    row_s = D.row(s)
    ys = [c for c in row_s if c not in row_r and any(l > c for l in row_r)]
    y = max(ys)
    columns = tuple(c for c in row_s if c >= y and c not in row_r)
    K = len(columns)
    n = D.max_row
    exponent = pad(add_alpha(weight(D), r, s, K), n)
    T = a1_filling(D, r, s, columns)
    if pad(T.weight(n), n) != exponent:
        raise StructuralError(f"filling weight {T.weight(n)} differs from {exponent}")
    if not delta(T, D):
        raise StructuralError("certifying filling has vanishing Delta")
    if kohnert_polynomial(D).coefficient(exponent):
        raise StructuralError(f"x^{exponent} occurs in the Kohnert polynomial of {D!r}")
    return Witness(r, s, K, columns, exponent, T)
