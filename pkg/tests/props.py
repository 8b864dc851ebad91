"""Property checks shared by the hypothesis suite and the acceptance runner.

Each ``check_*`` takes concrete inputs and raises ``AssertionError`` on
failure.  The ``random_*`` helpers draw inputs from a ``random.Random``.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

from kohnert.closure import character, kohnert_closure, kohnert_polynomial
from kohnert.crystal import (
    demazure_set_op,
    diagram_ops,
    highest_weights,
    lower_diagram,
    lower_tableau,
    raise_diagram,
    raise_tableau,
    ssyt,
)
from kohnert.diagram import Diagram, column_weight, key_diagram, row_subset, swap_rows, weight
from kohnert.labeling import is_rectified, member_left, member_northwest, rectify
from kohnert.poly import (
    Polynomial,
    demazure_pi,
    divided_difference,
    key_polynomial,
    key_polynomial_kohnert,
)
from kohnert.sweeps import diagrams_in_box, northwest_diagrams

N = 4
SHAPES = [(1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1), (2, 2), (3, 1), (2, 1, 1), (3, 2), (2, 2, 1), (3, 2, 1)]


# -- generators ----------------------------------------------------------------


def random_polynomial(rng: random.Random, n: int = N, terms: int = 4, degree: int = 3) -> Polynomial:
    data = {tuple(rng.randint(0, degree) for _ in range(n)): rng.randint(-5, 5) for _ in range(terms)}
    return Polynomial(data, n=n)


def random_diagram(rng: random.Random, rows: int = 4, cols: int = 4, max_cells: int = 7) -> Diagram:
    size = rng.randint(0, max_cells)
    box = [(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    return Diagram(rng.sample(box, size))


@lru_cache(maxsize=None)
def tableaux_pool() -> tuple:
    return tuple(T for shape in SHAPES for T in ssyt(shape, N))


@lru_cache(maxsize=None)
def northwest_pool() -> tuple:
    return tuple(northwest_diagrams(4, 4, 6))


# -- polynomial operators ----------------------------------------------------------


def check_dd_squared(f: Polynomial, i: int) -> None:
    assert divided_difference(divided_difference(f, i), i) == Polynomial.zero()


def check_pi_idempotent(f: Polynomial, i: int) -> None:
    g = demazure_pi(f, i)
    assert demazure_pi(g, i) == g


def check_braid(f: Polynomial, i: int, j: int) -> None:
    def word(g, letters):
        for k in reversed(letters):
            g = demazure_pi(g, k)
        return g

    if abs(i - j) == 1:
        assert word(f, [i, j, i]) == word(f, [j, i, j])
    elif i != j:
        assert word(f, [i, j]) == word(f, [j, i])


def check_pi_fixed_points(f: Polynomial, i: int) -> None:
    assert (demazure_pi(f, i) == f) == f.is_symmetric_in(i)


# -- crystal operators ---------------------------------------------------------------


def check_diagram_inverse(D: Diagram, i: int) -> None:
    f = lower_diagram(D, i)
    if f is not None:
        assert raise_diagram(f, i) == D
        assert weight(f) != weight(D)
    e = raise_diagram(D, i)
    if e is not None:
        assert lower_diagram(e, i) == D


def check_tableau_inverse(T, i: int) -> None:
    f = lower_tableau(T, i)
    if f is not None:
        assert raise_tableau(f, i) == T
    e = raise_tableau(T, i)
    if e is not None:
        assert lower_tableau(e, i) == T


def check_closure_stability(D: Diagram) -> None:
    """Raising never leaves KD(D); lowering by ``f_r`` does not when row r sits inside row r+1."""
    K = kohnert_closure(D).as_set()
    for i in range(1, N):
        lower_ok = row_subset(D, i)
        for T in K:
            e = raise_diagram(T, i)
            assert e is None or e in K
            if lower_ok:
                f = lower_diagram(T, i)
                assert f is None or f in K


def check_demazure_op_idempotent(X, i: int) -> None:
    once = demazure_set_op(X, i, lower_diagram)
    assert demazure_set_op(once, i, lower_diagram) == once
    assert set(X) <= once


def check_demazure_op_character(D: Diagram, i: int) -> None:
    X = demazure_set_op(kohnert_closure(D).members, i, lower_diagram)
    n = max(D.max_row, i + 1)
    assert character(X, n) == demazure_pi(kohnert_polynomial(D), i)


def check_nested(D: Diagram, r: int) -> None:
    """``KD(s_r D) <= KD(D) = D_r(KD(s_r D))`` with the same highest weights."""
    K = kohnert_closure(D).as_set()
    below = kohnert_closure(swap_rows(D, r)).as_set()
    assert below <= K
    assert demazure_set_op(below, r, lower_diagram) == K
    ops = diagram_ops(max(D.max_row, r + 1))
    assert set(highest_weights(below, ops)) == set(highest_weights(K, ops))


# -- rectification and membership -------------------------------------------------------


def check_rectify(D: Diagram) -> None:
    R = rectify(D)
    assert weight(R) == weight(D)
    assert is_rectified(R)
    assert rectify(R) == R


def check_member_left_sweep(max_part: int = 3, length: int = 3) -> int:
    """Exhaustive; returns the number of (T, a) pairs compared."""
    compared = 0
    for a in product(range(max_part + 1), repeat=length):
        K = key_diagram(a)
        members = kohnert_closure(K).as_set()
        for T in diagrams_in_box(length, max(a) or 1, sum(a)):
            if column_weight(T) == column_weight(K):
                assert member_left(T, a) == (T in members), (a, T)
                compared += 1
    return compared


def check_member_northwest_sweep(rows: int, cols: int, max_cells: int) -> int:
    groups: dict = {}
    for T in diagrams_in_box(rows, cols, max_cells):
        groups.setdefault(column_weight(T), []).append(T)
    compared = 0
    for D in northwest_diagrams(rows, cols, max_cells):
        members = kohnert_closure(D).as_set()
        for T in groups[column_weight(D)]:
            assert member_northwest(T, D) == (T in members), (D, T)
            compared += 1
    return compared


def check_key_routes(max_part: int = 3, length: int = 4) -> int:
    count = 0
    for a in product(range(max_part + 1), repeat=length):
        assert key_polynomial(a) == key_polynomial_kohnert(a), a
        count += 1
    return count

