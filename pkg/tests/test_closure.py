from __future__ import annotations

from kohnert.closure import (
    apply_kohnert_move,
    character,
    kohnert_closure,
    kohnert_moves,
    kohnert_polynomial,
    poset_edges,
)
from kohnert.diagram import Diagram, first_column_tower, key_diagram, tower
from kohnert.poly import Polynomial, specialize_ones
from kohnert.sweeps import diagrams_in_box, northwest_diagrams

import oracles

NW_EXAMPLE = Diagram([(2, 1), (3, 1), (3, 2), (4, 2)])

NW_EXAMPLE_MEMBERS = {
    "A": [(2, 1), (3, 1), (3, 2), (4, 2)],
    "B": [(1, 1), (3, 1), (3, 2), (4, 2)],
    "C": [(2, 1), (2, 2), (3, 1), (4, 2)],
    "D": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "E": [(1, 1), (2, 2), (3, 1), (4, 2)],
    "F": [(1, 1), (2, 2), (3, 1), (3, 2)],
    "G": [(1, 2), (2, 1), (3, 1), (4, 2)],
    "H": [(1, 1), (2, 1), (2, 2), (4, 2)],
    "J": [(1, 1), (1, 2), (3, 1), (4, 2)],
    "K": [(1, 1), (1, 2), (2, 2), (3, 1)],
    "L": [(1, 2), (2, 1), (3, 1), (3, 2)],
    "M": [(1, 2), (2, 1), (2, 2), (3, 1)],
    "N": [(1, 1), (1, 2), (2, 1), (4, 2)],
    "O": [(1, 1), (1, 2), (3, 1), (3, 2)],
    "P": [(1, 1), (2, 1), (2, 2), (3, 2)],
    "Q": [(1, 1), (1, 2), (2, 1), (3, 2)],
    "S": [(1, 1), (1, 2), (2, 1), (2, 2)],
}
NW_EXAMPLE_EDGES = (
    "AB AC AD BE BF CG CH CD DL DM EF EJ EH FK FO GJ GL GN HN HP LO LM JN JO KS MS NQ OK PQ PS QS"
).split()


def test_northwest_example_members():
    members = set(kohnert_closure(NW_EXAMPLE).members)
    assert members == {Diagram(c) for c in NW_EXAMPLE_MEMBERS.values()}


def test_northwest_example_edges():
    named = {Diagram(c): k for k, c in NW_EXAMPLE_MEMBERS.items()}
    got = {frozenset((named[S], named[T])) for S, T in poset_edges(NW_EXAMPLE)}
    assert got == {frozenset(e) for e in NW_EXAMPLE_EDGES}
    assert len(got) == 31


def test_move_rule():
    D = Diagram([(1, 1), (2, 1), (2, 3), (3, 3)])
    # rightmost cell of row 2 is (2,3); lowest vacancy above is (1,3)
    assert apply_kohnert_move(D, 2) == Diagram([(1, 1), (2, 1), (1, 3), (3, 3)])
    # (2,3) is occupied, so the row-3 cell jumps over it to (1,3)
    assert apply_kohnert_move(D, 3) == Diagram([(1, 1), (2, 1), (2, 3), (1, 3)])
    assert apply_kohnert_move(D, 1) is None
    assert apply_kohnert_move(Diagram([(1, 1)]), 1) is None
    assert apply_kohnert_move(D, 5) is None


def test_move_blocked_when_column_full_above():
    D = tower(3)
    assert kohnert_moves(D) == []
    assert len(kohnert_closure(D)) == 1


def test_closure_matches_oracle_exhaustively():
    for D in diagrams_in_box(3, 3, 5):
        ours = kohnert_closure(D)
        assert ours.as_set() == {Diagram(c) for c in oracles.closure(D.cells)}
        assert ours.is_closed()


def test_closure_is_sorted_and_deduplicated():
    members = kohnert_closure(NW_EXAMPLE).members
    assert len(members) == len(set(members))
    assert list(members) == sorted(members, key=Diagram.sort_key)


def test_kohnert_polynomial_matches_oracle():
    for D in diagrams_in_box(3, 3, 5):
        n = max(D.max_row, 1)
        assert oracles.as_dict(kohnert_polynomial(D), n) == oracles.kohnert_dict(D.cells, n)


def test_kohnert_polynomial_small_cases():
    assert kohnert_polynomial(Diagram()) == Polynomial.one()
    assert kohnert_polynomial(Diagram([(2, 1)])) == Polynomial.variable(1) + Polynomial.variable(2)
    assert kohnert_polynomial(tower(3)) == Polynomial.x_product(3)


def test_t5_polynomial():
    T5 = Diagram([(1, 1), (2, 1), (2, 2), (2, 3), (3, 2)])
    expected = Polynomial(
        {(3, 2, 0): 1, (3, 1, 1): 1, (2, 3, 0): 1, (2, 2, 1): 1, (1, 3, 1): 1}
    )
    assert kohnert_polynomial(T5) == expected


def test_character_of_key_closure_has_11_terms_with_multiplicity():
    f = character(kohnert_closure(key_diagram((0, 1, 2, 1))).members, 4)
    assert sum(c for _, c in f.items()) == 11


def test_specialization_counts_members():
    assert specialize_ones(kohnert_polynomial(NW_EXAMPLE)) == 17
    for D in diagrams_in_box(3, 3, 4):
        f = kohnert_polynomial(D)
        assert specialize_ones(f) == len(kohnert_closure(D))
        assert all(c >= 1 for _, c in f.items())


def test_tower_factorization():
    seen = 0
    for D in northwest_diagrams(4, 4, 6):
        if not D:
            continue
        k = first_column_tower(D)
        if k is None:
            continue
        c = D.occupied_columns()[0]
        rest = Diagram([cell for cell in D.cells if cell[1] != c])
        assert kohnert_polynomial(D) == Polynomial.x_product(k) * kohnert_polynomial(rest)
        seen += 1
    assert seen > 500
