"""The eight acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its runtime; the same
lines are repeated in the pytest terminal summary.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager

from kohnert import magyar, poly
from kohnert.closure import kohnert_closure, kohnert_polynomial, poset_edges
from kohnert.crystal import (
    crystal_graph,
    crystal_isomorphic,
    decompose_demazure,
    demazure_crystal,
    demazure_components,
    kohnert_crystal,
    tableau_ops,
)
from kohnert.diagram import Diagram, key_diagram, row_subset
from kohnert.labeling import is_kohnert_tableau, label_left
from kohnert.magyar import magyar_character, reduction_trace
from kohnert.poly import Polynomial, key_expand
from kohnert.schur import flagged_character, tightness_witness
from kohnert.sweeps import northwest_diagrams, tight_candidates

import props
from test_closure import NW_EXAMPLE_MEMBERS, NW_EXAMPLE_EDGES
from test_labeling import TABLEAUX_0121

NW_EXAMPLE = Diagram([(2, 1), (3, 1), (3, 2), (4, 2)])
T5 = Diagram([(1, 1), (2, 1), (2, 2), (2, 3), (3, 2)])
T5_POLY = Polynomial({(3, 2, 0): 1, (3, 1, 1): 1, (2, 3, 0): 1, (2, 2, 1): 1, (1, 3, 1): 1})
CASES = 1000


def _cold_start() -> None:
    """Drop memoized results so each runtime budget is measured from scratch."""
    kohnert_closure.cache_clear()
    magyar._character.cache_clear()
    poly._key_cached.cache_clear()


@contextmanager
def criterion(log, number: int, title: str, budget: float | None):
    _cold_start()
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        line = f"FAIL criterion {number}: {title} ({time.perf_counter() - start:.2f}s)"
        print(line)
        log.append(line)
        raise
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        line = f"FAIL criterion {number}: {title} ({elapsed:.2f}s, budget {budget:g}s)"
        print(line)
        log.append(line)
        raise AssertionError(line)
    line = f"PASS criterion {number}: {title} ({elapsed:.2f}s)"
    print(line)
    log.append(line)


def test_criterion_1_northwest_poset(acceptance_log):
    with criterion(acceptance_log, 1, "Kohnert poset of the northwest example: 17 diagrams, 31 edges", 1.0):
        members = kohnert_closure(NW_EXAMPLE).members
        assert len(members) == 17
        assert set(members) == {Diagram(c) for c in NW_EXAMPLE_MEMBERS.values()}
        named = {Diagram(c): k for k, c in NW_EXAMPLE_MEMBERS.items()}
        edges = poset_edges(NW_EXAMPLE)
        assert len(edges) == 31
        assert sorted("".join(sorted((named[S], named[T]))) for S, T in edges) == sorted(
            "".join(sorted(e)) for e in NW_EXAMPLE_EDGES
        )


def test_criterion_2_magyar_worked_example(acceptance_log):
    with criterion(acceptance_log, 2, "Magyar recurrence on T5: trace and character", 1.0):
        assert magyar_character(T5) == T5_POLY
        assert kohnert_polynomial(T5) == T5_POLY
        trace = [str(s) for s in reduction_trace(T5)]
        assert trace == ["M2(k=2)", "M3(r=1)", "M3(r=2)", "M2(k=2)", "M2(k=1)", "M1"]


def test_criterion_3_key_expansion(acceptance_log):
    with criterion(acceptance_log, 3, "key expansion and Demazure decomposition of the northwest example", 1.0):
        assert key_expand(kohnert_polynomial(NW_EXAMPLE)) == [((0, 1, 2, 1), 1), ((0, 2, 2, 0), 1)]
        assert decompose_demazure(NW_EXAMPLE) == [(0, 1, 2, 1), (0, 2, 2, 0)]
        comps = demazure_components(NW_EXAMPLE)
        assert [c.size for c in comps] == [11, 6]
        assert [c.highest_weight for c in comps] == [(2, 1, 1, 0), (2, 2, 0, 0)]


def test_criterion_4_kohnert_tableaux_and_demazure_crystal(acceptance_log):
    with criterion(acceptance_log, 4, "11 Kohnert tableaux of (0,1,2,1); Demazure crystal isomorphism", 1.0):
        a = (0, 1, 2, 1)
        members = kohnert_closure(key_diagram(a)).members
        assert len(members) == 11
        labelings = [label_left(T, a) for T in members]
        assert all(is_kohnert_tableau(L, a) for L in labelings)
        assert sorted(sorted(L.entries) for L in labelings) == sorted(sorted(d.items()) for d in TABLEAUX_0121)
        B = demazure_crystal((2, 1, 1, 0), a, 4)
        assert len(B) == 11
        left = kohnert_crystal(NW_EXAMPLE)[0]
        assert crystal_isomorphic(crystal_graph(B, tableau_ops(4)), left)


def test_criterion_5_main_theorem_sweep(acceptance_log):
    with criterion(acceptance_log, 5, "Kohnert = Magyar (4x4, <=6 cells) and = module character (3x3, <=5 cells)", 300.0):
        count = 0
        for D in northwest_diagrams(4, 4, 6):
            assert kohnert_polynomial(D) == magyar_character(D), D
            count += 1
        assert count == 2749
        triple = 0
        for D in northwest_diagrams(3, 3, 5):
            K = kohnert_polynomial(D)
            assert magyar_character(D) == K and flagged_character(D) == K, D
            triple += 1
        assert triple == 181


def test_criterion_6_tightness(acceptance_log):
    with criterion(acceptance_log, 6, "tightness witnesses for %-avoiding non-northwest diagrams (3x3, <=5 cells)", 60.0):
        w = tightness_witness(Diagram([(1, 2), (2, 1), (2, 2)]))
        assert w.monomial == Polynomial({(2, 1): 1})
        count = 0
        for D in tight_candidates(3, 3, 5):
            w = tightness_witness(D)
            assert flagged_character(D).coefficient(w.exponent) > 0, D
            assert kohnert_polynomial(D).coefficient(w.exponent) == 0, D
            count += 1
        assert count == 57


def test_criterion_7_property_suites(acceptance_log):
    with criterion(acceptance_log, 7, f"property suites ({CASES} random cases each, exhaustive sweeps)", None):
        rng = random.Random(20240607)
        colors = range(1, props.N)
        for _ in range(CASES):
            f = props.random_polynomial(rng)
            i, j = rng.choice(colors), rng.choice(colors)
            props.check_dd_squared(f, i)
            props.check_pi_idempotent(f, i)
            props.check_braid(f, i, j)
            props.check_pi_fixed_points(f if rng.random() < 0.5 else f + f.swap(i), i)
            props.check_diagram_inverse(props.random_diagram(rng), i)
            props.check_tableau_inverse(rng.choice(props.tableaux_pool()), i)
            props.check_demazure_op_idempotent({props.random_diagram(rng) for _ in range(3)}, i)
            props.check_rectify(props.random_diagram(rng))
        pool = props.northwest_pool()
        assert len(pool) >= CASES
        for D in pool:
            props.check_closure_stability(D)
            for i in colors:
                props.check_demazure_op_character(D, i)
        assert props.check_member_left_sweep(3, 3) > 0
        for box in [(3, 3, 6), (4, 3, 5), (3, 4, 5)]:
            assert props.check_member_northwest_sweep(*box) > 0
        assert props.check_key_routes(3, 4) == 256


def test_criterion_8_nested_chain(acceptance_log):
    with criterion(acceptance_log, 8, "nested Demazure chain under row swaps (4x4, <=6 cells)", None):
        checked = 0
        for D in northwest_diagrams(4, 4, 6):
            for r in range(1, 4):
                if row_subset(D, r):
                    props.check_nested(D, r)
                    checked += 1
        assert checked == 3845
