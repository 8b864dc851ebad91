from __future__ import annotations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from kohnert.diagram import Diagram
from kohnert.poly import Polynomial

import props

MANY = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])

exponents = st.tuples(*[st.integers(0, 3)] * props.N)
polynomials = st.dictionaries(exponents, st.integers(-5, 5), max_size=5).map(lambda d: Polynomial(d, n=props.N))
colors = st.integers(1, props.N - 1)
cells = st.tuples(st.integers(1, 5), st.integers(1, 4))
diagrams = st.frozensets(cells, max_size=8).map(Diagram)
tableaux = st.sampled_from(props.tableaux_pool())
northwest = st.sampled_from(props.northwest_pool())


@MANY
@given(polynomials, colors)
def test_divided_difference_squares_to_zero(f, i):
    props.check_dd_squared(f, i)


@MANY
@given(polynomials, colors)
def test_demazure_operator_idempotent(f, i):
    props.check_pi_idempotent(f, i)


@MANY
@given(polynomials, colors, colors)
def test_demazure_braid_relations(f, i, j):
    props.check_braid(f, i, j)


@MANY
@given(polynomials, colors, st.booleans())
def test_demazure_fixed_points_are_symmetric(f, i, symmetrize):
    if symmetrize:
        f = f + f.swap(i)
    props.check_pi_fixed_points(f, i)


@MANY
@given(diagrams, colors)
def test_diagram_crystal_operators_invert(D, i):
    props.check_diagram_inverse(D, i)


@MANY
@given(tableaux, colors)
def test_tableau_crystal_operators_invert(T, i):
    props.check_tableau_inverse(T, i)


@MANY
@given(northwest)
def test_closure_stable_under_raising_and_lowering(D):
    props.check_closure_stability(D)


@MANY
@given(st.frozensets(diagrams, min_size=1, max_size=4), colors)
def test_demazure_set_operator_idempotent(X, i):
    props.check_demazure_op_idempotent(X, i)


@MANY
@given(northwest, colors)
def test_demazure_set_operator_character(D, i):
    props.check_demazure_op_character(D, i)


@MANY
@given(diagrams)
def test_rectify_weight_and_idempotence(D):
    props.check_rectify(D)


def test_key_polynomial_routes_agree():
    assert props.check_key_routes(3, 4) == 256
