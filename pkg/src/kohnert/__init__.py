"""Kohnert polynomials, Demazure crystals and flagged Schur module characters."""

from .closure import kohnert_closure, kohnert_moves, kohnert_polynomial, poset_edges
from .crystal import (
    Tableau,
    components,
    crystal_isomorphic,
    decompose_demazure,
    demazure_crystal,
    demazure_set_op,
    lower_diagram,
    lower_tableau,
    raise_diagram,
    raise_tableau,
)
from .diagram import (
    Diagram,
    Permutation,
    is_northwest,
    is_percent_avoiding,
    key_diagram,
    parse_diagram,
    rothe_diagram,
    weight,
)
from .errors import (
    KohnertError,
    NotKeyPositiveError,
    ParseError,
    PreconditionError,
    ScaleGuardError,
    StructuralError,
)
from .labeling import label_left, label_northwest, member_left, member_northwest, rectify
from .magyar import magyar_character, reduction_trace
from .poly import Polynomial, demazure_pi, divided_difference, key_expand, key_polynomial
from .schur import flagged_character, tightness_witness

__all__ = [name for name in dir() if not name.startswith("_")]
