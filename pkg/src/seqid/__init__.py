"""Exact Pell and Lucas-type sequences, their polynomial identities, and oracle checks."""

from .identities import (
    MelhamIdentity,
    OddMultipleIdentity,
    ParityPolyPair,
    PowerReduction,
    general_odd_multiple_poly,
    melham_closed_form,
    melham_sum_poly,
    odd_multiple_poly,
    partial_sum_closed_form,
    power_reduction,
)
from .polynomials import Poly, binomial, clear_denominators, poly_eval, spoly_substitute
from .sequences import (
    FIBONACCI,
    PELL,
    QuadraticInteger,
    SequenceSpec,
    companion,
    matrix_term,
    silver_power,
    term,
    term_naive,
    term_pair,
)

__version__ = "0.1.0"
