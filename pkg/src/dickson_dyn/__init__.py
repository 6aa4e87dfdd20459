"""Dickson polynomials of the first kind over finite fields.

Construction, exact periods modulo x^q - x, coefficient identities, dynamics of
iterated Dickson maps, and recognition of Dickson polynomials.
"""

from ._core import BACKEND
from .dickson import (
    dickson_closed,
    dickson_reduced,
    dickson_stride2,
    is_permutation,
    permutation_criterion,
)
from .dynamics import (
    composition_period,
    group_elements,
    iteration_structure,
    kernel,
    open_question_scan,
)
from .errors import DicksonError
from .gf import FieldCtx, field_of_order, format_element, make_field, parse_element
from .identities import verify_full_identity, verify_half_identity, verify_lemma_terms
from .periodicity import check_column_sums, empirical_period, scan_periods, theoretical_period
from .polyring import Poly, RPoly, format_poly, parse_poly, reduce
from .recognition import RecognitionResult, dickson_table, recognize_brute, recognize_guess

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DicksonError",
    "FieldCtx",
    "Poly",
    "RPoly",
    "RecognitionResult",
    "check_column_sums",
    "composition_period",
    "dickson_closed",
    "dickson_reduced",
    "dickson_stride2",
    "dickson_table",
    "empirical_period",
    "field_of_order",
    "format_element",
    "format_poly",
    "group_elements",
    "is_permutation",
    "iteration_structure",
    "kernel",
    "make_field",
    "open_question_scan",
    "parse_element",
    "parse_poly",
    "permutation_criterion",
    "recognize_brute",
    "recognize_guess",
    "reduce",
    "scan_periods",
    "theoretical_period",
    "verify_full_identity",
    "verify_half_identity",
    "verify_lemma_terms",
]
