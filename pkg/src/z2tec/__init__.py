"""Measures on Z_2^l that are determined by the modulus of their characteristic function.

The closed-form classifier for Z_2^3 lives in :mod:`z2tec.classifier`; the
enumeration oracle it is checked against lives in :mod:`z2tec.oracle`.
"""

from .classifier import corollary1_fast, is_tec_theorem4, normalize, satisfied_branches
from .measure import Measure, char_fn, equivalent, shift
from .oracle import equivalence_class, is_tec_bruteforce
from .verdict import TecVerdict

__all__ = [
    "Measure",
    "TecVerdict",
    "char_fn",
    "corollary1_fast",
    "equivalence_class",
    "equivalent",
    "is_tec_bruteforce",
    "is_tec_theorem4",
    "normalize",
    "satisfied_branches",
    "shift",
]
