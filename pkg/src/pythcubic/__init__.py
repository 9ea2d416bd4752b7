"""Exact arithmetic and sums of squares in the simplest cubic orders Z[rho]."""

from .field import (
    CharData,
    DomainError,
    EmbeddingIntervals,
    FieldParam,
    OrderElement,
    Signature,
    char_data,
    galois_image,
    invert_unit,
    is_totally_positive,
    make_element,
    mul,
    refine_embeddings,
    signature,
    totally_geq,
)
from .indecomposables import (
    TrianglePoint,
    brute_force_indecomposables,
    sigma_indecomposables_below,
    theorem12_list,
    triangle0,
)
from .sos import (
    Decomposition,
    SquareCandidate,
    is_sum_of_squares,
    pythagoras_length,
    squares_below_bruteforce,
    squares_below_structured,
)
from .units import UnitExponent, unit_element, units_in_conjugate_box

__version__ = "0.1.0"
