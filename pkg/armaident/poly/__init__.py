# armaident/poly/__init__.py

from .polynomial import (
    Polynomial,
    make_polynomial,
    from_tail,
    from_factor_parameters,
    reciprocal,
    reciprocal_value,
    product,
    horner_sequence,
    deflate,
)
from .roots import RootSet, roots_of_reciprocal, common_roots
