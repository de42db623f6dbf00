# armaident/bezout/__init__.py

from .bezoutian import (
    BezoutMatrix,
    KernelBasis,
    bezout_matrix,
    bezout_decompose_once,
    bezout_expansion,
    bezout_common_zero_factor,
    common_zero_reconstruction,
    kernel_basis,
    bezout_block,
    sylvester_bezout_relation,
)
