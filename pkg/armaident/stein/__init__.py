# armaident/stein/__init__.py

from .solver import (
    SteinMethod,
    SteinSolution,
    backward_error,
    solve_stein,
    solve_stein_kron,
    stein_residual,
    spectral_radius,
)
from .quartet import (
    SteinQuartet,
    identity_gaps,
    stein_quartet,
    driving_vector,
    information_from_h,
    gramian_from_q,
    is_positive_definite,
)
