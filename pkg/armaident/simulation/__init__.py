# armaident/simulation/__init__.py

from .mc_oracle import (
    Realization,
    SimConfig,
    EmpiricalInfo,
    gaussian_noise,
    score_path,
    simulate_score_covariance,
    stationary_recursion_check,
)
