# armaident/statespace/__init__.py

from .realization import (
    ScoreSystem,
    TransformedPair,
    StabilityReport,
    companion,
    build_score_system,
    transfer_tau,
    transfer_from_realization,
    controllability_matrix,
    observability_matrix,
    uncontrollable_direction,
    transformed_pair,
    stability_check,
    characteristic_coefficients,
)
