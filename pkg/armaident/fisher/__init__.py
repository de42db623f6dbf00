# armaident/fisher/__init__.py

from .information import (
    ArmaModel,
    FisherFactorization,
    IdentReport,
    Verdict,
    fisher_solution,
    fisher_information,
    fisher_factorization,
    cramer_rao_bound,
    identifiability_report,
)
from .report import render_report
