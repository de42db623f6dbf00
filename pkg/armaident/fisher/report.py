# armaident/fisher/report.py

"""
Human-readable identifiability report.
"""

from typing import List

import pandas as pd

from .information import IdentReport


def _parameter_labels(p: int, q: int) -> List[str]:
    return [f"a{k}" for k in range(1, p + 1)] + [f"c{k}" for k in range(1, q + 1)]


def _format_root(root: complex) -> str:
    if root.imag == 0.0:
        return f"{root.real:.10g}"
    return f"{root.real:.10g}{root.imag:+.10g}j"


def render_report(report: IdentReport, p: int, q: int) -> str:
    """Render summary, detector votes, the Fisher matrix and any common zeros as text tables."""
    labels = _parameter_labels(p, q)

    summary = pd.Series(
        {
            "verdict": report.verdict.value + (" (borderline)" if report.borderline else ""),
            "rank": f"{report.rank} of {report.dim}",
            "det R(c,-a)": f"{report.resultant_det:.6e}",
            "det from zeros": f"{report.resultant_det_from_roots:.6e}",
            "bezout rank": "n/a (p != q)" if report.bezout_rank is None else f"{report.bezout_rank} of {p}",
            "sigma gap": "-" if report.singular_value_gap is None else f"{report.singular_value_gap:.3e}",
        },
        name="value",
    )

    detectors = pd.DataFrame(
        {"verdict": [v.value for v in report.detectors.values()]},
        index=list(report.detectors.keys()),
    )

    fisher = pd.DataFrame(report.fisher, index=labels, columns=labels)
    spectrum = pd.Series(report.singular_values, index=[f"s{k}" for k in range(1, len(report.singular_values) + 1)])

    sections = [
        "== identifiability ==",
        summary.to_string(),
        "",
        "== detectors ==",
        detectors.to_string(),
        "",
        "== fisher information ==",
        fisher.to_string(float_format=lambda x: f"{x: .6f}"),
        "",
        "== singular values ==",
        spectrum.to_string(float_format=lambda x: f"{x:.3e}"),
    ]

    if report.common_roots:
        roots = pd.DataFrame(
            {
                "zero": [_format_root(r) for r, _ in report.common_roots],
                "multiplicity": [m for _, m in report.common_roots],
            }
        )
        sections += ["", "== common zeros ==", roots.to_string(index=False)]

    if report.kernel_basis is not None and len(report.kernel_basis):
        basis = report.kernel_basis.as_matrix(p)
        kernel = pd.DataFrame(basis, columns=[f"v{k}" for k in range(1, basis.shape[1] + 1)])
        sections += ["", "== bezout kernel ==", kernel.to_string(float_format=lambda x: f"{x: .6f}")]

    return "\n".join(sections) + "\n"
