"""Robust regression for imprecisely observed data modeled as uncertain variables.

Fits model parameters under the least-absolute-deviations and least-squares
principles by minimizing integrals of inverse uncertainty distributions, and
produces error-moment estimates, point forecasts, and prediction intervals.
"""

from ._core import (
    Dataset,
    DistKind,
    QuadratureRule,
    RegularDistribution,
    UregressError,
    bench_paper,
    exact_linear_lad_objective,
    expected_abs,
    expected_square,
    expected_value,
    fit,
    integrate,
    objective_value,
    predict,
    predict_crisp,
    table1,
    table2_model,
)

__all__ = [
    "Dataset",
    "DistKind",
    "QuadratureRule",
    "RegularDistribution",
    "UregressError",
    "bench_paper",
    "exact_linear_lad_objective",
    "expected_abs",
    "expected_square",
    "expected_value",
    "fit",
    "integrate",
    "objective_value",
    "predict",
    "predict_crisp",
    "table1",
    "table2_model",
]

__version__ = "0.1.0"
