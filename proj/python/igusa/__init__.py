"""Exact Igusa-type local zeta functions on non-degenerate complete intersections."""

import json as _json

from ._igusa import (
    BudgetExceeded,
    DomainError,
    Error,
    HypothesisError,
    ParseError,
    RatFun,
    ZetaReport,
    check_nondegenerate,
    congruence_counts,
    exp_sum,
    geometric_tail,
    poincare_series,
    zeta,
    zeta0,
)
from ._igusa import run_job as _run_job


def run_job(text):
    """Run a job file's text. Returns (exit_code, report dict, text summary)."""
    code, report, summary = _run_job(text)
    return code, _json.loads(report), summary


__all__ = [
    "BudgetExceeded",
    "DomainError",
    "Error",
    "HypothesisError",
    "ParseError",
    "RatFun",
    "ZetaReport",
    "check_nondegenerate",
    "congruence_counts",
    "exp_sum",
    "geometric_tail",
    "poincare_series",
    "run_job",
    "zeta",
    "zeta0",
]
