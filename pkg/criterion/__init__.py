"""
Magnetism Criterion evaluation and the kernel-trace inequality probe
"""

from .config import CriterionConfig
from .evaluator import (
    CriterionEvaluator,
    FullTraceReport,
    evaluate_criterion,
    full_trace_consistency,
    probe_kernel_bound,
)
from .report import CriterionReport

__all__ = [
    "CriterionConfig",
    "CriterionEvaluator",
    "CriterionReport",
    "FullTraceReport",
    "evaluate_criterion",
    "full_trace_consistency",
    "probe_kernel_bound",
]
