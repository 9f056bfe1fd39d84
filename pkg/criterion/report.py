# -*- coding: utf-8 -*-
"""
CriterionReport: the (beta, i) table of both inequalities plus a summary.

A passing report is evidence for the finite lattice it was computed on; the
criterion's "for some M0, v >= M0" cannot be settled by any finite run.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import pandas as pd

ROW_COLUMNS = [
    "beta", "sector", "lower_sector",
    "trace", "lower_trace", "criterion_margin", "pass_criterion",
    "trace_kernel", "trace_range", "kernel_margin", "pass_kernel",
    "consistency_residual",
]

DISCLAIMER = (
    "Per-lattice numerical evidence only: the criterion quantifies over all "
    "large lattices, which no finite computation decides."
)


@dataclass
class CriterionReport:
    lattice: str
    v: int
    step: int
    factor: float
    betas: List[float]
    sectors: List[int]
    rows: pd.DataFrame
    first_passing_beta: Optional[float]
    beta0_candidate: Optional[float]
    counterexamples: List[Dict] = field(default_factory=list)
    max_consistency_residual: float = 0.0
    consistent: bool = True

    @property
    def all_pass_criterion(self) -> bool:
        return bool(self.rows["pass_criterion"].all())

    @property
    def all_pass_kernel(self) -> bool:
        return bool(self.rows["pass_kernel"].all())

    def summary(self) -> Dict:
        return {
            "lattice": self.lattice,
            "v": self.v,
            "step": self.step,
            "factor": self.factor,
            "betas": list(self.betas),
            "sectors": list(self.sectors),
            "all_pass_criterion": self.all_pass_criterion,
            "all_pass_kernel": self.all_pass_kernel,
            "first_passing_beta": self.first_passing_beta,
            "beta0_candidate": self.beta0_candidate,
            "kernel_counterexamples": len(self.counterexamples),
            "max_consistency_residual": self.max_consistency_residual,
            "consistent": self.consistent,
            "note": DISCLAIMER,
        }

    def to_dict(self) -> Dict:
        return {
            "summary": self.summary(),
            "rows": self.rows.to_dict(orient="records"),
            "counterexamples": list(self.counterexamples),
        }
