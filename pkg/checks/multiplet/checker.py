# -*- coding: utf-8 -*-
"""
One zero mode per sector (v + 1 in all) and sum_i Tr(V, 0, i) = 2^v.
"""

from criterion import full_trace_consistency
from sector_basis import binomial

from ..base import BaseCheck, CheckResult, VerifyContext


class MultipletCheck(BaseCheck):
    def __init__(self):
        super().__init__("multiplet")

    def run(self, context: VerifyContext) -> CheckResult:
        v = context.lattice.v
        if binomial(v, v // 2) > context.max_dim:
            return self._skip("largest sector exceeds the dimension cap")

        report = full_trace_consistency(context.lattice, [0.0] + list(context.betas), context.max_dim, context.threads)
        detail = (
            f"zero modes {report.zero_modes} (expected {v + 1}), "
            f"monotone={report.monotone}, bounded_below={report.bounded_below}"
        )
        return self._result(report.passed, report.dimension_residual, detail)
