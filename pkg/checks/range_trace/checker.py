# -*- coding: utf-8 -*-
"""
On R_i, H has the spectrum of sector i - k, for k <= i <= v/2.
"""

from spectral import verify_range_trace

from ..base import BaseCheck, CheckResult, VerifyContext, describe_failures

TOLERANCE = 1e-10


class RangeTraceCheck(BaseCheck):
    def __init__(self):
        super().__init__("range_trace")

    def run(self, context: VerifyContext) -> CheckResult:
        cap = set(context.sectors_within_cap())
        top = context.lattice.v // 2
        sectors = [i for i in range(context.step, top + 1) if i in cap and i - context.step in cap]
        if not sectors:
            return self._skip(f"no sector with step={context.step} <= i <= {top} within the dimension cap")

        residuals, failures = [], []
        for i in sectors:
            result = verify_range_trace(
                context.lattice, i, context.step, context.betas,
                split=context.split(i), lower=context.spectrum(i - context.step),
            )
            residuals.append(result.max_relative_residual)
            if result.max_relative_residual > TOLERANCE or not result.spectra_match:
                failures.append(
                    f"i={i} residual {result.max_relative_residual:.3e}, "
                    f"spectral deviation {result.max_spectral_deviation:.3e}"
                )

        detail = describe_failures(failures) or f"sectors {sectors[0]}..{sectors[-1]}"
        return self._result(not failures, self._worst(residuals), detail)
