# -*- coding: utf-8 -*-
"""
The kernel and range portions add up to the full sector trace.
"""

from spectral import sector_trace, split_trace

from ..base import BaseCheck, CheckResult, VerifyContext, describe_failures

TOLERANCE = 1e-10


class TraceAdditivityCheck(BaseCheck):
    def __init__(self):
        super().__init__("additivity")

    def run(self, context: VerifyContext) -> CheckResult:
        cap = set(context.sectors_within_cap())
        sectors = [i for i in sorted(cap) if i >= context.step and i - context.step in cap]
        if not sectors:
            return self._skip(f"no sector i >= step={context.step} within the dimension cap")

        residuals, failures = [], []
        for i in sectors:
            split = context.split(i)
            spectrum = context.spectrum(i)
            for beta in context.betas:
                tr1, tr2 = split_trace(context.lattice, i, context.step, beta, split=split)
                full = sector_trace(spectrum, beta)
                residual = abs(tr1 + tr2 - full) / full
                residuals.append(residual)
                if residual > TOLERANCE:
                    failures.append(f"(i={i}, beta={beta!r}) residual {residual:.3e}")

        detail = describe_failures(failures) or f"{len(sectors)} sectors x {len(context.betas)} betas"
        return self._result(not failures, self._worst(residuals), detail)
