# -*- coding: utf-8 -*-
"""
Composition of intertwiners counts the chains S < S'' < S'.
"""

from functools import lru_cache

from operators import assemble_intertwiner, compose_intertwiners

from ..base import BaseCheck, CheckResult, VerifyContext, describe_failures


class CompositionCheck(BaseCheck):
    def __init__(self):
        super().__init__("composition")

    def run(self, context: VerifyContext) -> CheckResult:
        sectors = context.sectors_within_cap()
        if not sectors:
            return self._skip("no sector within the dimension cap")

        @lru_cache(maxsize=None)
        def intertwiner(r: int, s: int):
            return assemble_intertwiner(context.lattice.v, r, s, context.max_dim)

        residuals, failures, count = [], [], 0
        for r in sectors:
            for s in (x for x in sectors if x <= r):
                for t in (x for x in sectors if x <= s):
                    result = compose_intertwiners(intertwiner(s, t), intertwiner(r, s))
                    residuals.append(result.residual)
                    count += 1
                    if not result.holds:
                        failures.append(f"(r={r}, s={s}, t={t})")

        detail = describe_failures(failures) or f"{count} triples exact"
        return self._result(not failures, self._worst(residuals), detail)
