# -*- coding: utf-8 -*-
"""
Verification suite: runs every registered check on one lattice
"""

from typing import Dict, List

from utils.log import get_logger

from .additivity.checker import TraceAdditivityCheck
from .base import BaseCheck, CheckResult, VerifyContext
from .composition.checker import CompositionCheck
from .intertwining.checker import IntertwiningCheck
from .multiplet.checker import MultipletCheck
from .pauli.checker import PauliFormCheck
from .range_trace.checker import RangeTraceCheck

logger = get_logger(__name__)


class VerificationSuite:
    """Coordinates all checks; one failing or crashing check never hides the others"""

    def __init__(self):
        self.checks: Dict[str, BaseCheck] = {
            'intertwining': IntertwiningCheck(),
            'composition': CompositionCheck(),
            'additivity': TraceAdditivityCheck(),
            'range_trace': RangeTraceCheck(),
            'multiplet': MultipletCheck(),
            'pauli': PauliFormCheck(),
        }

    def add_check(self, name: str, check: BaseCheck) -> None:
        self.checks[name] = check

    def run_all(self, context: VerifyContext) -> List[CheckResult]:
        logger.info("Verifying identities on %s (v=%d, step=%d)", context.lattice.label, context.lattice.v, context.step)
        results = []
        for name, check in self.checks.items():
            try:
                result = check.run(context)
            except Exception as e:
                result = CheckResult(name=name, passed=False, residual=float("nan"), detail=f"ERROR {type(e).__name__}: {e}")

            if result.skipped:
                logger.info("  SKIPPED %s: %s", name, result.detail)
            elif result.passed:
                logger.info("  SUCCESS %s: residual %.3e, %s", name, result.residual, result.detail)
            else:
                logger.error("  FAIL %s: %s", name, result.detail)
            results.append(result)
        return results
