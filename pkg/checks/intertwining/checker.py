# -*- coding: utf-8 -*-
"""
H_s T^{r,s} = T^{r,s} H_r for every pair s <= r, in exact integer arithmetic.
With inject_fault one off-diagonal entry of the largest sector block is
bumped by one before checking, which must make the check fail.
"""

import numpy as np
import scipy.sparse

from operators import SectorOperator, check_intertwining
from utils.log import get_logger

from ..base import BaseCheck, CheckResult, VerifyContext, describe_failures

logger = get_logger(__name__)


def corrupt(op: SectorOperator) -> SectorOperator:
    """Copy of op with entry (0, 1) (or (0, 0) on a 1-dim sector) raised by one"""
    col = min(1, op.dim - 1)
    bump = scipy.sparse.csr_matrix(([1], ([0], [col])), shape=op.matrix.shape, dtype=np.int64)
    bad = op.copy()
    bad.matrix = (bad.matrix + bump).tocsr()
    return bad


class IntertwiningCheck(BaseCheck):
    def __init__(self):
        super().__init__("intertwining")

    def run(self, context: VerifyContext) -> CheckResult:
        pairs = self._sector_pairs(context)
        if not pairs:
            return self._skip("no sector within the dimension cap")

        faulty = None
        if context.inject_fault:
            faulty = max((r for r, _ in pairs), key=lambda r: (context.hamiltonian(r).dim, r))
            logger.info("injecting a fault into H on sector %d", faulty)

        residuals, failures = [], []
        for r, s in pairs:
            source = context.hamiltonian(r)
            target = context.hamiltonian(s)
            if r == faulty:
                source = corrupt(source)
            result = check_intertwining(context.lattice, r, s, context.max_dim, h_source=source, h_target=target)
            residuals.append(result.residual)
            if not result.holds:
                failures.append(f"(r={r}, s={s}) residual {result.residual}")

        detail = describe_failures(failures) or f"{len(pairs)} sector pairs exact"
        return self._result(not failures, self._worst(residuals), detail)
