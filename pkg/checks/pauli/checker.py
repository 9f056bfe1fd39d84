# -*- coding: utf-8 -*-
"""
The Pauli-matrix Hamiltonian, permuted into sector blocks, equals the block
diagonal of the swap-form sector operators.
"""

from operators import check_pauli_form
from operators.pauli import MAX_PAULI_VERTICES

from ..base import BaseCheck, CheckResult, VerifyContext


class PauliFormCheck(BaseCheck):
    def __init__(self):
        super().__init__("pauli")

    def run(self, context: VerifyContext) -> CheckResult:
        if context.lattice.v > MAX_PAULI_VERTICES:
            return self._skip(f"v={context.lattice.v} above {MAX_PAULI_VERTICES} vertices")
        holds, residual = check_pauli_form(context.lattice)
        return self._result(holds, residual, "full 2^v matrix matches the sector blocks" if holds else "blocks differ")
