# -*- coding: utf-8 -*-
"""
H in spin form, -sum_{i~j} 1/2 (sigma_i . sigma_j - 1), on the full 2^v space.

Used only to confirm that the swap form assembled sector by sector is the
same operator and that nothing couples different sectors. Site i is bit i of
the basis index. sigma_i . sigma_j is unchanged by relabelling up/down on
every site, so it does not matter which local state is bit value 1.
"""

from functools import reduce
from typing import Tuple

import numpy as np
import scipy.sparse

from lattice import Lattice
from utils.errors import CapacityError, SpectralError

from .hamiltonian import assemble_hamiltonian

MAX_PAULI_VERTICES = 12

IDENTITY = scipy.sparse.identity(2, dtype=complex, format="csr")
PAULI = (
    scipy.sparse.csr_matrix(np.array([[0, 1], [1, 0]], dtype=complex)),
    scipy.sparse.csr_matrix(np.array([[0, -1j], [1j, 0]], dtype=complex)),
    scipy.sparse.csr_matrix(np.array([[1, 0], [0, -1]], dtype=complex)),
)


def _two_site(op: scipy.sparse.csr_matrix, i: int, j: int, v: int) -> scipy.sparse.csr_matrix:
    # kron runs from the highest site down so that site k lands on bit k
    factors = [op if site in (i, j) else IDENTITY for site in range(v - 1, -1, -1)]
    return reduce(lambda a, b: scipy.sparse.kron(a, b, format="csr"), factors)


def pauli_hamiltonian(lattice: Lattice) -> scipy.sparse.csr_matrix:
    """Real 2^v x 2^v matrix of H built from Pauli matrices"""
    v = lattice.v
    if v > MAX_PAULI_VERTICES:
        raise CapacityError(f"pauli form: v={v} exceeds {MAX_PAULI_VERTICES} vertices")
    full = 2 ** v
    ham = scipy.sparse.csr_matrix((full, full), dtype=complex)
    identity = scipy.sparse.identity(full, dtype=complex, format="csr")
    for i, j in lattice.edges:
        dot = reduce(lambda a, b: a + b, [_two_site(sigma, i, j, v) for sigma in PAULI])
        ham = ham - 0.5 * (dot - identity)
    ham = ham.tocsr()
    if ham.nnz and np.abs(ham.data.imag).max() > 0:
        raise SpectralError("pauli form: Hamiltonian has an imaginary part")
    real = scipy.sparse.csr_matrix(ham.real)
    real.eliminate_zeros()
    return real


def check_pauli_form(lattice: Lattice) -> Tuple[bool, float]:
    """Compare the spin form with the block diagonal of the sector operators, exactly"""
    full = pauli_hamiltonian(lattice)
    blocks = [assemble_hamiltonian(lattice, r, max_dim=None) for r in range(lattice.v + 1)]
    order = np.concatenate([op.basis.states.astype(np.int64) for op in blocks])
    permuted = full[order][:, order]
    block_diagonal = scipy.sparse.block_diag([op.matrix.astype(np.float64) for op in blocks], format="csr")
    diff = (permuted - block_diagonal).tocsr()
    diff.eliminate_zeros()
    residual = float(np.abs(diff.data).max()) if diff.nnz else 0.0
    return residual == 0.0, residual
