# -*- coding: utf-8 -*-
"""
Heisenberg Hamiltonian restricted to one spin-wave sector.

H = sum over edges (1 - I_ij), I_ij swapping the spins at i and j. On the
subset basis an edge with differing occupations adds +1 on the diagonal and
-1 between S and the subset with i, j exchanged; equal occupations are fixed
by the swap and contribute nothing.
"""

from typing import List, Tuple

import numpy as np
import scipy.sparse

from lattice import Lattice
from sector_basis import SectorBasis
from utils.errors import CapacityError, ValidationError
from utils.log import get_logger

logger = get_logger(__name__)

DEFAULT_MAX_DENSE_DIM = 20000


def check_dimension_cap(dim: int, max_dim: int, what: str) -> None:
    """Raise CapacityError when a dense block of size dim is over the cap; None disables it"""
    if max_dim is not None and dim > max_dim:
        raise CapacityError(f"{what}: dimension {dim} exceeds max_dense_dim={max_dim}")


def _edge_swaps(lattice: Lattice, basis: SectorBasis) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Per edge: rows whose occupations differ across it, and the swapped partners' rows"""
    occupation = basis.occupation
    swaps = []
    for i, j in lattice.edges:
        rows = np.nonzero(occupation[:, i] != occupation[:, j])[0]
        flip = np.uint64((1 << i) | (1 << j))
        partners = basis.index_of(basis.states[rows] ^ flip)
        swaps.append((rows, partners))
    return swaps


class SectorOperator:
    """H on the r sector as an int64 CSR matrix with sorted column indices"""

    def __init__(self, lattice: Lattice, basis: SectorBasis, matrix: scipy.sparse.csr_matrix):
        self.lattice = lattice
        self.basis = basis
        self.matrix = matrix

    @property
    def r(self) -> int:
        return self.basis.r

    @property
    def dim(self) -> int:
        return self.basis.dim

    def __repr__(self) -> str:
        return f"SectorOperator({self.lattice.label}, r={self.r}, dim={self.dim}, nnz={self.matrix.nnz})"

    def to_dense(self, dtype=np.float64) -> np.ndarray:
        return self.matrix.toarray().astype(dtype)

    def is_symmetric(self) -> bool:
        return (self.matrix != self.matrix.T).nnz == 0

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).ravel()

    def copy(self) -> "SectorOperator":
        return SectorOperator(self.lattice, self.basis, self.matrix.copy())


def assemble_hamiltonian(lattice: Lattice, r: int, max_dim: int = DEFAULT_MAX_DENSE_DIM) -> SectorOperator:
    """Assemble the sector-r block of H"""
    if not 0 <= r <= lattice.v:
        raise ValidationError(f"sector: r={r} outside 0..{lattice.v}")
    basis = SectorBasis(lattice.v, r)
    check_dimension_cap(basis.dim, max_dim, f"hamiltonian sector r={r}")

    diagonal = np.zeros(basis.dim, dtype=np.int64)
    off_rows = [np.empty(0, dtype=np.int64)]
    off_cols = [np.empty(0, dtype=np.int64)]
    for rows, partners in _edge_swaps(lattice, basis):
        diagonal[rows] += 1
        off_rows.append(rows)
        off_cols.append(partners)

    off_rows = np.concatenate(off_rows)
    off_cols = np.concatenate(off_cols)
    rows = np.concatenate([np.arange(basis.dim, dtype=np.int64), off_rows])
    cols = np.concatenate([np.arange(basis.dim, dtype=np.int64), off_cols])
    data = np.concatenate([diagonal, -np.ones(off_rows.size, dtype=np.int64)])

    matrix = scipy.sparse.csr_matrix((data, (rows, cols)), shape=(basis.dim, basis.dim), dtype=np.int64)
    matrix.eliminate_zeros()
    matrix.sort_indices()
    logger.debug("assembled H r=%d on %s: dim=%d nnz=%d", r, lattice.label, basis.dim, matrix.nnz)
    return SectorOperator(lattice, basis, matrix)


def apply_hamiltonian(lattice: Lattice, r: int, x) -> np.ndarray:
    """Matrix-free H x on the r sector; integer input stays integer"""
    if not 0 <= r <= lattice.v:
        raise ValidationError(f"sector: r={r} outside 0..{lattice.v}")
    basis = SectorBasis(lattice.v, r)
    x = np.asarray(x)
    if x.shape != (basis.dim,):
        raise ValidationError(f"apply_hamiltonian: vector length {x.shape} != C({lattice.v},{r}) = {basis.dim}")

    y = np.zeros(basis.dim, dtype=np.result_type(x.dtype, np.int64))
    for rows, partners in _edge_swaps(lattice, basis):
        y[rows] += x[rows] - x[partners]
    return y
