# -*- coding: utf-8 -*-
"""
Kernel K_i of T^{i,i-k} inside the i sector and its orthogonal complement R_i.

Both are invariant under H because H commutes with T. The rank of T is found
twice, exactly and from singular values, and the two must agree.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from lattice import Lattice
from operators import DEFAULT_MAX_DENSE_DIM, SectorOperator, assemble_hamiltonian, assemble_intertwiner
from utils.errors import RankMismatchError, SpectralError, ValidationError
from utils.log import get_logger

from .eigen import symmetric_eigenvalues
from .exact_rank import exact_rank

logger = get_logger(__name__)

SINGULAR_VALUE_TOL = 1e-8
ORTHONORMALITY_TOL = 1e-12
INVARIANCE_TOL = 1e-10


@dataclass
class KernelSplit:
    """Orthonormal bases of K_i and R_i with the spectra of H on each"""

    i: int
    k: int
    rank: int
    numeric_rank: int
    kernel_basis: np.ndarray
    range_basis: np.ndarray
    block_residual: float
    orthonormality_error: float
    h_norm: float
    kernel_eigenvalues: np.ndarray
    range_eigenvalues: np.ndarray

    @property
    def s(self) -> int:
        return self.i - self.k

    @property
    def dim(self) -> int:
        return self.rank + self.kernel_dim

    @property
    def kernel_dim(self) -> int:
        return int(self.kernel_basis.shape[1])


def _project(h: np.ndarray, basis: np.ndarray) -> np.ndarray:
    block = basis.T @ h @ basis
    return 0.5 * (block + block.T)


def kernel_split(
    lattice: Lattice,
    i: int,
    k: int,
    max_dim: int = DEFAULT_MAX_DENSE_DIM,
    hamiltonian: Optional[SectorOperator] = None,
) -> KernelSplit:
    """Split sector i into ker T^{i,i-k} and its complement"""
    if k < 0 or i - k < 0 or i > lattice.v:
        raise ValidationError(f"kernel split: need 0 <= i-k and k >= 0, i <= v; got i={i}, k={k}, v={lattice.v}")
    op = hamiltonian if hamiltonian is not None else assemble_hamiltonian(lattice, i, max_dim)
    h = op.to_dense()
    dim = op.dim

    if k == 0:
        # T^{i,i} is the identity: nothing in the kernel, R_i is the whole sector
        identity = np.eye(dim)
        return KernelSplit(
            i=i, k=0, rank=dim, numeric_rank=dim,
            kernel_basis=np.zeros((dim, 0)), range_basis=identity,
            block_residual=0.0, orthonormality_error=0.0,
            h_norm=float(np.linalg.norm(h, 2)) if dim else 0.0,
            kernel_eigenvalues=np.empty(0), range_eigenvalues=symmetric_eigenvalues(h),
        )

    t = assemble_intertwiner(lattice.v, i, i - k, max_dim).to_dense()
    rank = exact_rank(t)
    try:
        _, sigma, vt = scipy.linalg.svd(t.astype(np.float64), full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"SVD of T^({i},{i - k}) did not converge: {exc}")
    sigma_max = float(sigma[0]) if sigma.size else 0.0
    numeric_rank = int(np.count_nonzero(sigma > SINGULAR_VALUE_TOL * sigma_max))
    if numeric_rank != rank:
        raise RankMismatchError(
            f"T^({i},{i - k}) on {lattice.label}: exact rank {rank} but {numeric_rank} singular values above tolerance"
        )

    range_basis = vt[:rank].T
    kernel_basis = vt[rank:].T
    combined = np.hstack([range_basis, kernel_basis])
    orthonormality_error = float(np.abs(combined.T @ combined - np.eye(dim)).max())
    if orthonormality_error > ORTHONORMALITY_TOL:
        raise SpectralError(f"kernel split i={i}, k={k}: bases off orthonormal by {orthonormality_error:.3e}")

    h_norm = float(np.linalg.norm(h, 2))
    block_residual = float(np.linalg.norm(range_basis.T @ h @ kernel_basis, 2)) if rank and rank < dim else 0.0
    if block_residual > INVARIANCE_TOL * max(h_norm, 1.0):
        raise SpectralError(f"kernel split i={i}, k={k}: H leaks out of the kernel by {block_residual:.3e}")

    logger.debug("split i=%d k=%d on %s: rank %d, kernel %d", i, k, lattice.label, rank, dim - rank)
    return KernelSplit(
        i=i, k=k, rank=rank, numeric_rank=numeric_rank,
        kernel_basis=kernel_basis, range_basis=range_basis,
        block_residual=block_residual, orthonormality_error=orthonormality_error, h_norm=h_norm,
        kernel_eigenvalues=symmetric_eigenvalues(_project(h, kernel_basis)),
        range_eigenvalues=symmetric_eigenvalues(_project(h, range_basis)),
    )
