# -*- coding: utf-8 -*-
"""
Dense symmetric eigensolves of sector operators.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Optional

import numpy as np
import pandas as pd
import scipy.linalg

from lattice import Lattice
from operators import DEFAULT_MAX_DENSE_DIM, SectorOperator, assemble_hamiltonian
from operators.hamiltonian import check_dimension_cap
from sector_basis import binomial
from utils.errors import SpectralError
from utils.log import get_logger

logger = get_logger(__name__)

ZERO_EIGENVALUE_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-10


@dataclass
class Spectrum:
    """Ascending eigenvalues of H on sector r"""

    r: int
    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray] = None
    reconstruction_residual: Optional[float] = None

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.size)


def symmetric_eigenvalues(dense: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a dense real symmetric matrix"""
    if dense.size == 0:
        return np.empty(0)
    try:
        return scipy.linalg.eigh(dense, eigvals_only=True)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"eigensolver did not converge: {exc}")


def eigendecompose(
    op: SectorOperator, max_dim: int = DEFAULT_MAX_DENSE_DIM, vectors: bool = False
) -> Spectrum:
    """Full spectrum of one sector block"""
    check_dimension_cap(op.dim, max_dim, f"eigendecompose sector r={op.r}")
    dense = op.to_dense()

    if not vectors:
        eigenvalues = symmetric_eigenvalues(dense)
        spectrum = Spectrum(r=op.r, eigenvalues=eigenvalues)
    else:
        try:
            eigenvalues, q = scipy.linalg.eigh(dense)
        except np.linalg.LinAlgError as exc:
            raise SpectralError(f"eigensolver did not converge on sector r={op.r}: {exc}")
        residual = float(np.linalg.norm(dense - (q * eigenvalues) @ q.T))
        scale = max(float(np.linalg.norm(dense)), 1.0)
        if residual > RECONSTRUCTION_TOL * scale:
            raise SpectralError(f"sector r={op.r}: reconstruction residual {residual:.3e} too large")
        spectrum = Spectrum(r=op.r, eigenvalues=eigenvalues, eigenvectors=q, reconstruction_residual=residual)

    if spectrum.dim and spectrum.eigenvalues[0] < -ZERO_EIGENVALUE_TOL:
        raise SpectralError(f"sector r={op.r}: negative eigenvalue {spectrum.eigenvalues[0]:.3e}")
    return spectrum


def zero_mode_count(spectrum: Spectrum, tol: float = ZERO_EIGENVALUE_TOL) -> int:
    return int(np.count_nonzero(spectrum.eigenvalues < tol))


def compute_spectra(
    lattice: Lattice,
    sectors: Iterable[int],
    max_dim: int = DEFAULT_MAX_DENSE_DIM,
    threads: int = 1,
) -> Dict[int, Spectrum]:
    """Spectra of several sectors; sectors run as independent tasks"""
    sectors = sorted(set(sectors))
    for r in sectors:
        check_dimension_cap(binomial(lattice.v, r), max_dim, f"sector r={r}")

    def task(r: int) -> Spectrum:
        return eigendecompose(assemble_hamiltonian(lattice, r, max_dim), max_dim)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        spectra = list(pool.map(task, sectors))
    logger.debug("computed %d sector spectra on %s", len(spectra), lattice.label)
    return dict(zip(sectors, spectra))


def spectra_table(spectra: Iterable[Spectrum]) -> pd.DataFrame:
    """Long table: sector, eigenvalue_index, eigenvalue"""
    frames = [
        pd.DataFrame({
            "sector": spectrum.r,
            "eigenvalue_index": np.arange(spectrum.dim),
            "eigenvalue": spectrum.eigenvalues,
        })
        for spectrum in spectra
    ]
    if not frames:
        return pd.DataFrame(columns=["sector", "eigenvalue_index", "eigenvalue"])
    return pd.concat(frames, ignore_index=True)
