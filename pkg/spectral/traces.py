# -*- coding: utf-8 -*-
"""
Sector traces Tr(V, beta, i) and the kernel/range split Tr1 + Tr2.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from lattice import Lattice
from operators import DEFAULT_MAX_DENSE_DIM, assemble_hamiltonian
from utils.log import get_logger

from .eigen import Spectrum, compute_spectra, eigendecompose
from .kernel import KernelSplit, kernel_split

logger = get_logger(__name__)

SPECTRAL_MATCH_TOL = 1e-8


def sector_trace(spectrum: Union[Spectrum, np.ndarray, Sequence[float]], beta: float) -> float:
    """sum of exp(-beta * lambda), taken in ascending eigenvalue order"""
    if beta < 0:
        logger.warning("sector_trace called with negative beta=%r", beta)
    values = spectrum.eigenvalues if isinstance(spectrum, Spectrum) else np.asarray(spectrum, dtype=float)
    return math.fsum(np.exp(-beta * np.sort(values)))


def split_trace(
    lattice: Lattice,
    i: int,
    k: int,
    beta: float,
    max_dim: int = DEFAULT_MAX_DENSE_DIM,
    split: Optional[KernelSplit] = None,
) -> Tuple[float, float]:
    """(Tr1, Tr2): the kernel and range portions of Tr(V, beta, i)"""
    split = split if split is not None else kernel_split(lattice, i, k, max_dim)
    return sector_trace(split.kernel_eigenvalues, beta), sector_trace(split.range_eigenvalues, beta)


@dataclass
class RangeTraceResult:
    """Tr2(beta, i) against Tr(beta, i - k), plus the spectrum-level comparison"""

    i: int
    k: int
    max_relative_residual: float
    spectra_match: bool
    max_spectral_deviation: float
    rows: List[Dict] = field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=["beta", "sector", "lower_sector", "trace_range", "lower_trace", "relative_residual"])


def verify_range_trace(
    lattice: Lattice,
    i: int,
    k: int,
    betas: Sequence[float],
    max_dim: int = DEFAULT_MAX_DENSE_DIM,
    split: Optional[KernelSplit] = None,
    lower: Optional[Spectrum] = None,
) -> RangeTraceResult:
    """Check that H on R_i looks like H on sector i-k, trace by trace and eigenvalue by eigenvalue"""
    split = split if split is not None else kernel_split(lattice, i, k, max_dim)
    lower = lower if lower is not None else eigendecompose(assemble_hamiltonian(lattice, i - k, max_dim), max_dim)

    rows = []
    worst = 0.0
    for beta in betas:
        tr2 = sector_trace(split.range_eigenvalues, beta)
        reference = sector_trace(lower, beta)
        residual = abs(tr2 - reference) / reference
        worst = max(worst, residual)
        rows.append({
            "beta": float(beta),
            "sector": i,
            "lower_sector": i - k,
            "trace_range": tr2,
            "lower_trace": reference,
            "relative_residual": residual,
        })

    if split.range_eigenvalues.size == lower.dim:
        deviation = float(np.abs(np.sort(split.range_eigenvalues) - lower.eigenvalues).max()) if lower.dim else 0.0
        match = deviation <= SPECTRAL_MATCH_TOL
    else:
        deviation = math.inf
        match = False
        logger.warning(
            "R_%d has dimension %d but sector %d has %d: range spectrum cannot match",
            i, split.range_eigenvalues.size, i - k, lower.dim,
        )
    return RangeTraceResult(i=i, k=k, max_relative_residual=worst, spectra_match=match,
                      max_spectral_deviation=deviation, rows=rows)


def sector_traces(
    lattice: Lattice,
    betas: Sequence[float],
    sectors: Optional[Sequence[int]] = None,
    max_dim: int = DEFAULT_MAX_DENSE_DIM,
    threads: int = 1,
    spectra: Optional[Dict[int, Spectrum]] = None,
) -> pd.DataFrame:
    """Long table of Tr(V, beta, r): beta, sector, dimension, trace"""
    sectors = list(range(lattice.v + 1)) if sectors is None else sorted(set(sectors))
    spectra = spectra if spectra is not None else compute_spectra(lattice, sectors, max_dim, threads)
    rows = [
        {"beta": float(beta), "sector": r, "dimension": spectra[r].dim, "trace": sector_trace(spectra[r], beta)}
        for beta in betas
        for r in sectors
    ]
    return pd.DataFrame(rows, columns=["beta", "sector", "dimension", "trace"])
