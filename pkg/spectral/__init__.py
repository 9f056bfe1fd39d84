"""
Spectra, exact ranks, kernel/range splits and sector traces
"""

from .eigen import Spectrum, compute_spectra, eigendecompose, spectra_table, symmetric_eigenvalues, zero_mode_count
from .exact_rank import exact_rank
from .kernel import KernelSplit, kernel_split
from .traces import RangeTraceResult, sector_trace, sector_traces, split_trace, verify_range_trace

__all__ = [
    "Spectrum",
    "compute_spectra",
    "eigendecompose",
    "spectra_table",
    "symmetric_eigenvalues",
    "zero_mode_count",
    "exact_rank",
    "KernelSplit",
    "kernel_split",
    "RangeTraceResult",
    "sector_trace",
    "sector_traces",
    "split_trace",
    "verify_range_trace",
]
