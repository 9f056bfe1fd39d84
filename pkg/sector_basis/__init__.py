"""
Subset-indexed basis of the spin-wave sectors
"""

from .binomial import BINOMIAL_CAP, binomial
from .basis import SectorBasis, enumerate_subsets_of, mask_from_subset, rank, subset_from_mask, unrank

__all__ = [
    "BINOMIAL_CAP",
    "binomial",
    "SectorBasis",
    "enumerate_subsets_of",
    "mask_from_subset",
    "rank",
    "subset_from_mask",
    "unrank",
]
