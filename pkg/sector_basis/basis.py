# -*- coding: utf-8 -*-
"""
Colexicographic indexing of r-element vertex subsets.

A subset S is a bitmask, bit i set meaning spin up at vertex i. For sorted
elements s_1 < ... < s_r the rank is sum_j C(s_j, j); colex order coincides
with numeric order of the masks, so a sector's states sorted ascending are
exactly unrank(0), unrank(1), ...
"""

from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, List

import numpy as np

from utils.errors import CapacityError, ValidationError

from .binomial import BINOMIAL_CAP, binomial


def mask_from_subset(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << int(e)
    return mask


def subset_from_mask(mask: int) -> List[int]:
    out = []
    pos = 0
    while mask:
        if mask & 1:
            out.append(pos)
        mask >>= 1
        pos += 1
    return out


def rank(mask: int, r: int) -> int:
    """Colex rank of an r-subset given as a bitmask"""
    mask = int(mask)
    if mask < 0 or bin(mask).count("1") != r:
        raise ValidationError(f"rank: subset {subset_from_mask(mask)} does not have cardinality {r}")
    index = 0
    for j, element in enumerate(subset_from_mask(mask), start=1):
        index += binomial(element, j)
    return index


def unrank(k: int, v: int, r: int) -> int:
    """Bitmask of the r-subset of range(v) with colex rank k"""
    if not 0 <= r <= v:
        raise ValidationError(f"unrank: sector r={r} outside 0..{v}")
    if not 0 <= k < binomial(v, r):
        raise ValidationError(f"unrank: index {k} outside [0, C({v},{r}) = {binomial(v, r)})")
    mask = 0
    top = v - 1
    for j in range(r, 0, -1):
        while binomial(top, j) > k:
            top -= 1
        mask |= 1 << top
        k -= binomial(top, j)
        top -= 1
    return mask


def enumerate_subsets_of(mask: int, s: int) -> Iterator[int]:
    """All s-subsets of the subset `mask`, in lexicographic order of elements"""
    elements = subset_from_mask(int(mask))
    if not 0 <= s <= len(elements):
        raise ValidationError(f"enumerate_subsets_of: s={s} outside 0..{len(elements)}")
    for combo in combinations(elements, s):
        yield mask_from_subset(combo)


class SectorBasis:
    """The C(v, r) basis states of the r spin-wave sector"""

    def __init__(self, v: int, r: int):
        if not 0 < v <= BINOMIAL_CAP:
            raise CapacityError(f"sector basis: v={v} outside 1..{BINOMIAL_CAP}")
        if not 0 <= r <= v:
            raise ValidationError(f"sector: r={r} outside 0..{v}")
        self.v = v
        self.r = r
        self.dim = binomial(v, r)

    def __repr__(self) -> str:
        return f"SectorBasis(v={self.v}, r={self.r}, dim={self.dim})"

    @cached_property
    def states(self) -> np.ndarray:
        """uint64 masks in colex (= ascending numeric) order"""
        masks = np.fromiter(
            (mask_from_subset(c) for c in combinations(range(self.v), self.r)),
            dtype=np.uint64,
            count=self.dim,
        )
        masks.sort()
        return masks

    @cached_property
    def occupation(self) -> np.ndarray:
        """Boolean (dim, v) table: row a, column i true iff vertex i is up in state a"""
        shifts = np.arange(self.v, dtype=np.uint64)
        return ((self.states[:, None] >> shifts) & np.uint64(1)).astype(bool)

    @cached_property
    def positions(self) -> np.ndarray:
        """(dim, r) sorted up-vertex positions of every state"""
        return np.nonzero(self.occupation)[1].reshape(self.dim, self.r)

    def index_of(self, masks: np.ndarray) -> np.ndarray:
        """Vectorized rank of masks known to belong to this sector"""
        masks = np.asarray(masks, dtype=np.uint64)
        idx = np.searchsorted(self.states, masks)
        if idx.size and (np.any(idx >= self.dim) or np.any(self.states[np.minimum(idx, self.dim - 1)] != masks)):
            raise ValidationError(f"masks do not belong to sector r={self.r} of v={self.v}")
        return idx.astype(np.int64)

    def rank(self, mask: int) -> int:
        if int(mask) >> self.v:
            raise ValidationError(f"rank: subset has bits above vertex {self.v - 1}")
        return rank(mask, self.r)

    def unrank(self, k: int) -> int:
        return unrank(k, self.v, self.r)
