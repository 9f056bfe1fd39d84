# -*- coding: utf-8 -*-
"""
Inclusion intertwiners T^{r,s}: (T g)(S) = sum of g(S') over r-supersets S' of S.

All arithmetic here is exact int64; products go through an overflow guard.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np
import scipy.sparse

from lattice import Lattice
from sector_basis import SectorBasis, binomial
from utils.errors import CapacityError, ValidationError

from .hamiltonian import DEFAULT_MAX_DENSE_DIM, SectorOperator, assemble_hamiltonian, check_dimension_cap

INT64_MAX = np.iinfo(np.int64).max


class InclusionOperator:
    """0/1 matrix of shape C(v,s) x C(v,r); entry (S, S') = 1 iff S is inside S'"""

    def __init__(self, v: int, r: int, s: int, matrix: scipy.sparse.csr_matrix):
        self.v = v
        self.r = r
        self.s = s
        self.matrix = matrix

    @property
    def shape(self):
        return self.matrix.shape

    def __repr__(self) -> str:
        return f"InclusionOperator(v={self.v}, r={self.r}, s={self.s}, shape={self.shape})"

    def to_dense(self, dtype=np.int64) -> np.ndarray:
        return self.matrix.toarray().astype(dtype)


def assemble_intertwiner(v: int, r: int, s: int, max_dim: int = DEFAULT_MAX_DENSE_DIM) -> InclusionOperator:
    """Build T^{r,s} column by column: each r-subset feeds all its s-subsets"""
    if not 0 <= s <= r <= v:
        raise ValidationError(f"intertwiner: need 0 <= s <= r <= v, got s={s}, r={r}, v={v}")
    source = SectorBasis(v, r)
    target = SectorBasis(v, s)
    check_dimension_cap(source.dim, max_dim, f"intertwiner source sector r={r}")
    check_dimension_cap(target.dim, max_dim, f"intertwiner target sector s={s}")

    bits = np.uint64(1) << source.positions.astype(np.uint64)
    columns = np.arange(source.dim, dtype=np.int64)
    rows, cols = [], []
    for dropped in combinations(range(r), r - s):
        removed = np.zeros(source.dim, dtype=np.uint64)
        for position in dropped:
            removed |= bits[:, position]
        rows.append(target.index_of(source.states ^ removed))
        cols.append(columns)

    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    data = np.ones(rows.size, dtype=np.int64)
    matrix = scipy.sparse.csr_matrix((data, (rows, cols)), shape=(target.dim, source.dim), dtype=np.int64)
    matrix.sort_indices()
    return InclusionOperator(v, r, s, matrix)


def exact_product(a: scipy.sparse.spmatrix, b: scipy.sparse.spmatrix) -> scipy.sparse.csr_matrix:
    """Integer sparse product, refused when an entry could leave int64"""
    a = scipy.sparse.csr_matrix(a)
    b = scipy.sparse.csr_matrix(b)
    row_bound = int(abs(a).sum(axis=1).max()) if a.nnz else 0
    entry_bound = int(abs(b).max()) if b.nnz else 0
    if row_bound * entry_bound > INT64_MAX:
        raise CapacityError(f"exact product: entries may reach {row_bound * entry_bound}, beyond int64")
    return (a @ b).tocsr()


@dataclass
class Composition:
    """T^{s,t} T^{r,s} and whether it equals C(r-t, s-t) T^{r,t}"""

    r: int
    s: int
    t: int
    factor: int
    product: scipy.sparse.csr_matrix
    holds: bool
    residual: int


def compose_intertwiners(outer: InclusionOperator, inner: InclusionOperator) -> Composition:
    """Compose T^{s,t} after T^{r,s}; every chain S < S'' < S' is counted once"""
    if outer.v != inner.v or outer.r != inner.s or outer.shape[1] != inner.shape[0]:
        raise ValidationError(
            f"compose: shape mismatch, outer {outer.r}->{outer.s} {outer.shape}, "
            f"inner {inner.r}->{inner.s} {inner.shape}"
        )
    r, s, t = inner.r, inner.s, outer.s
    factor = binomial(r - t, s - t)
    product = exact_product(outer.matrix, inner.matrix)
    expected = assemble_intertwiner(inner.v, r, t, max_dim=None).matrix * factor
    diff = (product - expected).tocsr()
    diff.eliminate_zeros()
    residual = int(abs(diff).max()) if diff.nnz else 0
    return Composition(r=r, s=s, t=t, factor=factor, product=product, holds=residual == 0, residual=residual)


@dataclass
class IntertwiningResult:
    """H_s T^{r,s} - T^{r,s} H_r evaluated exactly"""

    r: int
    s: int
    holds: bool
    residual: int


def check_intertwining(
    lattice: Lattice,
    r: int,
    s: int,
    max_dim: int = DEFAULT_MAX_DENSE_DIM,
    h_source: Optional[SectorOperator] = None,
    h_target: Optional[SectorOperator] = None,
) -> IntertwiningResult:
    """Exact test of H T = T H between sectors r and s; prebuilt blocks may be passed in"""
    if not 0 <= s <= r <= lattice.v:
        raise ValidationError(f"intertwining: need 0 <= s <= r <= v, got s={s}, r={r}, v={lattice.v}")
    h_source = h_source if h_source is not None else assemble_hamiltonian(lattice, r, max_dim)
    h_target = h_target if h_target is not None else assemble_hamiltonian(lattice, s, max_dim)
    t = assemble_intertwiner(lattice.v, r, s, max_dim).matrix

    diff = (exact_product(h_target.matrix, t) - exact_product(t, h_source.matrix)).tocsr()
    diff.eliminate_zeros()
    residual = int(abs(diff).max()) if diff.nnz else 0
    return IntertwiningResult(r=r, s=s, holds=residual == 0, residual=residual)
