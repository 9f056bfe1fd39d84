# -*- coding: utf-8 -*-
"""
Rectangular lattices with nearest-neighbor bonds.
Vertices are indexed row-major over dims (last axis fastest); the edge list
is produced in vertex order, then axis order, so operator assembly that walks
it is deterministic.
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import scipy.sparse
from scipy.sparse.csgraph import connected_components

from utils.errors import CapacityError, ValidationError

BOUNDARIES = ("open", "periodic")
# One machine word per basis state.
MAX_VERTICES = 64


@dataclass(frozen=True)
class Lattice:
    """Vertex count and unordered nearest-neighbor pairs of a box"""

    dims: Tuple[int, ...]
    boundary: str
    v: int
    edges: Tuple[Tuple[int, int], ...]

    @property
    def label(self) -> str:
        tag = "x".join(str(d) for d in self.dims)
        return tag if self.boundary == "open" else f"{tag}-{self.boundary}"

    def adjacency(self) -> scipy.sparse.csr_matrix:
        if not self.edges:
            return scipy.sparse.csr_matrix((self.v, self.v), dtype=np.int8)
        a, b = np.array(self.edges, dtype=np.int64).T
        rows = np.concatenate([a, b])
        cols = np.concatenate([b, a])
        data = np.ones(rows.size, dtype=np.int8)
        return scipy.sparse.csr_matrix((data, (rows, cols)), shape=(self.v, self.v))

    def is_connected(self) -> bool:
        n_components, _ = connected_components(self.adjacency(), directed=False)
        return n_components == 1

    def expected_edge_count(self) -> int:
        if self.boundary == "periodic":
            return len(self.dims) * self.v
        return sum((d - 1) * (self.v // d) for d in self.dims)

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "boundary": self.boundary,
            "v": self.v,
            "edges": [[a, b] for a, b in self.edges],
        }


def parse_dims(text: str) -> List[int]:
    """'2x5', '2,5' or '2 5' -> [2, 5]"""
    parts = [p for p in text.replace("x", " ").replace(",", " ").split() if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValidationError(f"dims: cannot parse {text!r} as side lengths")


def build_rectangular(dims: Sequence[int], boundary: str = "open") -> Lattice:
    """Build the nearest-neighbor box lattice with the given side lengths"""
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ValidationError("dims: at least one side length is required")
    if any(d < 1 for d in dims):
        raise ValidationError(f"dims: side lengths must be >= 1, got {list(dims)}")
    if boundary not in BOUNDARIES:
        raise ValidationError(f"boundary: expected one of {BOUNDARIES}, got {boundary!r}")
    if boundary == "periodic" and any(d < 3 for d in dims):
        raise ValidationError(
            f"dims: periodic boundary needs every side length >= 3, got {list(dims)}"
        )

    v = math.prod(dims)
    if v > MAX_VERTICES:
        raise CapacityError(f"dims: {v} vertices exceeds the {MAX_VERTICES}-vertex bitmask cap")

    strides = [math.prod(dims[d + 1:]) for d in range(len(dims))]
    edges: List[Tuple[int, int]] = []
    for index, coords in enumerate(np.ndindex(*dims)):
        for axis, side in enumerate(dims):
            step = coords[axis] + 1
            if step == side:
                if boundary == "open":
                    continue
                step = 0
            neighbor = index + (step - coords[axis]) * strides[axis]
            edges.append((min(index, neighbor), max(index, neighbor)))

    return Lattice(dims=dims, boundary=boundary, v=v, edges=tuple(edges))
