import itertools
import random

import pytest

from lattice import build_rectangular, parse_dims
from utils.errors import CapacityError, ValidationError


def brute_force_edges(dims, boundary):
    coords = list(itertools.product(*[range(d) for d in dims]))
    edges = set()
    for a, b in itertools.combinations(range(len(coords)), 2):
        diff = [(axis, abs(x - y)) for axis, (x, y) in enumerate(zip(coords[a], coords[b])) if x != y]
        if len(diff) != 1:
            continue
        axis, distance = diff[0]
        if distance == 1 or (boundary == "periodic" and distance == dims[axis] - 1):
            edges.add((a, b))
    return edges


class TestBuildRectangular:

    def test_single_bond(self):
        lattice = build_rectangular([2, 1])
        assert lattice.v == 2
        assert lattice.edges == ((0, 1),)

    def test_two_by_five_open(self):
        lattice = build_rectangular([2, 5])
        assert lattice.v == 10
        assert len(lattice.edges) == 13
        assert lattice.expected_edge_count() == 13

    def test_three_by_three_periodic(self):
        lattice = build_rectangular([3, 3], "periodic")
        assert lattice.v == 9
        assert len(lattice.edges) == 18
        degree = [0] * 9
        for a, b in lattice.edges:
            degree[a] += 1
            degree[b] += 1
        assert degree == [4] * 9

    def test_row_major_indexing(self):
        lattice = build_rectangular([2, 3])
        # vertex 1 is (0, 1): right neighbor 2, lower neighbor 4
        assert (1, 2) in lattice.edges
        assert (1, 4) in lattice.edges
        assert (2, 3) not in lattice.edges

    def test_random_open_boxes_match_brute_force(self):
        rng = random.Random(7)
        for _ in range(40):
            dims = [rng.randint(1, 4) for _ in range(rng.randint(1, 3))]
            lattice = build_rectangular(dims)
            assert len(set(lattice.edges)) == len(lattice.edges)
            assert set(lattice.edges) == brute_force_edges(dims, "open")
            assert len(lattice.edges) == lattice.expected_edge_count()
            assert all(a != b and 0 <= a < lattice.v and 0 <= b < lattice.v for a, b in lattice.edges)
            assert lattice.is_connected()

    def test_random_periodic_boxes_match_brute_force(self):
        rng = random.Random(11)
        for _ in range(20):
            dims = [rng.randint(3, 4) for _ in range(rng.randint(1, 3))]
            lattice = build_rectangular(dims, "periodic")
            assert set(lattice.edges) == brute_force_edges(dims, "periodic")
            assert len(lattice.edges) == len(dims) * lattice.v
            assert lattice.is_connected()

    def test_to_dict(self):
        doc = build_rectangular([2, 1]).to_dict()
        assert doc == {"dims": [2, 1], "boundary": "open", "v": 2, "edges": [[0, 1]]}

    def test_label(self):
        assert build_rectangular([2, 5]).label == "2x5"
        assert build_rectangular([3, 3], "periodic").label == "3x3-periodic"

    @pytest.mark.parametrize("dims, boundary", [
        ([], "open"),
        ([0, 3], "open"),
        ([2, 3], "periodic"),
        ([3, 3], "twisted"),
    ])
    def test_invalid_shapes_rejected(self, dims, boundary):
        with pytest.raises(ValidationError):
            build_rectangular(dims, boundary)

    def test_empty_dims_message_names_field(self):
        with pytest.raises(ValidationError, match="dims"):
            build_rectangular([])

    def test_vertex_cap(self):
        with pytest.raises(CapacityError):
            build_rectangular([5, 13])

    def test_vertex_cap_huge_sides(self):
        # the product of these sides wraps to 0 in 64-bit arithmetic
        with pytest.raises(CapacityError):
            build_rectangular([2 ** 32, 2 ** 32])
        with pytest.raises(CapacityError):
            build_rectangular([2 ** 40, 3])


class TestParseDims:

    def test_separators(self):
        assert parse_dims("2x5") == [2, 5]
        assert parse_dims("2,5") == [2, 5]
        assert parse_dims("3 3 3") == [3, 3, 3]
        assert parse_dims("") == []

    def test_garbage(self):
        with pytest.raises(ValidationError):
            parse_dims("two")
