import math

import numpy as np
import pytest

from lattice import build_rectangular
from operators import assemble_hamiltonian, assemble_intertwiner
from sector_basis import binomial
from spectral import (
    compute_spectra,
    eigendecompose,
    exact_rank,
    kernel_split,
    sector_trace,
    sector_traces,
    spectra_table,
    split_trace,
    verify_range_trace,
    zero_mode_count,
)
from utils.errors import CapacityError, ValidationError

BETAS = [0.1, 0.5, 1.0, 2.0, 5.0]


class TestEigendecompose:

    def test_single_bond(self):
        spectrum = eigendecompose(assemble_hamiltonian(build_rectangular([1, 2]), 1))
        assert np.allclose(spectrum.eigenvalues, [0.0, 2.0], atol=1e-12)

    def test_three_site_chain(self):
        spectrum = eigendecompose(assemble_hamiltonian(build_rectangular([1, 3]), 1))
        assert np.allclose(spectrum.eigenvalues, [0.0, 1.0, 3.0], atol=1e-12)

    def test_vectors_reconstruct(self):
        spectrum = eigendecompose(assemble_hamiltonian(build_rectangular([2, 3]), 3), vectors=True)
        assert spectrum.eigenvectors.shape == (20, 20)
        assert spectrum.reconstruction_residual < 1e-10

    @pytest.mark.parametrize("dims, boundary", [([2, 5], "open"), ([3, 3], "periodic"), ([1, 6], "open")])
    def test_one_zero_mode_per_sector(self, dims, boundary):
        lattice = build_rectangular(dims, boundary)
        spectra = compute_spectra(lattice, range(lattice.v + 1), threads=2)
        for r, spectrum in spectra.items():
            assert spectrum.dim == binomial(lattice.v, r)
            assert abs(spectrum.eigenvalues[0]) < 1e-10
            assert zero_mode_count(spectrum) == 1

    def test_threads_do_not_change_results(self):
        lattice = build_rectangular([2, 5])
        serial = compute_spectra(lattice, [3, 4, 5], threads=1)
        parallel = compute_spectra(lattice, [5, 4, 3], threads=3)
        assert list(serial) == list(parallel) == [3, 4, 5]
        for r in serial:
            assert np.array_equal(serial[r].eigenvalues, parallel[r].eigenvalues)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            compute_spectra(build_rectangular([2, 5]), [5], max_dim=200)

    def test_spectra_table(self):
        lattice = build_rectangular([1, 3])
        table = spectra_table(compute_spectra(lattice, [0, 1]).values())
        assert list(table.columns) == ["sector", "eigenvalue_index", "eigenvalue"]
        assert table["sector"].tolist() == [0, 1, 1, 1]
        assert table["eigenvalue_index"].tolist() == [0, 0, 1, 2]


class TestSectorTrace:

    def test_beta_zero_is_dimension(self):
        lattice = build_rectangular([2, 5])
        for r, spectrum in compute_spectra(lattice, range(11)).items():
            assert sector_trace(spectrum, 0.0) == binomial(10, r)

    def test_single_bond(self):
        spectrum = eigendecompose(assemble_hamiltonian(build_rectangular([1, 2]), 1))
        for beta in BETAS:
            assert math.isclose(sector_trace(spectrum, beta), 1.0 + math.exp(-2.0 * beta), rel_tol=1e-14)

    def test_low_temperature_limit(self):
        spectrum = eigendecompose(assemble_hamiltonian(build_rectangular([2, 3]), 3))
        assert math.isclose(sector_trace(spectrum, 200.0), 1.0, rel_tol=1e-12)

    def test_sum_over_sectors(self):
        lattice = build_rectangular([3, 3], "periodic")
        table = sector_traces(lattice, [0.0, 1.0], threads=2)
        assert list(table.columns) == ["beta", "sector", "dimension", "trace"]
        assert table.loc[table["beta"] == 0.0, "trace"].sum() == 2 ** 9
        assert table["dimension"].tolist()[:10] == [binomial(9, r) for r in range(10)]

    def test_monotone_in_beta(self):
        spectrum = eigendecompose(assemble_hamiltonian(build_rectangular([2, 5]), 4))
        values = [sector_trace(spectrum, beta) for beta in [0.0] + BETAS]
        assert all(a >= b for a, b in zip(values, values[1:]))

    def test_negative_beta_warns(self, caplog):
        with caplog.at_level("WARNING"):
            sector_trace(np.array([0.0, 2.0]), -1.0)
        assert "negative beta" in caplog.text


class TestExactRank:

    def test_small_matrices(self):
        assert exact_rank(np.eye(4, dtype=np.int64)) == 4
        assert exact_rank(np.zeros((3, 5), dtype=np.int64)) == 0
        assert exact_rank([[1, 2], [2, 4]]) == 1
        assert exact_rank([[0, 1], [1, 0]]) == 2
        assert exact_rank(np.empty((0, 3))) == 0

    def test_low_rank_products(self):
        rng = np.random.default_rng(21)
        for rank in range(1, 6):
            b = rng.integers(-9, 10, size=(8, rank))
            c = rng.integers(-9, 10, size=(rank, 7))
            product = b @ c
            assert exact_rank(product) == np.linalg.matrix_rank(product)

    def test_large_entries_are_promoted(self):
        rng = np.random.default_rng(4)
        b = rng.integers(10 ** 5, 10 ** 6, size=(6, 2))
        c = rng.integers(10 ** 5, 10 ** 6, size=(2, 6))
        assert exact_rank(b @ c) == 2
        triangular = np.triu(np.full((5, 5), 3, dtype=np.int64)) + np.diag([2 ** 40] * 5)
        assert exact_rank(triangular) == 5

    def test_intertwiners(self):
        assert exact_rank(assemble_intertwiner(3, 2, 1).to_dense()) == 3
        # full row rank for s <= r <= v - s
        assert exact_rank(assemble_intertwiner(10, 5, 4).to_dense()) == 210
        assert exact_rank(assemble_intertwiner(8, 6, 5).to_dense()) == 28


class TestKernelSplit:

    def test_two_by_five_middle_sector(self):
        split = kernel_split(build_rectangular([2, 5]), 5, 1)
        assert split.rank == split.numeric_rank == 210
        assert split.kernel_dim == 42
        assert split.orthonormality_error <= 1e-12
        assert split.block_residual <= 1e-10 * max(split.h_norm, 1.0)

    def test_no_kernel(self):
        split = kernel_split(build_rectangular([1, 3]), 2, 1)
        assert split.kernel_dim == 0
        assert split.range_eigenvalues.size == 3

    def test_step_zero(self):
        lattice = build_rectangular([2, 3])
        split = kernel_split(lattice, 3, 0)
        assert split.kernel_dim == 0
        assert split.rank == 20
        spectrum = eigendecompose(assemble_hamiltonian(lattice, 3))
        assert np.array_equal(split.range_eigenvalues, spectrum.eigenvalues)

    def test_single_bond(self):
        split = kernel_split(build_rectangular([1, 2]), 1, 1)
        assert split.kernel_dim == 1
        assert np.allclose(split.kernel_eigenvalues, [2.0])
        assert np.allclose(split.range_eigenvalues, [0.0], atol=1e-12)

    def test_invalid(self):
        with pytest.raises(ValidationError):
            kernel_split(build_rectangular([1, 3]), 1, 2)


class TestSplitTrace:

    def test_single_bond(self):
        lattice = build_rectangular([1, 2])
        for beta in BETAS:
            tr1, tr2 = split_trace(lattice, 1, 1, beta)
            assert math.isclose(tr1, math.exp(-2.0 * beta), rel_tol=1e-12)
            assert math.isclose(tr2, 1.0, rel_tol=1e-12)

    def test_step_zero(self):
        lattice = build_rectangular([2, 3])
        spectrum = eigendecompose(assemble_hamiltonian(lattice, 2))
        tr1, tr2 = split_trace(lattice, 2, 0, 1.0)
        assert tr1 == 0.0
        assert tr2 == sector_trace(spectrum, 1.0)

    def test_additivity(self):
        lattice = build_rectangular([2, 5])
        for i in range(1, 6):
            split = kernel_split(lattice, i, 1)
            spectrum = eigendecompose(assemble_hamiltonian(lattice, i))
            for beta in BETAS:
                tr1, tr2 = split_trace(lattice, i, 1, beta, split=split)
                total = sector_trace(spectrum, beta)
                assert abs(tr1 + tr2 - total) <= 1e-10 * total


class TestRangeTrace:

    def test_two_by_five(self):
        lattice = build_rectangular([2, 5])
        for i in range(1, 6):
            result = verify_range_trace(lattice, i, 1, BETAS)
            assert result.max_relative_residual <= 1e-10
            assert result.spectra_match
            assert len(result.rows) == len(BETAS)

    def test_step_zero_is_exact(self):
        result = verify_range_trace(build_rectangular([3, 3], "periodic"), 4, 0, BETAS)
        assert result.max_relative_residual == 0.0
        assert result.max_spectral_deviation == 0.0

    def test_frame(self):
        frame = verify_range_trace(build_rectangular([1, 3]), 1, 1, [0.5]).to_frame()
        assert frame["lower_sector"].tolist() == [0]
        assert frame["relative_residual"].iloc[0] <= 1e-12

    def test_past_the_middle_the_range_is_too_small(self):
        # T^{4,3} on 5 vertices has rank C(5,4) = 5 < C(5,3) = 10
        result = verify_range_trace(build_rectangular([1, 5]), 4, 1, [1.0])
        assert not result.spectra_match
        assert math.isinf(result.max_spectral_deviation)
