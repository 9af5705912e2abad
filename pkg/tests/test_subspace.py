import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linrel import subspace as sub
from linrel.errors import DimensionMismatchError
from linrel.subspace import ToleranceConfig

import oracles

TOL = 1e-10


def rand_subspace(rng, d, k, field):
    return sub.from_matrix(oracles.random_matrix(rng, (d, k), field), d)


def test_tolerance_config_validation():
    with pytest.raises(ValueError):
        ToleranceConfig(check_tol=0.0)
    with pytest.raises(ValueError):
        ToleranceConfig(rank_tol=-1.0)
    with pytest.raises(ValueError):
        ToleranceConfig(rank_tol=1e-6, check_tol=1e-8)
    cfg = ToleranceConfig()
    assert cfg.rank_cutoff(10) == pytest.approx(np.finfo(float).eps * 10 * 64)


class TestSpan:
    def test_collinear_generators(self):
        U = sub.span([(1, 0), (2, 0)], 2)
        assert U.dim == 1
        assert sub.equals(U, sub.span([(1, 0)], 2))

    def test_empty_generators_give_zero(self):
        U = sub.span([], 3)
        assert U.dim == 0 and U.basis.shape == (3, 0)

    def test_random_vectors_fill_space(self, rng, field):
        gens = oracles.random_matrix(rng, (3, 5), field)
        U = sub.span(list(gens.T), 3)
        assert U.dim == oracles.rank(gens) == 3

    def test_zero_generators(self):
        assert sub.span([np.zeros(4), np.zeros(4)], 4).dim == 0

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError, match="generator 1"):
            sub.span([(1, 0), (1, 0, 0)], 2)

    def test_basis_is_orthonormal(self, rng, field):
        U = rand_subspace(rng, 7, 4, field)
        assert U.orthonormality_residual() <= TOL


class TestComplement:
    def test_axis(self):
        U = sub.complement(sub.span([(1, 0)], 2))
        assert sub.equals(U, sub.span([(0, 1)], 2))

    def test_zero_to_full(self):
        assert sub.complement(sub.zero(4)).dim == 4
        assert sub.complement(sub.full(4)).dim == 0

    def test_double_complement(self, rng, field):
        U = rand_subspace(rng, 6, 3, field)
        Uc = sub.complement(U)
        assert U.dim + Uc.dim == 6
        assert np.linalg.norm(U.basis.conj().T @ Uc.basis) <= TOL
        assert sub.equals(sub.complement(Uc), U)

    def test_empty_ambient(self):
        assert sub.complement(sub.zero(0)).dim == 0


class TestLattice:
    def test_axes(self):
        a, b = sub.span([(1, 0)], 2), sub.span([(0, 1)], 2)
        assert sub.intersect(a, b).dim == 0
        assert sub.sum_(a, b).dim == 2

    def test_idempotent(self, rng):
        U = rand_subspace(rng, 5, 2, "complex")
        assert sub.equals(sub.intersect(U, U), U)
        assert sub.equals(sub.sum_(U, U), U)

    def test_dimension_formula_against_projector_ranks(self, rng, field):
        U = rand_subspace(rng, 6, 4, field)
        V = rand_subspace(rng, 6, 4, field)
        inter, total = sub.intersect(U, V), sub.sum_(U, V)
        # rank oracle: dim(U+V) = rank[P_U P_V], dim(U ∩ V) = dim U + dim V - that
        s = oracles.rank(np.concatenate([U.basis, V.basis], axis=1))
        assert total.dim == s == 6
        assert inter.dim == U.dim + V.dim - s == 2

    def test_shared_direction(self, rng):
        w = rng.standard_normal(5)
        U = sub.span([w, rng.standard_normal(5)], 5)
        V = sub.span([w, rng.standard_normal(5)], 5)
        assert sub.equals(sub.intersect(U, V), sub.span([w], 5))

    def test_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            sub.intersect(sub.full(2), sub.full(3))
        with pytest.raises(DimensionMismatchError):
            sub.contains(sub.full(2), sub.full(3))


class TestProjector:
    def test_axis(self):
        np.testing.assert_allclose(sub.projector(sub.span([(1, 0)], 2)), np.diag([1.0, 0.0]))

    def test_complements_sum_to_identity(self, rng, field):
        U = rand_subspace(rng, 5, 2, field)
        P = sub.projector(U) + sub.projector(sub.complement(U))
        np.testing.assert_allclose(P, np.eye(5), atol=TOL)

    def test_idempotent_hermitian(self, rng, field):
        U = rand_subspace(rng, 6, 3, field)
        P = sub.projector(U)
        assert np.linalg.norm(P @ P - P) <= TOL
        assert np.linalg.norm(P - P.conj().T) <= TOL
        assert np.trace(P).real == pytest.approx(3)
        assert np.linalg.norm(P @ U.basis - U.basis) <= TOL
        assert np.linalg.norm(P @ sub.complement(U).basis) <= TOL


class TestContainment:
    def test_full_contains_everything(self, rng):
        assert sub.contains(sub.full(4), rand_subspace(rng, 4, 2, "real"))

    def test_axis_does_not_contain_diagonal(self):
        assert not sub.contains(sub.span([(1, 0)], 2), sub.span([(1, 1)], 2))

    def test_reshuffled_generators(self, rng, field):
        G = oracles.random_matrix(rng, (6, 3), field)
        mix = oracles.random_matrix(rng, (3, 3), field)
        assert sub.equals(sub.from_matrix(G), sub.from_matrix(G @ mix))

    def test_gap_values(self):
        a, b = sub.span([(1, 0)], 2), sub.span([(1, 1)], 2)
        assert sub.gap(a, b) == pytest.approx(np.sin(np.pi / 4))
        assert sub.gap(a, sub.full(2)) == 1.0

    def test_contains_vector(self):
        U = sub.span([(1, 0, 0)], 3)
        assert sub.contains_vector(U, [3.0, 0, 0])
        assert not sub.contains_vector(U, [1.0, 1e-3, 0])


def test_image_drops_annihilated_directions():
    U = sub.span([(0, 1)], 2)
    P = np.diag([1.0, 0.0])
    assert sub.image(P, U).dim == 0


fields = st.sampled_from(["real", "complex"])


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.integers(0, 12), field=fields, data=st.data())
def test_lattice_laws(seed, d, field, data):
    rng = np.random.default_rng(seed)
    k1 = data.draw(st.integers(0, d))
    k2 = data.draw(st.integers(0, d))
    U, V = rand_subspace(rng, d, k1, field), rand_subspace(rng, d, k2, field)
    lhs = sub.complement(sub.sum_(U, V))
    rhs = sub.intersect(sub.complement(U), sub.complement(V))
    assert sub.gap(lhs, rhs) <= TOL
    assert sub.intersect(U, V).dim + sub.sum_(U, V).dim == U.dim + V.dim
    assert sub.gap(sub.complement(sub.complement(U)), U) <= TOL
