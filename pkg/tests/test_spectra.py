import math

import numpy as np
import pytest

from bcspectra import (
    E1,
    E2,
    K,
    BadExponentError,
    BCMatrix,
    BiComplex,
    NotCommutingError,
    NotSquareError,
    bc_joint_point_spectrum,
    check_radius_bound,
    complex_joint_point_spectrum,
    geometric_spectral_radius,
    is_unitary,
    operator_tuple_norm,
    restricted_spectrum,
    simultaneous_triangularize,
    tuple_norm,
)
from bcspectra import oracles
from bcspectra.generators import commuting_complex_tuple, random_bc_unitary, random_commuting_tuple
from bcspectra.spectra import matrix_pnorm, operator_tuple_norm_bracket


def diag_bc(left, right):
    return BCMatrix.join(np.diag(left), np.diag(right))


class TestComplexJointSpectrum:
    def test_diagonal_pair(self):
        pairs = complex_joint_point_spectrum([np.diag([1, 2]), np.diag([3, 4])])
        assert [p.lambdas for p in pairs] == [(1, 3), (2, 4)]
        assert all(p.residual <= 1e-8 for p in pairs)

    def test_identity_pair_has_2d_eigenspace(self):
        pairs = complex_joint_point_spectrum([np.eye(2), np.eye(2)])
        assert [p.lambdas for p in pairs] == [(1, 1)]
        assert pairs[0].multiplicity == 2

    def test_jordan_block(self):
        pairs = complex_joint_point_spectrum([np.array([[2.0, 1.0], [0.0, 2.0]])])
        assert len(pairs) == 1
        assert pairs[0].lambdas[0] == pytest.approx(2.0)
        v = pairs[0].vector
        assert abs(v[1]) <= 1e-8 and abs(abs(v[0]) - 1) <= 1e-8

    def test_not_commuting(self):
        with pytest.raises(NotCommutingError) as info:
            complex_joint_point_spectrum([np.array([[0, 1], [0, 0]]), np.array([[0, 0], [1, 0]])])
        assert info.value.residual > 0.1

    def test_not_square(self):
        with pytest.raises(NotSquareError):
            complex_joint_point_spectrum([np.ones((2, 3))])

    def test_matches_construction_and_brute_force(self, rng):
        for _ in range(60):
            d, m = int(rng.integers(1, 6)), int(rng.integers(1, 4))
            sample = commuting_complex_tuple(rng, d, m)
            found = [p.lambdas for p in complex_joint_point_spectrum(sample.matrices)]
            truth = oracles._dedupe(sample.spectrum, 1e-9)
            assert oracles.same_point_sets(found, truth, 1e-8)
            assert oracles.same_point_sets(found, oracles.brute_force_joint_spectrum(sample.matrices), 1e-8)

    def test_every_pair_is_an_eigenpair(self, rng):
        for _ in range(30):
            sample = commuting_complex_tuple(rng, 5, 3)
            for pair in complex_joint_point_spectrum(sample.matrices):
                assert pair.residual <= 1e-8
                for a, lam in zip(sample.matrices, pair.lambdas):
                    for v in pair.basis.T:
                        assert np.linalg.norm(a @ v - lam * v) <= 1e-8 * max(1, np.linalg.norm(a, 2))

    def test_sorted_lexicographically(self, rng):
        sample = commuting_complex_tuple(rng, 5, 2, repeat_prob=0)
        keys = [(p.lambdas[0].real, p.lambdas[0].imag) for p in complex_joint_point_spectrum(sample.matrices)]
        assert keys == sorted(keys)


class TestBicomplexJointSpectrum:
    def test_single_diagonal(self):
        a = diag_bc([1, 2], [3, 4])
        spec = bc_joint_point_spectrum([a])
        assert spec.left_finite == [(1,), (2,)]
        assert spec.right_finite == [(3,), (4,)]
        for w in (0, 1j, -7 + 2j, 1e6):
            assert spec.contains([BiComplex.from_idempotent(1, w)])
            assert spec.contains([BiComplex.from_idempotent(w + 10, 4)])
        assert not spec.contains([BiComplex.from_idempotent(3, 1)])

    def test_identity_pair(self):
        spec = bc_joint_point_spectrum([BCMatrix.identity(2)] * 2)
        assert spec.left_finite == [(1, 1)] and spec.right_finite == [(1, 1)]

    def test_unbounded(self):
        spec = bc_joint_point_spectrum([diag_bc([1, 2], [3, 4])])
        assert not spec.is_bounded
        for r in 10.0 ** np.arange(0, 13, 2):
            assert spec.contains([BiComplex.from_idempotent(2, r * (1 + 1j))])

    def test_witness_side(self):
        spec = bc_joint_point_spectrum([diag_bc([1, 2], [3, 4])])
        assert spec.witness_side([BiComplex.from_idempotent(1, 99)]) == "e1"
        assert spec.witness_side([BiComplex.from_idempotent(99, 4)]) == "e2"
        assert spec.witness_side([BiComplex.from_idempotent(99, 99)]) == "none"

    def test_not_commuting(self):
        n = BCMatrix.from_complex([[0, 1], [0, 0]])
        with pytest.raises(NotCommutingError):
            bc_joint_point_spectrum([n, n.H])

    def test_oracle_agreement(self, rng):
        for _ in range(30):
            d, m = int(rng.integers(1, 5)), int(rng.integers(1, 4))
            sample = random_commuting_tuple(rng, d, m)
            spec = bc_joint_point_spectrum(sample.matrices)
            assert spec.left and spec.right
            for lam in sample.left.spectrum:
                far = rng.normal(size=m) * 1e6
                probe = [BiComplex.from_idempotent(a, b) for a, b in zip(lam, far)]
                assert spec.contains(probe) and oracles.bicomplex_eigenvector_exists(sample.matrices, probe)
                off = [BiComplex.from_idempotent(a + 0.05, b) for a, b in zip(lam, far)]
                assert spec.contains(off) == oracles.bicomplex_eigenvector_exists(sample.matrices, off)


class TestTriangularization:
    def test_already_triangular(self):
        a = BCMatrix(np.triu(np.arange(1, 10).reshape(3, 3)) + 0j)
        b = a @ a
        tri = simultaneous_triangularize([a, b])
        assert tri.unitary == BCMatrix.identity(3)
        assert tri.triangular[0].allclose(a) and tri.triangular[1].allclose(b)

    def test_polynomial_pairs(self, rng):
        for _ in range(40):
            d = int(rng.integers(1, 7))
            sample = random_commuting_tuple(rng, d, 2)
            tri = simultaneous_triangularize(sample.matrices)
            assert is_unitary(tri.unitary, 1e-10)
            for t, a in zip(tri.triangular, sample.matrices):
                direct = tri.unitary @ a @ tri.unitary.H
                assert direct.allclose(t, 1e-12)
                for tc, ac in zip(t.split(), a.split()):
                    assert np.linalg.norm(np.tril(tc, -1)) <= 1e-9 * np.linalg.norm(ac, 2)
                    assert oracles.same_multisets(np.diag(tc), np.linalg.eigvals(ac), 1e-8)


class TestRestrictedSpectrum:
    def test_diagonal_identity_pairing(self):
        rs = restricted_spectrum([diag_bc([1, 2], [3, 4])])
        assert [tuple(p) for p in rs] == [(1 * E1 + 3 * E2,), (2 * E1 + 4 * E2,)]

    def test_k_example(self):
        rs = restricted_spectrum([BCMatrix.identity(1), BCMatrix.scalar(K, 1)])
        assert rs.points == ((BiComplex(1), E1 - E2),)

    def test_one_by_one(self, rng):
        z, w = BiComplex(1 + 2j, 3), BiComplex(-1j, 0.5)
        rs = restricted_spectrum([BCMatrix.scalar(z, 1), BCMatrix.scalar(w, 1)])
        assert rs.points == ((z, w),)

    def test_cross_membership(self):
        rs = restricted_spectrum([diag_bc([1, 2], [3, 4])])
        crossed = [BiComplex.from_idempotent(1, 4)]
        assert not rs.contains(crossed)
        assert rs.contains(crossed, cross=True)

    def test_projections_lie_in_finite_parts(self, rng):
        for _ in range(20):
            sample = random_commuting_tuple(rng, int(rng.integers(1, 5)), 2)
            spec = bc_joint_point_spectrum(sample.matrices)
            for pt in restricted_spectrum(sample.matrices):
                assert spec.witness_side(pt) == "e1"
                assert spec.contains([BiComplex.from_idempotent(99, z.idempotent()[1]) for z in pt])

    def test_unitary_invariance(self, rng):
        for _ in range(20):
            d = int(rng.integers(1, 5))
            sample = random_commuting_tuple(rng, d, 2)
            v = random_bc_unitary(rng, d)
            moved = [v @ a @ v.H for a in sample.matrices]
            before = restricted_spectrum(sample.matrices)
            after = restricted_spectrum(moved)
            for k in range(2):
                for side in ("left_points", "right_points"):
                    a = [p[k] for p in getattr(before, side)]
                    b = [p[k] for p in getattr(after, side)]
                    assert oracles.same_multisets(a, b, 1e-8)


class TestTupleNorm:
    def test_zero(self):
        assert tuple_norm([BiComplex(), BiComplex()], 2) == 0.0

    def test_single(self):
        # |lambda|^2 = (3 + 5) / 2
        assert tuple_norm([3 * E1 + 5 * E2], 2) == pytest.approx(2.0, rel=1e-15)

    def test_pair_p1(self):
        assert tuple_norm([E1, E2], 1) == pytest.approx(1.0, rel=1e-15)

    def test_bad_exponent(self):
        with pytest.raises(BadExponentError):
            tuple_norm([E1], 0.5)


class TestSpectralRadius:
    def test_single_point(self):
        assert geometric_spectral_radius([BCMatrix.scalar(3 * E1 + 5 * E2, 1)], 2) == pytest.approx(2.0, rel=1e-14)

    @pytest.mark.parametrize("p", [1, 1.5, 2, 3, 7])
    def test_identity_pair(self, p):
        got = geometric_spectral_radius([BCMatrix.identity(3)] * 2, p)
        assert got == pytest.approx(2 ** (1 / (2 * p)), rel=1e-14)

    def test_zero(self):
        assert geometric_spectral_radius([BCMatrix.zeros(3)], 2) == 0.0

    def test_bad_exponent(self):
        with pytest.raises(BadExponentError):
            geometric_spectral_radius([BCMatrix.identity(2)], 0)

    def test_classical_case(self, rng):
        # literal tuple norm: r_2^2 is the classical spectral radius, |T|_2^2 the 2-norm
        for _ in range(10):
            q = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))[0]
            a = q @ np.diag(rng.normal(size=4) + 1j * rng.normal(size=4)) @ q.conj().T
            t = [BCMatrix.from_complex(a)]
            rho = max(abs(np.linalg.eigvals(a)))
            assert geometric_spectral_radius(t, 2) ** 2 == pytest.approx(rho, rel=1e-10)
            assert operator_tuple_norm(t, 2) ** 2 == pytest.approx(np.linalg.norm(a, 2), rel=1e-12)


def _sampled_component_norm(mats, p, rng, n=10_000):
    d = mats[0].shape[1]
    x = rng.normal(size=(d, n)) + 1j * rng.normal(size=(d, n))
    x /= np.sum(np.abs(x) ** p, axis=0) ** (1 / p)
    return float(np.max(sum(np.sum(np.abs(a @ x) ** p, axis=0) for a in mats) ** (1 / p)))


class TestOperatorNorm:
    def test_scalar(self):
        assert operator_tuple_norm([BCMatrix.scalar(3 * E1 + 5 * E2, 1)], 2) == pytest.approx(2.0, rel=1e-15)

    def test_zero(self):
        assert operator_tuple_norm([BCMatrix.zeros(3)] * 2, 2) == 0.0

    def test_sampling_oracle_p2(self, rng):
        sample = random_commuting_tuple(rng, 2, 2)
        reported = operator_tuple_norm(sample.matrices, 2)
        n1 = _sampled_component_norm([a.left for a in sample.matrices], 2, rng)
        n2 = _sampled_component_norm([a.right for a in sample.matrices], 2, rng)
        sampled = math.sqrt((n1 + n2) / 2)
        assert sampled <= reported * (1 + 1e-12)
        assert (reported - sampled) / reported < 0.05

    @pytest.mark.parametrize("p", [1.0, 1.5, 3.0, 4.0])
    def test_bracket_contains_sampled(self, rng, p):
        for _ in range(5):
            m = rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3))
            bracket = matrix_pnorm(m, p)
            sampled = _sampled_component_norm([m], p, rng, 4000)
            assert bracket.lower <= bracket.upper
            assert sampled <= bracket.upper * (1 + 1e-12)

    def test_p1_attained_at_basis_vector(self, rng):
        m = rng.normal(size=(4, 3)) + 1j * rng.normal(size=(4, 3))
        brute = max(np.sum(np.abs(m[:, j])) for j in range(3))
        assert matrix_pnorm(m, 1).upper == pytest.approx(brute, rel=1e-15)
        assert _sampled_component_norm([m], 1, rng) <= brute * (1 + 1e-12)

    def test_exact_flags(self, rng):
        mats = random_commuting_tuple(rng, 3, 2).matrices
        for p in (1.0, 2.0, math.inf):
            assert all(b.exact for b in operator_tuple_norm_bracket(mats, p))
        assert not operator_tuple_norm_bracket(mats, 3.0)[0].exact

    def test_bad_exponent(self):
        with pytest.raises(BadExponentError):
            operator_tuple_norm([BCMatrix.identity(2)], 0.99)


class TestRadiusBound:
    def test_equality_case(self):
        bound = check_radius_bound([BCMatrix.scalar(3 * E1 + 5 * E2, 1)], 2)
        assert bound.r_p == pytest.approx(2.0, abs=1e-12)
        assert bound.norm_p == pytest.approx(2.0, abs=1e-12)
        assert bound.holds

    def test_nilpotent(self):
        bound = check_radius_bound([BCMatrix.from_complex([[0, 1], [0, 0]])], 2)
        assert bound.r_p == 0.0
        assert bound.norm_p == pytest.approx(1.0, rel=1e-15)
        assert bound.holds

    @pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
    def test_random_chain(self, rng, p):
        for _ in range(40):
            sample = random_commuting_tuple(rng, int(rng.integers(1, 5)), int(rng.integers(1, 4)))
            bound = check_radius_bound(sample.matrices, p)
            assert bound.holds
            assert min(bound.links().values()) >= -1e-9
