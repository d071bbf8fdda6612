"""Spectra of a commuting pair ``(T1, T2)`` through the 2x2 block operator matrix.

For a query point ``(z1, z2)`` the block

    [[ z1 I - T1,        z2 I - T2      ],
     [ -z2* I + T2*,     z1* I - T1*    ]]

splits into one complex block per idempotent component; the point lies in the
joint spectrum when either of them is singular.  Operators here are finite
matrices, so approximate-point membership reduces to a smallest-singular-value
test on the stacked shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .core import BiComplex
from .errors import DimensionMismatchError, NotCommutingError, NotSquareError
from .linalg import TAU_COMMUTE, BCMatrix, commutator_residual
from .spectra import TAU_MATCH, JointEigenpair, SpectrumSet, complex_joint_point_spectrum

#: Singularity threshold for membership queries, relative to ``max(1, |block|_2)``.
TAU_MEMBER = 1e-8

def _check_pair(t1: BCMatrix, t2: BCMatrix, tol_commute: Optional[float] = TAU_COMMUTE) -> int:
    for t in (t1, t2):
        if not t.is_square:
            raise NotSquareError(f"operator of shape {t.shape} is not square")
    if t1.shape != t2.shape:
        raise DimensionMismatchError(f"operators of shape {t1.shape} and {t2.shape}")
    if tol_commute is not None:
        residual = commutator_residual([t1, t2])
        if residual > tol_commute:
            raise NotCommutingError(residual)
    return t1.rows


def complex_block(z1: complex, z2: complex, a1: np.ndarray, a2: np.ndarray) -> np.ndarray:
    """The block matrix for one idempotent component (complex scalars and matrices)."""
    eye = np.eye(a1.shape[0])
    x = z1 * eye - a1
    y = z2 * eye - a2
    return np.block([[x, y], [-y.conj().T, x.conj().T]])


def block_matrix(z1, z2, t1: BCMatrix, t2: BCMatrix) -> BCMatrix:
    """Assemble the bicomplex block matrix directly from bicomplex data."""
    _check_pair(t1, t2, tol_commute=None)
    z1, z2 = BiComplex.coerce(z1), BiComplex.coerce(z2)
    d = t1.rows
    x = BCMatrix.scalar(z1, d) - t1
    y = BCMatrix.scalar(z2, d) - t2
    lower_left = BCMatrix.scalar(z2.star(), d).scale(-1) + t2.H
    lower_right = BCMatrix.scalar(z1.star(), d) - t1.H
    return BCMatrix(
        np.block([[x.z1, y.z1], [lower_left.z1, lower_right.z1]]),
        np.block([[x.z2, y.z2], [lower_left.z2, lower_right.z2]]),
    )


@dataclass(frozen=True)
class Membership:
    """Outcome of a membership query.

    ``side`` names the idempotent component that witnesses membership ("e1",
    "e2" or "none"); ``smin`` is the smallest singular value on that side, or
    the smaller of the two when neither side is singular.
    """

    member: bool
    side: str
    smin: float
    smin_e1: float
    smin_e2: float
    threshold_e1: float
    threshold_e2: float
    witness: Optional[np.ndarray] = None

    def __bool__(self):
        return self.member


def _smallest(m: np.ndarray):
    _, s, vh = np.linalg.svd(m)
    return float(s[-1]), float(s[0]), vh[-1].conj()


def _decide(tests, tol: Optional[float] = None) -> Membership:
    """``tests`` holds (smin, smax, vector) for the e1 and e2 sides."""
    tol = TAU_MEMBER if tol is None else tol
    results = []
    for smin, smax, vec in tests:
        thresh = tol * max(1.0, smax)
        results.append((smin, thresh, vec))
    (s1, th1, v1), (s2, th2, v2) = results
    if s1 <= th1:
        return Membership(True, "e1", s1, s1, s2, th1, th2, v1)
    if s2 <= th2:
        return Membership(True, "e2", s2, s1, s2, th1, th2, v2)
    return Membership(False, "none", min(s1, s2), s1, s2, th1, th2, None)


def _projections(z1, z2):
    b1 = BiComplex.coerce(z1).idempotent()
    b2 = BiComplex.coerce(z2).idempotent()
    return (b1.beta1, b2.beta1), (b1.beta2, b2.beta2)


def joint_spectrum_query(z1, z2, t1: BCMatrix, t2: BCMatrix, *, tol: Optional[float] = None,
                         tol_commute: float = TAU_COMMUTE) -> Membership:
    """Singularity test of the two component block matrices."""
    _check_pair(t1, t2, tol_commute)
    tests = []
    for (w1, w2), a1, a2 in zip(_projections(z1, z2), t1.split(), t2.split()):
        tests.append(_smallest(complex_block(w1, w2, a1, a2)))
    return _decide(tests, tol)


def approximate_point_query(z1, z2, t1: BCMatrix, t2: BCMatrix, *, tol: Optional[float] = None,
                            tol_commute: float = TAU_COMMUTE) -> Membership:
    """Smallest singular value of the stacked shifts ``[T1 - z1 I; T2 - z2 I]`` per component."""
    _check_pair(t1, t2, tol_commute)
    d = t1.rows
    eye = np.eye(d)
    tests = []
    for (w1, w2), a1, a2 in zip(_projections(z1, z2), t1.split(), t2.split()):
        tests.append(_smallest(np.vstack([a1 - w1 * eye, a2 - w2 * eye])))
    return _decide(tests, tol)


def in_joint_spectrum(z1, z2, t1: BCMatrix, t2: BCMatrix, **kwargs) -> bool:
    return joint_spectrum_query(z1, z2, t1, t2, **kwargs).member


def in_approximate_point_spectrum(z1, z2, t1: BCMatrix, t2: BCMatrix, **kwargs) -> bool:
    return approximate_point_query(z1, z2, t1, t2, **kwargs).member


@dataclass(frozen=True)
class PairSpectrumSet(SpectrumSet):
    """``L*e1 + (C x C)*e2  U  (C x C)*e1 + R*e2`` for a pair, tagged with its kind."""

    kind: str = "point"

    def contains_pair(self, z1, z2, tol: float = TAU_MATCH) -> bool:
        return self.contains((z1, z2), tol)


def pair_point_spectrum(t1: BCMatrix, t2: BCMatrix, *, tol_commute: float = TAU_COMMUTE) -> PairSpectrumSet:
    _check_pair(t1, t2, tol_commute)
    left = complex_joint_point_spectrum([t1.left, t2.left], check=False)
    right = complex_joint_point_spectrum([t1.right, t2.right], check=False)
    return PairSpectrumSet(tuple(left), tuple(right), kind="point")


def _conjugated(pairs: List[JointEigenpair]) -> Tuple[JointEigenpair, ...]:
    return tuple(
        JointEigenpair(tuple(z.conjugate() for z in p.lambdas), p.vector, p.basis, p.residual) for p in pairs
    )


def pair_residual_spectrum(t1: BCMatrix, t2: BCMatrix, *, tol_commute: float = TAU_COMMUTE) -> PairSpectrumSet:
    """Complex-conjugated joint point spectra of the adjoint component pairs.

    The attached vectors are eigenvectors of the adjoint pair, not of ``(T1, T2)``.
    """
    _check_pair(t1, t2, tol_commute)
    sides = []
    for a1, a2 in zip(t1.split(), t2.split()):
        pairs = complex_joint_point_spectrum([a1.conj().T, a2.conj().T], check=False)
        sides.append(_conjugated(pairs))
    return PairSpectrumSet(sides[0], sides[1], kind="residual")


def pair_approximate_spectrum(t1: BCMatrix, t2: BCMatrix, *, tol_commute: float = TAU_COMMUTE) -> PairSpectrumSet:
    """Finite parts of the approximate point spectrum.

    The unit sphere is compact in finite dimension, so approximate eigenvectors
    converge to true ones and the finite parts equal those of the point spectrum.
    """
    point = pair_point_spectrum(t1, t2, tol_commute=tol_commute)
    return PairSpectrumSet(point.left, point.right, kind="approximate")


def pair_joint_spectrum(t1: BCMatrix, t2: BCMatrix, *, tol_commute: float = TAU_COMMUTE) -> PairSpectrumSet:
    """Finite parts of the block-matrix joint spectrum (joint eigenvalues of each component pair)."""
    point = pair_point_spectrum(t1, t2, tol_commute=tol_commute)
    return PairSpectrumSet(point.left, point.right, kind="joint")
