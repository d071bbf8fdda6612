"""Random bicomplex data with known spectra, for property checks."""

from __future__ import annotations

from typing import List, NamedTuple, Tuple

import numpy as np

from .core import BiComplex
from .linalg import BCMatrix, BCVector


def random_complex(rng: np.random.Generator, size=None, scale: float = 1.0):
    return scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


def random_bicomplex(rng: np.random.Generator, scale: float = 1.0) -> BiComplex:
    z = random_complex(rng, 2, scale)
    return BiComplex(z[0], z[1])


def random_bc_matrix(rng: np.random.Generator, rows: int, cols: int | None = None) -> BCMatrix:
    cols = rows if cols is None else cols
    return BCMatrix(random_complex(rng, (rows, cols)), random_complex(rng, (rows, cols)))


def random_bc_vector(rng: np.random.Generator, d: int) -> BCVector:
    return BCVector(random_complex(rng, d), random_complex(rng, d))


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    q, r = np.linalg.qr(random_complex(rng, (d, d)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_bc_unitary(rng: np.random.Generator, d: int) -> BCMatrix:
    return BCMatrix.join(random_unitary(rng, d), random_unitary(rng, d))


class ComponentSample(NamedTuple):
    matrices: List[np.ndarray]
    #: the joint eigenvalue tuple attached to each column of the eigenbasis
    spectrum: List[Tuple[complex, ...]]
    base: np.ndarray


def commuting_complex_tuple(
    rng: np.random.Generator, d: int, m: int, *, degree: int = 2, repeat_prob: float = 0.3
) -> ComponentSample:
    """Polynomials in one diagonalizable base matrix with a known eigenbasis.

    With probability ``repeat_prob`` one base eigenvalue is duplicated, which
    produces a joint eigenspace of dimension two.
    """
    t = random_complex(rng, d)
    if d > 1 and rng.random() < repeat_prob:
        i, j = rng.choice(d, size=2, replace=False)
        t[j] = t[i]
    # modest conditioning: unitary times unit upper triangular
    s = random_unitary(rng, d) @ (np.eye(d) + np.triu(random_complex(rng, (d, d), 0.3), 1))
    s_inv = np.linalg.inv(s)
    base = s @ np.diag(t) @ s_inv
    mats, values = [], []
    for _ in range(m):
        coeffs = random_complex(rng, degree + 1)
        vals = np.polyval(coeffs, t)
        mats.append(s @ np.diag(vals) @ s_inv)
        values.append(vals)
    spectrum = [tuple(complex(v[i]) for v in values) for i in range(d)]
    return ComponentSample(mats, spectrum, base)


class CommutingSample(NamedTuple):
    matrices: List[BCMatrix]
    left: ComponentSample
    right: ComponentSample


def random_commuting_tuple(rng: np.random.Generator, d: int, m: int, **kwargs) -> CommutingSample:
    left = commuting_complex_tuple(rng, d, m, **kwargs)
    right = commuting_complex_tuple(rng, d, m, **kwargs)
    mats = [BCMatrix.join(a, b) for a, b in zip(left.matrices, right.matrices)]
    return CommutingSample(mats, left, right)
