"""Dense bicomplex vectors and matrices.

Arrays are stored as two complex numpy arrays holding the ``z1`` and ``z2``
coordinates of every entry.  ``split`` maps them onto the idempotent components
``(M', M'')`` with ``M = M'*e1 + M''*e2``; anything spectral (inverse,
singular values, eigenvalues) is computed on those components.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .core import BiComplex, Hyperbolic
from .errors import DimensionMismatchError, NotSquareError, ZeroDivisorError, ZeroInputError

TAU_SING = 1e-10
TAU_COMMUTE = 1e-10
TAU_UNITARY = 1e-10


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=complex)
    if not np.all(np.isfinite(a)):
        raise ValueError("bicomplex arrays must have finite entries")
    a.setflags(write=False)
    return a


class _BCArray:
    ndim = None

    def __init__(self, z1, z2=None):
        z1 = _frozen(z1)
        z2 = np.zeros_like(z1) if z2 is None else _frozen(z2)
        if z1.shape != z2.shape:
            raise DimensionMismatchError(f"coordinate shapes differ: {z1.shape} vs {z2.shape}")
        if z1.ndim != self.ndim:
            raise DimensionMismatchError(f"{type(self).__name__} needs {self.ndim}-d data, got shape {z1.shape}")
        z2.setflags(write=False)
        self._z1 = z1
        self._z2 = z2

    @property
    def z1(self) -> np.ndarray:
        return self._z1

    @property
    def z2(self) -> np.ndarray:
        return self._z2

    @property
    def shape(self):
        return self._z1.shape

    @property
    def left(self) -> np.ndarray:
        """The e1 component ``z1 - i*z2``."""
        return self._z1 - 1j * self._z2

    @property
    def right(self) -> np.ndarray:
        """The e2 component ``z1 + i*z2``."""
        return self._z1 + 1j * self._z2

    def split(self):
        return self.left, self.right

    @classmethod
    def join(cls, left, right):
        left = np.asarray(left, dtype=complex)
        right = np.asarray(right, dtype=complex)
        if left.shape != right.shape:
            raise DimensionMismatchError(f"cannot join components of shape {left.shape} and {right.shape}")
        return cls((left + right) / 2, 1j * (left - right) / 2)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            if other.shape != self.shape:
                raise DimensionMismatchError(f"shape mismatch {self.shape} vs {other.shape}")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return type(self)(self._z1 + other._z1, self._z2 + other._z2)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return type(self)(self._z1 - other._z1, self._z2 - other._z2)

    def __neg__(self):
        return type(self)(-self._z1, -self._z2)

    def scale(self, alpha) -> "_BCArray":
        """Multiply every entry by the bicomplex scalar ``alpha``."""
        alpha = BiComplex.coerce(alpha)
        a1, a2 = alpha.z1, alpha.z2
        return type(self)(a1 * self._z1 - a2 * self._z2, a1 * self._z2 + a2 * self._z1)

    def __mul__(self, alpha):
        try:
            return self.scale(alpha)
        except (TypeError, ValueError):
            return NotImplemented

    __rmul__ = __mul__

    def euclid_norm(self) -> float:
        """Frobenius-type norm over all four real coordinates of every entry."""
        return float(np.sqrt(np.linalg.norm(self._z1) ** 2 + np.linalg.norm(self._z2) ** 2))

    def allclose(self, other, atol: float = 1e-12) -> bool:
        if self.shape != other.shape:
            return False
        return (self - other).euclid_norm() <= atol * max(1.0, self.euclid_norm(), other.euclid_norm())

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (
            self.shape == other.shape
            and np.array_equal(self._z1, other._z1)
            and np.array_equal(self._z2, other._z2)
        )

    __hash__ = None


class BCVector(_BCArray):
    """Vector ``x = x1*e1 + x2*e2`` in BC^d."""

    ndim = 1

    @classmethod
    def from_entries(cls, entries: Iterable) -> "BCVector":
        entries = [BiComplex.coerce(e) for e in entries]
        return cls([e.z1 for e in entries], [e.z2 for e in entries])

    @classmethod
    def zeros(cls, d: int) -> "BCVector":
        return cls(np.zeros(d, dtype=complex))

    @property
    def dim(self) -> int:
        return self.shape[0]

    def __len__(self):
        return self.dim

    def __getitem__(self, i) -> BiComplex:
        return BiComplex(self._z1[i], self._z2[i])

    def __iter__(self):
        return (self[i] for i in range(self.dim))

    def __repr__(self):
        return f"BCVector({[str(e) for e in self]})"


class BCMatrix(_BCArray):
    """Dense ``rows x cols`` matrix with bicomplex entries."""

    ndim = 2

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> "BCMatrix":
        rows = [[BiComplex.coerce(e) for e in row] for row in rows]
        if len({len(r) for r in rows}) > 1:
            raise DimensionMismatchError("ragged matrix rows")
        z1 = np.array([[e.z1 for e in r] for r in rows], dtype=complex).reshape(len(rows), -1)
        z2 = np.array([[e.z2 for e in r] for r in rows], dtype=complex).reshape(len(rows), -1)
        return cls(z1, z2)

    @classmethod
    def identity(cls, d: int) -> "BCMatrix":
        return cls(np.eye(d, dtype=complex))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "BCMatrix":
        return cls(np.zeros((rows, rows if cols is None else cols), dtype=complex))

    @classmethod
    def scalar(cls, alpha, d: int) -> "BCMatrix":
        return cls.identity(d).scale(alpha)

    @classmethod
    def from_complex(cls, a) -> "BCMatrix":
        """Embed a complex matrix (both idempotent components equal to ``a``)."""
        return cls(np.asarray(a, dtype=complex))

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx) -> BiComplex:
        i, j = idx
        return BiComplex(self._z1[i, j], self._z2[i, j])

    def __matmul__(self, other):
        if isinstance(other, (BCMatrix, BCVector)):
            return matmul(self, other)
        return NotImplemented

    @property
    def H(self) -> "BCMatrix":
        return adjoint(self)

    def __repr__(self):
        return f"BCMatrix(rows={self.rows}, cols={self.cols})"


def split(m: _BCArray):
    return m.split()


def join(left, right) -> BCMatrix:
    return BCMatrix.join(left, right)


def matmul(a: BCMatrix, b):
    """Product ``a @ b`` in z-coordinates (uses ``j*j = -1``)."""
    if a.cols != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    z1 = a.z1 @ b.z1 - a.z2 @ b.z2
    z2 = a.z1 @ b.z2 + a.z2 @ b.z1
    return type(b)(z1, z2)


def matvec(a: BCMatrix, x: BCVector) -> BCVector:
    return matmul(a, x)


def adjoint(m: BCMatrix) -> BCMatrix:
    """Star-conjugate transpose, i.e. ``e1*M'^H + e2*M''^H``."""
    return BCMatrix(m.z1.conj().T, -m.z2.conj().T)


def bc_inner(x: BCVector, y: BCVector) -> BiComplex:
    """``<x, y> = sum_i x_i * star(y_i)``; linear in the first slot."""
    if x.shape != y.shape:
        raise DimensionMismatchError(f"inner product of dims {x.dim} and {y.dim}")
    c1, c2 = y.z1.conj(), -y.z2.conj()
    return BiComplex(
        np.sum(x.z1 * c1 - x.z2 * c2),
        np.sum(x.z1 * c2 + x.z2 * c1),
    )


def inner_hyperbolic(x: BCVector) -> Hyperbolic:
    """``<x, x>`` as a hyperbolic number (its j-part is purely imaginary)."""
    a1 = float(np.vdot(x.left, x.left).real)
    a2 = float(np.vdot(x.right, x.right).real)
    return Hyperbolic.from_idempotent(a1, a2)


def vector_norm(x: BCVector) -> float:
    """Real norm ``sqrt((|x1|^2 + |x2|^2) / 2)`` over the idempotent components."""
    n1 = np.linalg.norm(x.left)
    n2 = np.linalg.norm(x.right)
    return float(np.sqrt((n1 * n1 + n2 * n2) / 2))


def _check_square_tuple(mats: Sequence[BCMatrix]) -> int:
    if not mats:
        raise DimensionMismatchError("empty matrix tuple")
    d = mats[0].rows
    for m in mats:
        if not m.is_square:
            raise NotSquareError(f"matrix of shape {m.shape} is not square")
        if m.rows != d:
            raise DimensionMismatchError(f"tuple mixes dimensions {d} and {m.rows}")
    return d


def complex_commutator_residual(mats: Sequence[np.ndarray]) -> float:
    """Largest ``|AB - BA|_F / (|A|_F |B|_F)`` over all pairs of the tuple."""
    worst = 0.0
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            a, b = mats[i], mats[j]
            c = np.linalg.norm(a @ b - b @ a)
            if c == 0.0:
                continue
            worst = max(worst, c / (np.linalg.norm(a) * np.linalg.norm(b)))
    return float(worst)


def commutator_residual(mats: Sequence[BCMatrix]) -> float:
    _check_square_tuple(mats)
    return max(
        complex_commutator_residual([m.left for m in mats]),
        complex_commutator_residual([m.right for m in mats]),
    )


def is_commuting_tuple(mats: Sequence[BCMatrix], tol: float = TAU_COMMUTE) -> bool:
    """Commutation of a bicomplex tuple, tested on both idempotent components."""
    return commutator_residual(mats) <= tol


def _component_singular_values(m: BCMatrix):
    if not m.is_square:
        raise NotSquareError(f"matrix of shape {m.shape} is not square")
    return (
        np.linalg.svd(m.left, compute_uv=False),
        np.linalg.svd(m.right, compute_uv=False),
    )


def is_invertible(m: BCMatrix, tol: float = TAU_SING) -> bool:
    s1, s2 = _component_singular_values(m)
    if m.rows == 0:
        return True
    scale = max(s1[0], s2[0])
    if scale == 0.0:
        return False
    return bool(s1[-1] > tol * scale and s2[-1] > tol * scale)


def inv(m: BCMatrix, tol: float = TAU_SING) -> BCMatrix:
    if not is_invertible(m, tol):
        s1, s2 = _component_singular_values(m)
        if s1[0] == 0.0 and s2[0] == 0.0:
            raise ZeroInputError("cannot invert the zero matrix")
        raise ZeroDivisorError("matrix is singular in at least one idempotent component")
    return BCMatrix.join(np.linalg.inv(m.left), np.linalg.inv(m.right))


def det(m: BCMatrix) -> BiComplex:
    if not m.is_square:
        raise NotSquareError(f"matrix of shape {m.shape} is not square")
    return BiComplex.from_idempotent(np.linalg.det(m.left), np.linalg.det(m.right))


def is_unitary(m: BCMatrix, tol: float = TAU_UNITARY) -> bool:
    if not m.is_square:
        return False
    eye = np.eye(m.rows)
    return all(np.linalg.norm(c.conj().T @ c - eye, ord=2) <= tol for c in m.split())


def strictly_lower_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(np.tril(a, -1)))

