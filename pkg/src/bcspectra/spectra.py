"""Joint spectra of commuting bicomplex matrix tuples.

For a tuple ``A = (A_1, ..., A_m)`` with ``A_k = A_k' e1 + A_k'' e2`` a bicomplex
joint eigenvalue only has to match a joint eigenvalue of the primed tuple *or*
of the double-primed tuple; the other idempotent slot is free.  The full point
spectrum is therefore unbounded and is represented by its two finite parts
(``SpectrumSet``).  The bounded "restricted" spectrum pairs the diagonals of a
simultaneous triangularization of both component tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from .core import BiComplex
from .errors import BadExponentError, DimensionMismatchError, NotCommutingError, NotSquareError
from .linalg import TAU_COMMUTE, BCMatrix, commutator_residual, complex_commutator_residual

TAU_EIG = 1e-8
TAU_MATCH = 1e-8
TAU_CLUSTER = 1e-8
TAU_TRI = 1e-9
TAU_INEQ = 1e-9

ComplexTuple = Tuple[complex, ...]


@dataclass(frozen=True)
class JointEigenpair:
    """A joint eigenvalue of a complex tuple with a witnessing eigenvector.

    ``basis`` spans the whole joint eigenspace (orthonormal columns);
    ``vector`` is its first column.
    """

    lambdas: ComplexTuple
    vector: np.ndarray = field(repr=False, compare=False)
    basis: np.ndarray = field(repr=False, compare=False)
    residual: float = 0.0

    @property
    def multiplicity(self) -> int:
        return self.basis.shape[1]


def _scale(mats: Sequence[np.ndarray]) -> float:
    return max([1.0] + [float(np.linalg.norm(a, 2)) for a in mats if a.size])


def _check_complex_tuple(mats) -> List[np.ndarray]:
    mats = [np.asarray(a, dtype=complex) for a in mats]
    if not mats:
        raise DimensionMismatchError("empty matrix tuple")
    d = mats[0].shape[0]
    for a in mats:
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NotSquareError(f"matrix of shape {a.shape} is not square")
        if a.shape[0] != d:
            raise DimensionMismatchError(f"tuple mixes dimensions {d} and {a.shape[0]}")
    if d == 0:
        raise DimensionMismatchError("zero-dimensional matrices")
    return mats


def _cluster(values: np.ndarray, tol: float) -> List[complex]:
    """Merge eigenvalues closer than ``tol`` (single linkage); return cluster means."""
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= tol:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(values[i])
    return [complex(np.mean(g)) for g in groups.values()]


def _null_basis(b: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis of the numerical kernel of ``b``; never empty."""
    _, s, vh = np.linalg.svd(b)
    rank = int(np.sum(s > tol))
    rank = min(rank, b.shape[1] - 1)
    return vh[rank:].conj().T


def _joint_eigenspaces(mats, basis, cluster_tol, null_tol):
    if not mats:
        yield (), basis
        return
    restricted = basis.conj().T @ mats[0] @ basis
    k = restricted.shape[0]
    for mu in _cluster(np.linalg.eigvals(restricted), cluster_tol):
        kernel = _null_basis(restricted - mu * np.eye(k), null_tol)
        sub, _ = np.linalg.qr(basis @ kernel)
        for rest, q in _joint_eigenspaces(mats[1:], sub, cluster_tol, null_tol):
            yield (mu,) + rest, q


def _sort_key(lambdas: ComplexTuple):
    return tuple(x for z in lambdas for x in (round(z.real, 9), round(z.imag, 9)))


def complex_joint_point_spectrum(
    mats: Sequence[np.ndarray],
    *,
    check: bool = True,
    tol_commute: float = TAU_COMMUTE,
    tol_cluster: float = TAU_CLUSTER,
) -> List[JointEigenpair]:
    """All joint eigenvalues of a commuting tuple of complex matrices.

    Eigenvalues of the first matrix are clustered, the tuple is restricted to
    each eigenspace (invariant because the matrices commute) and the search
    recurses on the next matrix.  Every path through the recursion ends in a
    joint eigenspace.  Results are sorted lexicographically by (re, im) of the
    coordinates.
    """
    mats = _check_complex_tuple(mats)
    if check:
        residual = complex_commutator_residual(mats)
        if residual > tol_commute:
            raise NotCommutingError(residual)
    scale = _scale(mats)
    d = mats[0].shape[0]
    pairs = []
    for path, q in _joint_eigenspaces(mats, np.eye(d, dtype=complex), tol_cluster * scale, tol_cluster * scale):
        # Rayleigh quotients over the eigenspace are more accurate than cluster means.
        lambdas = tuple(complex(np.trace(q.conj().T @ a @ q) / q.shape[1]) for a in mats)
        v = q[:, 0]
        residual = max(float(np.linalg.norm(a @ v - lam * v)) for a, lam in zip(mats, lambdas))
        pairs.append(JointEigenpair(lambdas, v, q, residual / scale))
    pairs.sort(key=lambda p: _sort_key(p.lambdas))
    return pairs


def tuple_close(a: Sequence[complex], b: Sequence[complex], tol: float = TAU_MATCH) -> bool:
    if len(a) != len(b):
        return False
    ref = max([1.0] + [abs(z) for z in b])
    return max(abs(x - y) for x, y in zip(a, b)) <= tol * ref


def _contains_tuple(candidates, point, tol) -> bool:
    return any(tuple_close(point, c, tol) for c in candidates)


def _projections(lambdas: Sequence) -> Tuple[ComplexTuple, ComplexTuple]:
    lambdas = [BiComplex.coerce(z) for z in lambdas]
    return (
        tuple(z.idempotent().beta1 for z in lambdas),
        tuple(z.idempotent().beta2 for z in lambdas),
    )


@dataclass(frozen=True)
class SpectrumSet:
    """Point spectrum ``L*e1 + C^m*e2  U  C^m*e1 + R*e2`` of a bicomplex tuple.

    Only the finite parts ``L`` and ``R`` are stored; everything else is implied.
    """

    left: Tuple[JointEigenpair, ...]
    right: Tuple[JointEigenpair, ...]

    @property
    def left_finite(self) -> List[ComplexTuple]:
        return [p.lambdas for p in self.left]

    @property
    def right_finite(self) -> List[ComplexTuple]:
        return [p.lambdas for p in self.right]

    @property
    def m(self) -> int:
        return len((self.left or self.right)[0].lambdas)

    @property
    def is_empty(self) -> bool:
        return not self.left and not self.right

    @property
    def is_bounded(self) -> bool:
        return self.is_empty

    def witness_side(self, lambdas: Sequence, tol: float = TAU_MATCH) -> str:
        """'e1' or 'e2' for the idempotent slot that certifies membership, else 'none'."""
        p1, p2 = _projections(lambdas)
        if _contains_tuple(self.left_finite, p1, tol):
            return "e1"
        if _contains_tuple(self.right_finite, p2, tol):
            return "e2"
        return "none"

    def contains(self, lambdas: Sequence, tol: float = TAU_MATCH) -> bool:
        return self.witness_side(lambdas, tol) != "none"

    __contains__ = contains


def _check_bc_tuple(mats: Sequence[BCMatrix], tol_commute: float) -> None:
    if not mats:
        raise DimensionMismatchError("empty matrix tuple")
    residual = commutator_residual(mats)
    if residual > tol_commute:
        raise NotCommutingError(residual)


def bc_joint_point_spectrum(mats: Sequence[BCMatrix], *, tol_commute: float = TAU_COMMUTE) -> SpectrumSet:
    _check_bc_tuple(mats, tol_commute)
    left = complex_joint_point_spectrum([a.left for a in mats], check=False)
    right = complex_joint_point_spectrum([a.right for a in mats], check=False)
    return SpectrumSet(tuple(left), tuple(right))


class Triangularization(NamedTuple):
    unitary: BCMatrix
    triangular: List[BCMatrix]


def _is_upper(mats, tol) -> bool:
    return all(np.linalg.norm(np.tril(a, -1)) <= tol * max(1.0, np.linalg.norm(a)) for a in mats)


def _triangularize_complex(mats: List[np.ndarray]) -> np.ndarray:
    """Unitary ``W`` with every ``W^H A W`` upper triangular (commuting input)."""
    d = mats[0].shape[0]
    if d == 1 or _is_upper(mats, TAU_TRI * 1e-3):
        return np.eye(d, dtype=complex)
    pairs = complex_joint_point_spectrum(mats, check=False)
    v = pairs[0].vector
    q, _ = np.linalg.qr(v.reshape(d, 1), mode="complete")
    blocks = [q.conj().T @ a @ q for a in mats]
    inner = _triangularize_complex([b[1:, 1:] for b in blocks])
    w = np.eye(d, dtype=complex)
    w[1:, 1:] = inner
    return q @ w


def simultaneous_triangularize(mats: Sequence[BCMatrix], *, tol_commute: float = TAU_COMMUTE) -> Triangularization:
    """Unitary ``V = e1*U' + e2*U''`` with ``V A_j V*`` upper triangular for every j."""
    _check_bc_tuple(mats, tol_commute)
    u_left = _triangularize_complex([a.left for a in mats]).conj().T
    u_right = _triangularize_complex([a.right for a in mats]).conj().T
    v = BCMatrix.join(u_left, u_right)
    vh = v.H
    return Triangularization(v, [v @ a @ vh for a in mats])


@dataclass(frozen=True)
class RestrictedSpectrum:
    """The ``d`` diagonal points of a simultaneous triangularization."""

    points: Tuple[Tuple[BiComplex, ...], ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def left_points(self) -> List[ComplexTuple]:
        return [_projections(p)[0] for p in self.points]

    @property
    def right_points(self) -> List[ComplexTuple]:
        return [_projections(p)[1] for p in self.points]

    def contains(self, lambdas: Sequence, *, cross: bool = False, tol: float = TAU_MATCH) -> bool:
        """Membership; ``cross=True`` accepts any left point combined with any right point."""
        p1, p2 = _projections(lambdas)
        if cross:
            return _contains_tuple(self.left_points, p1, tol) and _contains_tuple(self.right_points, p2, tol)
        return any(
            tuple_close(p1, l, tol) and tuple_close(p2, r, tol)
            for l, r in zip(self.left_points, self.right_points)
        )

    __contains__ = contains


def _restricted_from(tri: Triangularization) -> RestrictedSpectrum:
    d = tri.unitary.rows
    return RestrictedSpectrum(tuple(tuple(t[i, i] for t in tri.triangular) for i in range(d)))


def restricted_spectrum(mats: Sequence[BCMatrix], *, tol_commute: float = TAU_COMMUTE) -> RestrictedSpectrum:
    return _restricted_from(simultaneous_triangularize(mats, tol_commute=tol_commute))


def _check_p(p: float) -> float:
    p = float(p)
    if not (p >= 1.0):
        raise BadExponentError(f"exponent p must be >= 1, got {p}")
    return p


def _pnorm(values, p: float) -> float:
    values = np.abs(np.asarray(values, dtype=complex))
    if values.size == 0:
        return 0.0
    if math.isinf(p):
        return float(values.max())
    return float(np.sum(values**p) ** (1.0 / p))


def component_norms(lambdas: Sequence, p: float) -> Tuple[float, float]:
    """p-norms of the e1 and e2 projections of a bicomplex tuple."""
    p = _check_p(p)
    p1, p2 = _projections(lambdas)
    return _pnorm(p1, p), _pnorm(p2, p)


def tuple_norm(lambdas: Sequence, p: float = 2.0) -> float:
    """``sqrt(( |mu|_p + |gamma|_p ) / 2)`` for ``lambda^k = mu^k e1 + gamma^k e2``."""
    n1, n2 = component_norms(lambdas, p)
    return math.sqrt((n1 + n2) / 2)


def geometric_spectral_radius(mats: Sequence[BCMatrix], p: float = 2.0, *, tol_commute: float = TAU_COMMUTE) -> float:
    p = _check_p(p)
    return max(tuple_norm(pt, p) for pt in restricted_spectrum(mats, tol_commute=tol_commute))


# -- operator tuple norms --------------------------------------------------------


class NormBracket(NamedTuple):
    lower: float
    upper: float

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def _matrix_pnorm_exact(m: np.ndarray, p: float):
    if p == 1.0:
        return float(np.abs(m).sum(axis=0).max())
    if p == 2.0:
        return float(np.linalg.svd(m, compute_uv=False)[0])
    if math.isinf(p):
        return float(np.abs(m).sum(axis=1).max())
    return None


def _dual(x: np.ndarray, p: float) -> np.ndarray:
    """Vector ``y`` with ``|y|_q = 1`` and ``y^H x = |x|_p``."""
    a = np.abs(x)
    n = _pnorm(x, p)
    phase = np.where(a > 0, x / np.where(a > 0, a, 1.0), 0.0)
    return phase * (a / n) ** (p - 1)


def _pnorm_lower(m: np.ndarray, p: float, starts: Sequence[np.ndarray], iters: int = 100) -> float:
    """Best value of ``|Mx|_p / |x|_p`` found by the dual power iteration."""
    q = p / (p - 1)
    best = 0.0
    for x in starts:
        if _pnorm(x, p) == 0.0:
            continue
        x = x / _pnorm(x, p)
        for _ in range(iters):
            y = m @ x
            val = _pnorm(y, p)
            best = max(best, val)
            if val == 0.0:
                break
            z = m.conj().T @ _dual(y, p)
            if _pnorm(z, q) <= np.real(np.vdot(z, x)) * (1 + 1e-12):
                break
            x = _dual(z, q)
            x = x / _pnorm(x, p)
    return best


def matrix_pnorm(m: np.ndarray, p: float) -> NormBracket:
    """Induced ``l_p -> l_p`` norm of a complex matrix, exact for p in {1, 2, inf}.

    Other exponents get a bracket: the lower end is a value actually attained
    by the dual power iteration, the upper end is the Riesz-Thorin
    interpolation bound between the neighbouring exact norms.
    """
    p = _check_p(p)
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return NormBracket(0.0, 0.0)
    exact = _matrix_pnorm_exact(m, p)
    if exact is not None:
        return NormBracket(exact, exact)
    n1, n2, ninf = (_matrix_pnorm_exact(m, r) for r in (1.0, 2.0, math.inf))
    if p < 2.0:
        theta = 2.0 / p - 1.0  # 1/p = theta/1 + (1-theta)/2
        upper = n1**theta * n2 ** (1 - theta)
    else:
        theta = 2.0 / p  # 1/p = theta/2 + (1-theta)/inf
        upper = n2**theta * ninf ** (1 - theta)
    upper = min(upper, n1 ** (1 / p) * ninf ** (1 - 1 / p))
    _, _, vh = np.linalg.svd(m)
    starts = [vh[0].conj(), np.ones(m.shape[1], dtype=complex)] + list(np.eye(m.shape[1], dtype=complex))
    lower = min(_pnorm_lower(m, p, starts), upper)
    return NormBracket(lower, upper)


def component_tuple_norm(mats: Sequence[np.ndarray], p: float) -> NormBracket:
    """``sup_{|x|_p=1} (sum_j |A_j x|_p^p)^(1/p)``, the p-norm of the stacked matrix."""
    return matrix_pnorm(np.vstack([np.asarray(a, dtype=complex) for a in mats]), p)


def operator_tuple_norm_bracket(mats: Sequence[BCMatrix], p: float = 2.0) -> Tuple[NormBracket, NormBracket, NormBracket]:
    """Brackets for the left component, right component and combined tuple norm."""
    p = _check_p(p)
    if not mats:
        raise DimensionMismatchError("empty matrix tuple")
    n1 = component_tuple_norm([a.left for a in mats], p)
    n2 = component_tuple_norm([a.right for a in mats], p)
    combined = NormBracket(math.sqrt((n1.lower + n2.lower) / 2), math.sqrt((n1.upper + n2.upper) / 2))
    return n1, n2, combined


def operator_tuple_norm(mats: Sequence[BCMatrix], p: float = 2.0) -> float:
    """``sqrt((|T_1|_p + |T_2|_p) / 2)``; the certified upper bound when p is not 1, 2 or inf."""
    return operator_tuple_norm_bracket(mats, p)[2].upper


@dataclass(frozen=True)
class RadiusBound:
    """Both sides of ``r_p(T) <= |T|_p`` and every intermediate link."""

    p: float
    point_norms: Tuple[float, ...]
    radius_left: float
    radius_right: float
    r_p: float
    half_radius: float
    norm_left: NormBracket
    norm_right: NormBracket
    norm_p: float
    norm_p_lower: float
    holds: bool
    tol: float

    @property
    def norm_exact(self) -> bool:
        return self.norm_left.exact and self.norm_right.exact

    def links(self) -> dict:
        """Slack of each link of the chain (nonnegative when the link holds)."""
        return {
            "point_vs_radius": self.half_radius - max(self.point_norms),
            "left_radius_vs_norm": self.norm_left.upper - self.radius_left,
            "right_radius_vs_norm": self.norm_right.upper - self.radius_right,
            "radius_vs_norm": self.norm_p - self.half_radius,
            "norm_identity": -abs(self.norm_p - math.sqrt((self.norm_left.upper + self.norm_right.upper) / 2)),
        }


def check_radius_bound(
    mats: Sequence[BCMatrix],
    p: float = 2.0,
    *,
    tol: float = TAU_INEQ,
    tol_commute: float = TAU_COMMUTE,
) -> RadiusBound:
    p = _check_p(p)
    restricted = restricted_spectrum(mats, tol_commute=tol_commute)
    comps = [component_norms(pt, p) for pt in restricted]
    point_norms = tuple(math.sqrt((a + b) / 2) for a, b in comps)
    r_left = max(a for a, _ in comps)
    r_right = max(b for _, b in comps)
    n1, n2, combined = operator_tuple_norm_bracket(mats, p)
    r_p = max(point_norms)
    scale = max(1.0, combined.upper)
    return RadiusBound(
        p=p,
        point_norms=point_norms,
        radius_left=r_left,
        radius_right=r_right,
        r_p=r_p,
        half_radius=math.sqrt((r_left + r_right) / 2),
        norm_left=n1,
        norm_right=n2,
        norm_p=combined.upper,
        norm_p_lower=combined.lower,
        holds=r_p <= combined.upper + tol * scale,
        tol=tol,
    )
