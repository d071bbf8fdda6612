"""Independent reference computations used to cross-check the spectral routines.

Nothing here touches the recursive eigenspace search or the triangularization;
everything is brute force over candidate values plus a direct singular-value
test for a common eigenvector.
"""

from __future__ import annotations

import itertools
from typing import List, Sequence, Tuple

import numpy as np

from .core import BiComplex
from .linalg import BCMatrix

TAU_ORACLE = 1e-8


def common_eigenvector_residual(mats: Sequence[np.ndarray], lambdas: Sequence[complex]) -> float:
    """Smallest singular value of the stacked shifts, relative to ``max(1, |stack|_2)``."""
    d = mats[0].shape[0]
    stack = np.vstack([a - lam * np.eye(d) for a, lam in zip(mats, lambdas)])
    s = np.linalg.svd(stack, compute_uv=False)
    return float(s[-1] / max(1.0, s[0]))


def has_common_eigenvector(mats: Sequence[np.ndarray], lambdas: Sequence[complex], tol: float = TAU_ORACLE) -> bool:
    return common_eigenvector_residual(mats, lambdas) <= tol


def bicomplex_eigenvector_exists(mats: Sequence[BCMatrix], lambdas: Sequence, tol: float = TAU_ORACLE) -> bool:
    """Is there a nonzero bicomplex ``x`` with ``A_k x = lambda_k x`` for all k?

    ``x = x1*e1 + x2*e2`` is nonzero iff ``x1`` or ``x2`` is, so the question
    splits into two independent complex problems.
    """
    lambdas = [BiComplex.coerce(z).idempotent() for z in lambdas]
    left = has_common_eigenvector([a.left for a in mats], [b.beta1 for b in lambdas], tol)
    right = has_common_eigenvector([a.right for a in mats], [b.beta2 for b in lambdas], tol)
    return left or right


def _dedupe(points: List[Tuple[complex, ...]], tol: float) -> List[Tuple[complex, ...]]:
    kept = []
    for p in points:
        ref = max([1.0] + [abs(z) for z in p])
        if not any(max(abs(a - b) for a, b in zip(p, q)) <= tol * ref for q in kept):
            kept.append(p)
    return kept


def brute_force_joint_spectrum(mats: Sequence[np.ndarray], tol: float = TAU_ORACLE) -> List[Tuple[complex, ...]]:
    """Every combination of individual eigenvalues that admits a common eigenvector."""
    mats = [np.asarray(a, dtype=complex) for a in mats]
    candidates = [np.linalg.eigvals(a) for a in mats]
    found = [
        tuple(complex(z) for z in combo)
        for combo in itertools.product(*candidates)
        if has_common_eigenvector(mats, combo, tol)
    ]
    return _dedupe(found, 1e-6)


def brute_force_residual_spectrum(mats: Sequence[np.ndarray], tol: float = TAU_ORACLE) -> List[Tuple[complex, ...]]:
    adj = [np.asarray(a, dtype=complex).conj().T for a in mats]
    return [tuple(z.conjugate() for z in p) for p in brute_force_joint_spectrum(adj, tol)]


def same_point_sets(a, b, tol: float = 1e-8) -> bool:
    """Set equality of complex tuples up to a relative tolerance."""

    def covered(xs, ys):
        return all(
            any(max(abs(p - q) for p, q in zip(x, y)) <= tol * max([1.0] + [abs(q) for q in y]) for y in ys)
            for x in xs
        )

    return covered(a, b) and covered(b, a)


def same_multisets(a: Sequence[complex], b: Sequence[complex], tol: float = 1e-8) -> bool:
    """Multiset equality of complex numbers by greedy nearest matching."""
    if len(a) != len(b):
        return False
    remaining = list(b)
    ref = max([1.0] + [abs(z) for z in b])
    for z in a:
        i = int(np.argmin([abs(z - w) for w in remaining]))
        if abs(z - remaining[i]) > tol * ref:
            return False
        remaining.pop(i)
    return True
