"""Randomized property suite behind ``bcspectra verify``.

Each property draws fresh random data per trial from one seeded generator, so
a fixed seed reproduces the report exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict

import numpy as np

from . import oracles
from .core import E1, E2, ONE, BiComplex, Order, d_plus_compare, euclid_norm, hyper_norm, to_idempotent
from .generators import random_bc_matrix, random_bicomplex, random_commuting_tuple, random_complex
from .linalg import BCMatrix, adjoint, is_unitary
from .pair import approximate_point_query, joint_spectrum_query, pair_point_spectrum, pair_residual_spectrum
from .spectra import (
    bc_joint_point_spectrum,
    check_radius_bound,
    simultaneous_triangularize,
    tuple_close,
)


@dataclass
class PropertyTally:
    passed: int = 0
    failed: int = 0
    max_error: float = 0.0

    def record(self, ok: bool, error: float = 0.0):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
        if math.isfinite(error):
            self.max_error = max(self.max_error, float(error))

    def as_dict(self):
        return {"passed": self.passed, "failed": self.failed, "max_error": self.max_error}


@dataclass
class VerifyReport:
    seed: int
    trials: int
    properties: Dict[str, PropertyTally] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.properties.values())

    def as_dict(self):
        return {
            "seed": self.seed,
            "trials": self.trials,
            "all_passed": self.ok,
            "properties": {k: v.as_dict() for k, v in self.properties.items()},
        }


def _rel(a: BiComplex, b: BiComplex) -> float:
    return euclid_norm(a - b) / max(1.0, euclid_norm(a), euclid_norm(b))


def check_ring_identities(rng, tally: PropertyTally, tol: float = 1e-12):
    for x, y in [(E1 * E1, E1), (E2 * E2, E2), (E1 * E2, BiComplex()), (E1 + E2, ONE)]:
        tally.record(_rel(x, y) <= tol, _rel(x, y))
    z, w, u = (random_bicomplex(rng) for _ in range(3))
    errors = [
        _rel((z * w) * u, z * (w * u)),
        _rel(z * (w + u), z * w + z * u),
        _rel(z * w, w * z),
        _rel(z.star(), z.bar().dagger()),
        _rel((z * w).star(), z.star() * w.star()),
    ]
    p, q, r = to_idempotent(z * w), to_idempotent(z), to_idempotent(w)
    errors.append(abs(p.beta1 - q.beta1 * r.beta1) / max(1.0, abs(p.beta1)))
    errors.append(abs(p.beta2 - q.beta2 * r.beta2) / max(1.0, abs(p.beta2)))
    a, b = random_bc_matrix(rng, 4), random_bc_matrix(rng, 4)
    prod = a @ b
    scale = max(1.0, np.linalg.norm(a.left) * np.linalg.norm(b.left), np.linalg.norm(a.right) * np.linalg.norm(b.right))
    errors.append(np.linalg.norm(prod.left - a.left @ b.left) / scale)
    errors.append(np.linalg.norm(prod.right - a.right @ b.right) / scale)
    errors.append((BCMatrix.join(*a.split()) - a).euclid_norm() / max(1.0, a.euclid_norm()))
    err = max(errors)
    tally.record(err <= tol, err)


def check_norm_multiplicativity(rng, tally: PropertyTally, tol: float = 1e-12):
    z, w = random_bicomplex(rng), random_bicomplex(rng)
    lhs, rhs = hyper_norm(z * w), hyper_norm(z) * hyper_norm(w)
    err = max(abs(lhs.a1 - rhs.a1), abs(lhs.a2 - rhs.a2)) / max(1.0, abs(rhs.a1), abs(rhs.a2))
    sub = d_plus_compare(hyper_norm(z + w), hyper_norm(z) + hyper_norm(w), tol=1e-12)
    tally.record(err <= tol and sub in (Order.LESS_OR_EQUAL, Order.EQUAL), err)


def _probe_points(sample, rng, m):
    """Known members (with free slot far out), perturbed non-members and random far points."""
    probes = []
    for side in ("left", "right"):
        truth = getattr(sample, side).spectrum
        for lam in truth:
            free = random_complex(rng, m, scale=10.0 ** rng.integers(0, 7))
            if side == "left":
                probes.append([BiComplex.from_idempotent(a, b) for a, b in zip(lam, free)])
            else:
                probes.append([BiComplex.from_idempotent(b, a) for a, b in zip(lam, free)])
            shift = 1e-2 * max(1.0, max(abs(x) for x in lam))
            bumped = [x + shift for x in lam]
            other = random_complex(rng, m, scale=1e3)
            probes.append([BiComplex.from_idempotent(a, b) for a, b in zip(bumped, other)])
    for _ in range(3):
        probes.append([BiComplex(*random_complex(rng, 2, scale=1e6)) for _ in range(m)])
    return probes


def check_point_spectrum(rng, tallies: Dict[str, PropertyTally], d: int, m: int):
    sample = random_commuting_tuple(rng, d, m)
    spec = bc_joint_point_spectrum(sample.matrices)
    tallies["nonempty"].record(bool(spec.left) and bool(spec.right))
    disagreements = 0
    for lam in _probe_points(sample, rng, m):
        if spec.contains(lam) != oracles.bicomplex_eigenvector_exists(sample.matrices, lam):
            disagreements += 1
    tallies["joint_spectrum_oracle"].record(disagreements == 0, disagreements)

    tri = simultaneous_triangularize(sample.matrices)
    worst_lower = max(
        np.linalg.norm(np.tril(c, -1)) / max(1.0, np.linalg.norm(a, 2))
        for t, a in zip(tri.triangular, sample.matrices)
        for c, a in ((t.left, a.left), (t.right, a.right))
    )
    diag_ok = all(
        oracles.same_multisets(np.diag(tc), np.linalg.eigvals(ac), 1e-8)
        for t, a in zip(tri.triangular, sample.matrices)
        for tc, ac in ((t.left, a.left), (t.right, a.right))
    )
    tallies["triangularization"].record(is_unitary(tri.unitary, 1e-10) and worst_lower <= 1e-9 and diag_ok, worst_lower)
    return sample


def check_bound_chain(sample, tally: PropertyTally, tol: float = 1e-9):
    for p in (1.0, 2.0, 3.0):
        bound = check_radius_bound(sample.matrices, p)
        worst = min(bound.links().values())
        tally.record(bound.holds and worst >= -tol, max(0.0, -worst))


def check_pair(rng, tallies: Dict[str, PropertyTally], d: int):
    sample = random_commuting_tuple(rng, d, 2)
    t1, t2 = sample.matrices
    point = pair_point_spectrum(t1, t2)
    ok = True
    worst = 0.0
    for side, pairs in (("e1", point.left), ("e2", point.right)):
        for pair in pairs:
            for _ in range(3):
                free = random_complex(rng, 2, scale=10.0 ** rng.integers(0, 7))
                if side == "e1":
                    z1 = BiComplex.from_idempotent(pair.lambdas[0], free[0])
                    z2 = BiComplex.from_idempotent(pair.lambdas[1], free[1])
                else:
                    z1 = BiComplex.from_idempotent(free[0], pair.lambdas[0])
                    z2 = BiComplex.from_idempotent(free[1], pair.lambdas[1])
                joint = joint_spectrum_query(z1, z2, t1, t2)
                ap = approximate_point_query(z1, z2, t1, t2)
                ok &= joint.member and ap.member
                worst = max(worst, joint.smin)
                if ap.member:
                    k = 0 if ap.side == "e1" else 1
                    proj = (z1.idempotent()[k], z2.idempotent()[k])
                    finite = point.left_finite if k == 0 else point.right_finite
                    ok &= any(tuple_close(proj, f) for f in finite)
    tallies["pair_consistency"].record(ok, worst)

    residual = pair_residual_spectrum(t1, t2)
    ok = all(
        oracles.same_point_sets(found, oracles.brute_force_residual_spectrum([a1, a2]))
        for found, a1, a2 in (
            (residual.left_finite, t1.left, t2.left),
            (residual.right_finite, t1.right, t2.right),
        )
    )
    tallies["residual_formula"].record(ok)

    x = random_bc_matrix(rng, d)
    y = random_bc_matrix(rng, d)
    lhs = adjoint(x @ y)
    rhs = adjoint(y) @ adjoint(x)
    err = (lhs - rhs).euclid_norm() / max(1.0, lhs.euclid_norm())
    tallies["adjoint_antihomomorphism"].record(err <= 1e-12, err)


PROPERTIES = (
    "ring_identities",
    "norm_multiplicativity",
    "joint_spectrum_oracle",
    "nonempty",
    "triangularization",
    "bound_chain",
    "pair_consistency",
    "residual_formula",
    "adjoint_antihomomorphism",
)


def run_verification(seed: int = 42, trials: int = 100, progress: Callable[[int], None] | None = None) -> VerifyReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    report = VerifyReport(seed, trials, {name: PropertyTally() for name in PROPERTIES})
    tallies = report.properties
    for trial in range(trials):
        check_ring_identities(rng, tallies["ring_identities"])
        check_norm_multiplicativity(rng, tallies["norm_multiplicativity"])
        d, m = int(rng.integers(1, 5)), int(rng.integers(1, 4))
        sample = check_point_spectrum(rng, tallies, d, m)
        check_bound_chain(sample, tallies["bound_chain"])
        check_pair(rng, tallies, int(rng.integers(1, 7)))
        if progress is not None:
            progress(trial)
    return report
