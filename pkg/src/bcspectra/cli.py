"""Command-line front end.

Exit codes: 0 ok, 2 input/config error, 3 commutativity precondition failed,
4 a checked property or bound failed.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import click
import numpy as np

from . import io
from .core import BiComplex, hyper_norm
from .errors import DimensionMismatchError, NotCommutingError, ParseError
from .linalg import TAU_COMMUTE, BCMatrix, commutator_residual, is_invertible
from .pair import (
    TAU_MEMBER,
    approximate_point_query,
    joint_spectrum_query,
    pair_point_spectrum,
    pair_residual_spectrum,
)
from .spectra import (
    TAU_EIG,
    TAU_MATCH,
    bc_joint_point_spectrum,
    check_radius_bound,
    simultaneous_triangularize,
)
from .verify import run_verification

EXIT_OK, EXIT_INPUT, EXIT_COMMUTE, EXIT_PROPERTY = 0, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    p: float = 2.0
    tol_sing: float = TAU_MEMBER
    tol_eig: float = TAU_EIG
    tol_match: float = TAU_MATCH
    tol_commute: float = TAU_COMMUTE
    fmt: str = "text"


def _positive(ctx, param, value):
    if value is not None and not value > 0:
        raise click.BadParameter("must be positive")
    return value


def _config_options(fn):
    opts = [
        click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False), help="JSON input file."),
        click.option("--tol-sing", type=float, default=TAU_MEMBER, show_default=True, callback=_positive,
                     help="Relative singular-value threshold for membership queries."),
        click.option("--tol-eig", type=float, default=TAU_EIG, show_default=True, callback=_positive,
                     help="Maximum relative eigen-residual accepted for reported eigenpairs."),
        click.option("--tol-match", type=float, default=TAU_MATCH, show_default=True, callback=_positive),
        click.option("--tol-commute", type=float, default=TAU_COMMUTE, show_default=True, callback=_positive),
        click.option("--format", "fmt", type=click.Choice(["text", "machine"]), default="text", show_default=True),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _emit(fmt: str, machine: dict, text: str):
    click.echo(io.dumps(machine) if fmt == "machine" else text)


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _tuples_json(tuples):
    return [[io.complex_to_json(z) for z in t] for t in tuples]


def _fmt_tuple(t) -> str:
    return "(" + ", ".join(f"{z.real + 0.0:.10g}{z.imag + 0.0:+.10g}i" for z in t) + ")"


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Spectral computations over the bicomplex numbers."""


# -- decompose ------------------------------------------------------------------


def _decompose_scalar(z: BiComplex) -> dict:
    b1, b2 = z.idempotent()
    back = BiComplex.from_idempotent(b1, b2)
    return {
        "value": io.bicomplex_to_json(z),
        "beta1": io.complex_to_json(b1),
        "beta2": io.complex_to_json(b2),
        "hyperbolic_norm": io.hyperbolic_to_json(hyper_norm(z)),
        "euclidean_norm": abs(z),
        "residual": abs(back - z),
    }


def _decompose_matrix(m: BCMatrix) -> dict:
    left, right = m.split()
    back = BCMatrix.join(left, right)
    return {
        "rows": m.rows,
        "cols": m.cols,
        "left": [[io.complex_to_json(x) for x in row] for row in left],
        "right": [[io.complex_to_json(x) for x in row] for row in right],
        "invertible": is_invertible(m) if m.is_square else False,
        "residual": (back - m).euclid_norm(),
    }


def _parse_decompose(obj):
    if isinstance(obj, dict) and "matrices" in obj:
        return "matrices", io.load_tuple(obj)
    if isinstance(obj, dict) and "rows" in obj:
        return "matrices", [io.matrix_from_json(obj)]
    if isinstance(obj, dict) and "scalars" in obj:
        if not isinstance(obj["scalars"], list):
            raise ParseError("'scalars' must be a list")
        return "scalars", [io.bicomplex_from_json(s) for s in obj["scalars"]]
    if isinstance(obj, dict) and "z1" in obj:
        return "scalars", [io.bicomplex_from_json(obj)]
    raise ParseError("expected a bicomplex scalar, {'scalars': [...]}, a matrix or {'matrices': [...]}")


@main.command()
@_config_options
def decompose(input_path, fmt, **_):
    """Idempotent split of bicomplex scalars or matrices."""
    try:
        kind, items = _parse_decompose(io.load_json(input_path))
    except (ParseError, ValueError) as exc:
        _fail(EXIT_INPUT, str(exc))
    if kind == "scalars":
        records = [_decompose_scalar(z) for z in items]
        lines = [
            f"Z = {z}\n  = {z.idempotent_str()}\n  |Z| = {abs(z):.12g}   |Z|_k = {hyper_norm(z)}   "
            f"residual = {r['residual']:.3e}"
            for z, r in zip(items, records)
        ]
    else:
        records = [_decompose_matrix(m) for m in items]
        lines = []
        for idx, (m, r) in enumerate(zip(items, records)):
            left, right = m.split()
            lines.append(f"matrix {idx} ({m.rows}x{m.cols}), residual {r['residual']:.3e}")
            lines.append(f"  e1 component:\n{np.array2string(left, precision=6, prefix='    ')}")
            lines.append(f"  e2 component:\n{np.array2string(right, precision=6, prefix='    ')}")
    _emit(fmt, {kind: records}, "\n".join(lines))


# -- spectrum -------------------------------------------------------------------


def spectrum_report(mats, p: float, cfg: RunConfig) -> dict:
    spec = bc_joint_point_spectrum(mats, tol_commute=cfg.tol_commute)
    tri = simultaneous_triangularize(mats, tol_commute=cfg.tol_commute)
    bound = check_radius_bound(mats, p, tol_commute=cfg.tol_commute)
    restricted = [[t[i, i] for t in tri.triangular] for i in range(tri.unitary.rows)]
    worst_eig = max(pair.residual for pair in spec.left + spec.right)
    return {
        "left_finite": _tuples_json(spec.left_finite),
        "right_finite": _tuples_json(spec.right_finite),
        "restricted": [[io.bicomplex_to_json(z) for z in pt] for pt in restricted],
        "p": p,
        "r_p": bound.r_p,
        "norm_p": bound.norm_p,
        "norm_p_lower": bound.norm_p_lower,
        "norm_exact": bound.norm_exact,
        "bound_holds": bound.holds,
        "commutator_residual": commutator_residual(mats),
        "max_eigen_residual": worst_eig,
        "eigen_residual_ok": worst_eig <= cfg.tol_eig,
    }


def _spectrum_text(report: dict) -> str:
    lines = ["joint point spectrum = L·e1 + C^m·e2  ∪  C^m·e1 + R·e2  (unbounded)"]
    for name, key in (("L", "left_finite"), ("R", "right_finite")):
        lines.append(f"  {name}:")
        for t in report[key]:
            lines.append("    " + _fmt_tuple([complex(*z) for z in t]))
    lines.append("restricted spectrum (triangular diagonals):")
    for pt in report["restricted"]:
        zs = [io.bicomplex_from_json(z) for z in pt]
        lines.append("    (" + ", ".join(z.idempotent_str() for z in zs) + ")")
    exact = "" if report["norm_exact"] else f" (certified upper bound; attained >= {report['norm_p_lower']:.10g})"
    lines.append(f"r_p        = {report['r_p']:.12g}   (p = {report['p']:g})")
    lines.append(f"||T||_p    = {report['norm_p']:.12g}{exact}")
    lines.append(f"r_p <= ||T||_p: {'holds' if report['bound_holds'] else 'VIOLATED'}")
    return "\n".join(lines)


@main.command()
@_config_options
@click.option("--p", "p", type=float, default=2.0, show_default=True, help="Exponent p >= 1.")
def spectrum(input_path, p, fmt, tol_sing, tol_eig, tol_match, tol_commute):
    """Joint point spectrum, restricted spectrum and the radius bound of a tuple."""
    if not p >= 1:
        _fail(EXIT_INPUT, f"--p must be >= 1, got {p}")
    cfg = RunConfig(p, tol_sing, tol_eig, tol_match, tol_commute, fmt)
    try:
        mats = io.load_tuple(io.load_json(input_path))
        report = spectrum_report(mats, p, cfg)
    except (ParseError, DimensionMismatchError) as exc:
        _fail(EXIT_INPUT, str(exc))
    except NotCommutingError as exc:
        _fail(EXIT_COMMUTE, f"{exc} (max commutator residual {exc.residual:.3e})")
    _emit(fmt, report, _spectrum_text(report))
    if not (report["bound_holds"] and report["eigen_residual_ok"]):
        sys.exit(EXIT_PROPERTY)


# -- pair -----------------------------------------------------------------------


def pair_report(t1: BCMatrix, t2: BCMatrix, queries, cfg: RunConfig) -> dict:
    point = pair_point_spectrum(t1, t2, tol_commute=cfg.tol_commute)
    residual = pair_residual_spectrum(t1, t2, tol_commute=cfg.tol_commute)
    results = []
    for z1, z2 in queries:
        joint = joint_spectrum_query(z1, z2, t1, t2, tol=cfg.tol_sing, tol_commute=cfg.tol_commute)
        ap = approximate_point_query(z1, z2, t1, t2, tol=cfg.tol_sing, tol_commute=cfg.tol_commute)
        results.append({
            "z1": io.bicomplex_to_json(z1),
            "z2": io.bicomplex_to_json(z2),
            "joint": joint.member,
            "ap": ap.member,
            "side": joint.side,
            "smin": joint.smin,
            "ap_side": ap.side,
            "ap_smin": ap.smin,
            "point": point.contains((z1, z2), cfg.tol_match),
            "residual": residual.contains((z1, z2), cfg.tol_match),
        })
    return {
        "point": {"left_finite": _tuples_json(point.left_finite), "right_finite": _tuples_json(point.right_finite)},
        "residual": {
            "left_finite": _tuples_json(residual.left_finite),
            "right_finite": _tuples_json(residual.right_finite),
        },
        "queries": results,
    }


def _pair_text(report: dict) -> str:
    lines = []
    for kind in ("point", "residual"):
        lines.append(f"{kind} spectrum finite parts:")
        for side in ("left_finite", "right_finite"):
            pts = ", ".join(_fmt_tuple([complex(*z) for z in t]) for t in report[kind][side])
            lines.append(f"  {side.split('_')[0]}: {pts}")
    for q in report["queries"]:
        z1, z2 = io.bicomplex_from_json(q["z1"]), io.bicomplex_from_json(q["z2"])
        lines.append(
            f"query z1 = {z1.idempotent_str()}, z2 = {z2.idempotent_str()}\n"
            f"  joint: {q['joint']} (side {q['side']}, smin {q['smin']:.3e})   "
            f"ap: {q['ap']} (side {q['ap_side']}, smin {q['ap_smin']:.3e})"
        )
    return "\n".join(lines)


@main.command()
@_config_options
def pair(input_path, fmt, tol_sing, tol_eig, tol_match, tol_commute):
    """Block-matrix joint spectrum queries for a commuting pair (T1, T2)."""
    cfg = RunConfig(2.0, tol_sing, tol_eig, tol_match, tol_commute, fmt)
    try:
        data = io.load_pair(io.load_json(input_path))
        report = pair_report(data.t1, data.t2, data.queries, cfg)
    except (ParseError, DimensionMismatchError) as exc:
        _fail(EXIT_INPUT, str(exc))
    except NotCommutingError as exc:
        _fail(EXIT_COMMUTE, f"{exc} (max commutator residual {exc.residual:.3e})")
    _emit(fmt, report, _pair_text(report))


# -- verify ---------------------------------------------------------------------


@main.command()
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "machine"]), default="text", show_default=True)
def verify(seed: int, trials: int, fmt: str):
    """Randomized property suite; deterministic for a fixed seed."""
    if trials < 1:
        _fail(EXIT_INPUT, f"--trials must be >= 1, got {trials}")
    report = run_verification(seed, trials)
    machine = report.as_dict()
    lines = [f"seed {seed}, {trials} trials"]
    for name, tally in report.properties.items():
        status = "PASS" if tally.failed == 0 else "FAIL"
        lines.append(f"  {status} {name:<26} passed {tally.passed:>5}  failed {tally.failed:>3}  "
                     f"max error {tally.max_error:.3e}")
    _emit(fmt, machine, "\n".join(lines))
    sys.exit(EXIT_OK if report.ok else EXIT_PROPERTY)


if __name__ == "__main__":
    main()
