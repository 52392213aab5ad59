"""Command-line front end.

Subcommands: verify, slater, conjecture, kashiwara, collapse-demo.  Reports
are JSON; dense kernels can additionally be exported as CSV.  Exit code 0
means every check passed, 1 means at least one check failed, 2 means a
usage or input error.

Reports contain no timestamps or timing, so identical configurations give
byte-identical output; wall time goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import affine_forms, slater, symplectic
from .collapse import (
    BASIS_2D,
    collapse_with_morphism,
    lambda_tensor,
    rho_trace_AC,
    theta,
    tr1,
)
from .verification import DEFAULT_SEED, DEFAULT_TOLERANCES, Report, run_verify

KERNEL_EXPORT_MIN = 1e-12


def _parse_tolerances(pairs):
    overrides = {}
    for pair in pairs or ():
        name, _, value = pair.partition("=")
        if not _ or not name:
            raise ValueError(f"--tol expects NAME=VALUE, got {pair!r}")
        overrides[name] = float(value)
    return overrides


def _emit_report(report: Report, out: str | None) -> None:
    data = report.to_json_bytes()
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)


def _write_kernel(matrix: np.ndarray, path: Path, fmt: str, threshold: float) -> None:
    if fmt == "csv":
        np.savetxt(path, matrix, delimiter=",")
    else:
        entries = [
            [int(i), int(j), float(matrix[i, j])]
            for i in range(matrix.shape[0])
            for j in range(matrix.shape[1])
            if abs(matrix[i, j]) > threshold
        ]
        doc = {"shape": list(matrix.shape), "threshold": threshold, "entries": entries}
        path.write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def cmd_verify(args) -> int:
    report = run_verify(seed=args.seed, tolerances=_parse_tolerances(args.tol))
    _emit_report(report, args.out)
    return 0 if report.ok else 1


def cmd_slater(args) -> int:
    overrides = _parse_tolerances(args.tol)
    threshold = overrides.pop("kernel_export_min", KERNEL_EXPORT_MIN)
    two_point_tol = overrides.pop("two_point", DEFAULT_TOLERANCES["two_point"])
    if overrides:
        raise ValueError(f"unknown tolerance names: {sorted(overrides)}")

    doc = json.loads(Path(args.input).read_text())
    try:
        weights = doc["weights"]
        phi = np.asarray(doc["phi"], dtype=float)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"input must carry 'weights' and 'phi': {exc}") from exc
    space = slater.MeasuredSpace(weights)

    report = Report(command="slater", seed=args.seed)
    one = slater.one_point(phi, space)
    two = slater.two_point(phi, space)
    gram = slater.centered_gram(phi, space)
    gram_det = float(np.linalg.det(gram))
    scale = max(1.0, float(np.abs(phi).max()))

    report.add(
        "one_point",
        abs(one) <= 1e-10 * scale**3,
        one,
        1e-10 * scale**3,
        "triple-weighted mean of the wave function",
    )
    report.add(
        "gram_determinant",
        True,
        gram_det,
        gram_det,
        "determinant of the centered component Gram matrix",
    )
    cross = abs(two - 6.0 * gram_det) / max(1.0, abs(two), 6.0 * abs(gram_det))
    report.add(
        "two_point_vs_gram",
        cross <= two_point_tol,
        cross,
        two_point_tol,
        f"mean of Psi^2 = {two!r} against 6 det(Gram) = {6.0 * gram_det!r}; "
        f"two_point/6 = {two / 6.0!r}",
    )

    g1 = slater.gamma1(phi, space)
    g2 = slater.gamma2(phi, space)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        ext = "csv" if args.format == "csv" else "json"
        _write_kernel(g1, out_dir / f"gamma1.{ext}", args.format, threshold)
        _write_kernel(g2, out_dir / f"gamma2.{ext}", args.format, threshold)
        report.add(
            "kernels_exported",
            True,
            float(g2.shape[0]),
            float(g2.shape[0]),
            f"gamma1.{ext} and gamma2.{ext} written to {out_dir}",
        )
        _emit_report(report, str(out_dir / "report.json"))
        sys.stdout.buffer.write(report.to_json_bytes())
    else:
        _emit_report(report, None)
    return 0 if report.ok else 1


def cmd_conjecture(args) -> int:
    result = affine_forms.conjecture_nullspace(args.dim, args.arity, args.degree)
    report = Report(command="conjecture", seed=args.seed)
    report.add(
        "nullspace_dimension",
        True,
        float(result.dimension),
        float(result.dimension),
        f"antisymmetric multi-affine forms on C^{args.dim} in {args.arity} "
        f"arguments, homogeneity {args.degree}",
    )
    in_span = None
    if args.arity == args.dim + 1 and args.degree == args.dim and result.dimension > 0:
        target = np.real(affine_forms.affine_det_form(args.dim).coeffs).reshape(-1)
        target /= np.linalg.norm(target)
        basis = np.array(
            [np.real(f.coeffs).reshape(-1) for f in result.basis]
        )
        projection = basis.T @ (basis @ target)
        residual = float(np.linalg.norm(target - projection))
        in_span = residual < 1e-8
        report.add(
            "affine_det_in_span",
            in_span,
            residual,
            1e-8,
            "projection residual of the affine determinant coefficients onto "
            "the computed basis",
        )
    doc = report.to_json_dict()
    doc["nullspace"] = result.to_json_dict()
    data = (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return 0 if report.ok else 1


def cmd_kashiwara(args) -> int:
    doc = json.loads(Path(args.input).read_text())
    triple = symplectic.lagrangian_triple_from_json(doc)
    result = symplectic.kashiwara_index(triple)
    report = Report(command="kashiwara", seed=args.seed)
    report.add(
        "signature",
        True,
        float(result.signature),
        float(result.signature),
        f"inertia ({result.n_plus}, {result.n_minus}, {result.n_zero}) of the "
        "cyclic pairing form in the (p, q)-block convention",
    )
    out_doc = report.to_json_dict()
    out_doc["index"] = result.to_json_dict()
    data = (json.dumps(out_doc, sort_keys=True, indent=2) + "\n").encode("utf-8")
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return 0


def cmd_collapse_demo(args) -> int:
    rng = np.random.default_rng(args.seed)
    a, b, c = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    report = Report(command="collapse-demo", seed=args.seed)

    lam = lambda_tensor(a, b, c)
    blocks = theta(lam)
    traced = tr1(blocks)
    scalar = complex(traced.sum())
    direct = affine_forms.affine_det([a, b, c])
    residual = abs(scalar - direct) / max(1.0, abs(direct))
    report.add(
        "pipeline_matches_affine_det",
        residual <= 1e-10,
        residual,
        1e-10,
        f"collapsed scalar {scalar!r} against det(b-a, c-a) = {direct!r}",
    )

    sigma = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    covariant = collapse_with_morphism(a, b, c, sigma)
    expected = np.linalg.det(sigma) * scalar
    residual = abs(covariant - expected) / max(1.0, abs(expected))
    report.add(
        "morphism_covariance",
        residual <= 1e-9,
        residual,
        1e-9,
        "collapse after a random 2x2 morphism equals det(sigma) times the scalar",
    )

    basis_zero = max(
        abs(rho_trace_AC(x, y)) for x in BASIS_2D for y in BASIS_2D
    )
    report.add(
        "rho_trace_ac_basis_zero",
        basis_zero <= 1e-12,
        basis_zero,
        1e-12,
        "doubly-traced kernel vanishes on computational-basis pairs",
    )
    _emit_report(report, args.out)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affine-fermions",
        description="Verification suites and computations for affine "
        "determinants, fermion-triple collapse, and affine Slater kernels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--tol", action="append", metavar="NAME=VALUE")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("verify", help="run all invariant checks")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("slater", help="moments and density kernels for a node-set input")
    common(p)
    p.add_argument("--input", required=True, metavar="PATH")
    p.set_defaults(func=cmd_slater)

    p = sub.add_parser("conjecture", help="nullspace of antisymmetric multi-affine forms")
    common(p)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--arity", type=int, default=3)
    p.add_argument("--degree", type=int, default=2)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("kashiwara", help="signature of a Lagrangian triple")
    common(p)
    p.add_argument("--input", required=True, metavar="PATH")
    p.set_defaults(func=cmd_kashiwara)

    p = sub.add_parser("collapse-demo", help="seeded walk through the collapse pipeline")
    common(p)
    p.set_defaults(func=cmd_collapse_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        status = args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(
        f"{args.command}: {time.perf_counter() - started:.3f} s",
        file=sys.stderr,
    )
    return status


if __name__ == "__main__":
    sys.exit(main())
