"""Seeded check suites over all library invariants, with JSON reports.

Every check draws its random inputs from one generator seeded by the run
configuration, so a (seed, tolerances) pair always produces byte-identical
serialized reports.  Volatile data such as wall time is deliberately kept
out of the serialized form.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import affine_forms, slater, spin, symplectic
from .collapse import (
    BASIS_2D,
    collapse,
    collapse_with_morphism,
    lambda_tensor,
    rho_trace_A,
    rho_trace_AC,
    theta,
    tr1,
)
from .exterior import perm_sign

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_TOLERANCES",
    "CheckRecord",
    "Report",
    "run_verify",
]

DEFAULT_SEED = 1729

DEFAULT_TOLERANCES = {
    "collapse_pipeline": 1e-10,
    "tr1_directions": 1e-12,
    "morphism_covariance": 1e-9,
    "rho_basis": 1e-12,
    "rho_closed_form": 1e-12,
    "affine_antisymmetry": 1e-10,
    "translation_invariance": 1e-10,
    "coordinate_expansion": 1e-10,
    "generator_coefficients": 1e-12,
    "nullspace_rank": 1e-8,
    "span_residual": 1e-8,
    "kashiwara_zero": 1e-8,
    "one_point": 1e-10,
    "two_point": 1e-9,
    "m_identity": 1e-9,
    "gamma1_orbital": 1e-9,
    "gamma2_expansion": 1e-9,
    "kernel_symmetry": 1e-12,
    "psd_floor": 1e-9,
    "spin_values": 1e-12,
}


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "measured": float(self.measured),
            "tolerance": float(self.tolerance),
            "detail": self.detail,
        }


@dataclass
class Report:
    command: str
    seed: int
    tolerances: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, name, passed, measured, tolerance, detail) -> CheckRecord:
        record = CheckRecord(name, bool(passed), float(measured), float(tolerance), detail)
        self.checks.append(record)
        return record

    @property
    def ok(self) -> bool:
        return all(record.passed for record in self.checks)

    def to_json_dict(self) -> dict:
        failed = sum(1 for record in self.checks if not record.passed)
        return {
            "command": self.command,
            "seed": self.seed,
            "tolerances": {k: float(v) for k, v in sorted(self.tolerances.items())},
            "checks": [record.to_json_dict() for record in self.checks],
            "summary": {
                "total": len(self.checks),
                "passed": len(self.checks) - failed,
                "failed": failed,
            },
        }

    def to_json_bytes(self) -> bytes:
        text = json.dumps(self.to_json_dict(), sort_keys=True, indent=2)
        return (text + "\n").encode("utf-8")


def _rel(a, b) -> float:
    """|a - b| scaled by the larger magnitude, floored at 1."""
    return float(abs(a - b) / max(1.0, abs(a), abs(b)))


def _complex_vectors(rng, count, dim=2):
    return rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))


def _check_collapse(report: Report, rng, tol) -> None:
    worst = 0.0
    for _ in range(1000):
        a, b, c = _complex_vectors(rng, 3)
        direct = affine_forms.affine_det([a, b, c])
        worst = max(worst, _rel(collapse(a, b, c), direct))
    report.add(
        "collapse_pipeline_equals_affine_det",
        worst <= tol["collapse_pipeline"],
        worst,
        tol["collapse_pipeline"],
        "embed -> wedge tensor -> reindex -> partial trace -> sum matches "
        "det(b-a, c-a) on 1000 random complex triples",
    )


def _wedge2(u, v) -> complex:
    return u[0] * v[1] - u[1] * v[0]


def _check_tr1_directions(report: Report, rng, tol) -> None:
    u = np.array([0.0, 1.0, -1.0])
    v = np.array([1.0, 0.0, -1.0])
    w = np.array([1.0, -1.0, 0.0])
    worst = 0.0
    for _ in range(100):
        a, b, c = _complex_vectors(rng, 3)
        cases = (
            ((a, a, c), _wedge2(c, a), u),
            ((a, b, b), _wedge2(a, b), w),
            ((a, b, a), _wedge2(a, b), v),
        )
        for args, factor, direction in cases:
            got = tr1(theta(lambda_tensor(*args)))
            residual = np.abs(got - factor * direction).max() / max(1.0, abs(factor))
            worst = max(worst, float(residual))
    report.add(
        "tr1_degenerate_directions",
        worst <= tol["tr1_directions"],
        worst,
        tol["tr1_directions"],
        "repeated-argument triples give the wedge-scalar factor times "
        "(0,1,-1), (1,-1,0), (1,0,-1) for patterns (a,a,c), (a,b,b), (a,b,a)",
    )
    w_residual = float(np.abs(w - (v - u)).max())
    report.add(
        "tr1_w_equals_v_minus_u",
        w_residual == 0.0,
        w_residual,
        0.0,
        "the three degenerate directions satisfy (1,-1,0) = (1,0,-1) - (0,1,-1) exactly",
    )


def _check_morphism(report: Report, rng, tol) -> None:
    worst = 0.0
    for _ in range(500):
        a, b, c = _complex_vectors(rng, 3)
        sigma = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        lhs = collapse_with_morphism(a, b, c, sigma)
        rhs = np.linalg.det(sigma) * collapse(a, b, c)
        worst = max(worst, _rel(lhs, rhs))
    report.add(
        "morphism_covariance",
        worst <= tol["morphism_covariance"],
        worst,
        tol["morphism_covariance"],
        "applying a 2x2 map to all three states multiplies the collapsed "
        "scalar by its determinant (500 random cases)",
    )


def _check_rho_traces(report: Report, rng, tol) -> None:
    basis = BASIS_2D
    worst_basis = max(
        abs(rho_trace_AC(b, bp)) for b in basis for bp in basis
    )
    report.add(
        "rho_trace_ac_basis_zero",
        worst_basis <= tol["rho_basis"],
        worst_basis,
        tol["rho_basis"],
        "the doubly-traced kernel vanishes on all four computational-basis pairs",
    )

    worst_closed = 0.0
    for _ in range(100):
        b, bp = _complex_vectors(rng, 2)
        summed = rho_trace_AC(b, bp)
        closed = 2.0 * (b[0] + b[1] - 1.0) * (bp[0] + bp[1] - 1.0)
        worst_closed = max(worst_closed, _rel(summed, closed))
    report.add(
        "rho_trace_ac_closed_form",
        worst_closed <= tol["rho_closed_form"],
        worst_closed,
        tol["rho_closed_form"],
        "the four-term basis sum equals 2 (b1+b2-1)(b'1+b'2-1), which is "
        "nonzero for generic continuous arguments",
    )

    nonzero = 0
    for _ in range(100):
        b, c, bp, cp = _complex_vectors(rng, 4)
        if abs(rho_trace_A(b, c, bp, cp)) > 1e-12:
            nonzero += 1
    basis_matrix_max = max(
        abs(rho_trace_A(b, c, bp, cp))
        for b in basis
        for c in basis
        for bp in basis
        for cp in basis
    )
    report.add(
        "rho_trace_a_generic_nonzero",
        nonzero >= 99,
        float(nonzero),
        99.0,
        "singly-traced kernel is nonzero as a kernel on continuous arguments "
        f"(count out of 100); on basis arguments the 16-entry matrix is "
        f"identically zero (max |entry| = {basis_matrix_max:g}) because two "
        "of the three points always coincide",
    )


def _check_affine_det(report: Report, rng, tol) -> None:
    worst = 0.0
    for d in (2, 3, 4):
        pts = _complex_vectors(rng, d + 1, d)
        reference = affine_forms.affine_det(pts)
        for perm in itertools.permutations(range(d + 1)):
            sign = perm_sign(perm)
            worst = max(worst, _rel(affine_forms.affine_det(pts[list(perm)]), sign * reference))
    report.add(
        "affine_det_antisymmetry",
        worst <= tol["affine_antisymmetry"],
        worst,
        tol["affine_antisymmetry"],
        "exhaustive sign covariance under all (d+1)! argument permutations, d = 2, 3, 4",
    )

    worst = 0.0
    for d in (2, 3, 4):
        for _ in range(20):
            pts = _complex_vectors(rng, d + 1, d)
            shift = _complex_vectors(rng, 1, d)[0]
            worst = max(
                worst,
                _rel(affine_forms.affine_det(pts + shift), affine_forms.affine_det(pts)),
            )
    report.add(
        "affine_det_translation_invariance",
        worst <= tol["translation_invariance"],
        worst,
        tol["translation_invariance"],
        "adding a fixed vector to every point leaves the affine determinant unchanged",
    )

    worst = 0.0
    for _ in range(100):
        a, b, c = _complex_vectors(rng, 3)
        expanded = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])
        worst = max(worst, _rel(affine_forms.affine_det([a, b, c]), expanded))
    report.add(
        "affine_det_coordinate_expansion",
        worst <= tol["coordinate_expansion"],
        worst,
        tol["coordinate_expansion"],
        "d = 2 closed form (xB-xA)(yC-yA) - (xC-xA)(yB-yA)",
    )


def _check_generator(report: Report, rng, tol) -> None:
    anti = affine_forms.antisymmetrize_generator(affine_forms.determinant_generator(3, 4))
    target = affine_forms.affine_det_form(3)
    diff = float(np.abs(anti.coeffs + 6.0 * target.coeffs).max())
    report.add(
        "generator_antisymmetrization",
        diff <= tol["generator_coefficients"],
        diff,
        tol["generator_coefficients"],
        "antisymmetrizing det of the first three of four arguments over S_4 "
        "gives -6 times the affine determinant, coefficient by coefficient",
    )


def _check_nullspace(report: Report, rng, tol) -> None:
    expected = {2: 1, 1: 0, 0: 0}
    mismatches = 0
    span_residual = math.inf
    for degree, dim in expected.items():
        result = affine_forms.conjecture_nullspace(2, 3, degree, rel_tol=tol["nullspace_rank"])
        if result.dimension != dim:
            mismatches += 1
        if degree == 2 and result.dimension == 1:
            target = np.real(affine_forms.affine_det_form(2).coeffs).reshape(-1)
            target = target / np.linalg.norm(target)
            basis = np.real(result.basis[0].coeffs).reshape(-1)
            span_residual = float(
                np.linalg.norm(target - (target @ basis) * basis / (basis @ basis))
            )
    report.add(
        "nullspace_dimensions_d2_m3",
        mismatches == 0,
        float(mismatches),
        0.0,
        "antisymmetric multi-affine forms in 3 arguments on C^2: dimension 1 "
        "in the degree-2 sector, 0 in degrees 1 and 0 (count of mismatches)",
    )
    report.add(
        "nullspace_contains_affine_det",
        span_residual <= tol["span_residual"],
        span_residual,
        tol["span_residual"],
        "projection residual of the affine determinant coefficients onto the "
        "degree-2 nullspace basis",
    )


def _check_kashiwara(report: Report, rng, tol) -> None:
    axes = symplectic.LagrangianTriple([[1.0], [0.0]], [[0.0], [1.0]], [[1.0], [1.0]])
    sig = symplectic.kashiwara_index(axes, zero_tol=tol["kashiwara_zero"]).signature
    report.add(
        "kashiwara_example_signature",
        sig == -1,
        float(sig),
        -1.0,
        "(x-axis, y-axis, diagonal) in R^2 has signature -1 under the "
        "(p, q)-block form convention",
    )

    swapped = symplectic.LagrangianTriple(axes.bases[1], axes.bases[0], axes.bases[2])
    sig_swapped = symplectic.kashiwara_index(swapped, zero_tol=tol["kashiwara_zero"]).signature
    report.add(
        "kashiwara_odd_permutation_flip",
        sig_swapped == 1,
        float(sig_swapped),
        1.0,
        "swapping the first two subspaces negates the signature",
    )

    triples = {
        1: axes,
        2: symplectic.LagrangianTriple(
            np.vstack([np.eye(2), np.zeros((2, 2))]),
            np.vstack([np.zeros((2, 2)), np.eye(2)]),
            np.vstack([np.eye(2), np.eye(2)]),
        ),
    }
    drift = 0
    for n, triple in triples.items():
        base = symplectic.kashiwara_index(triple, zero_tol=tol["kashiwara_zero"]).signature
        for _ in range(20):
            s = symplectic.random_symplectic(n, rng)
            moved = triple.transformed(s).rebased(
                *(np.triu(rng.standard_normal((n, n))) + 2.0 * np.eye(n) for _ in range(3))
            )
            got = symplectic.kashiwara_index(moved, zero_tol=tol["kashiwara_zero"]).signature
            if got != base:
                drift += 1
    report.add(
        "kashiwara_invariance",
        drift == 0,
        float(drift),
        0.0,
        "signature unchanged by 20 random symplectic transformations with "
        "random basis changes, n = 1 and 2 (count of violations)",
    )


def _random_space_and_wavefunction(rng, max_nodes=12):
    k = int(rng.integers(4, max_nodes + 1))
    weights = rng.random(k) + 0.1
    weights /= weights.sum()
    space = slater.MeasuredSpace(weights)
    phi = rng.standard_normal((k, 2))
    return space, phi


def _check_moments(report: Report, rng, tol) -> None:
    worst_one = 0.0
    worst_two = 0.0
    for _ in range(50):
        space, phi = _random_space_and_wavefunction(rng)
        scale = max(1.0, float(np.abs(phi).max()))
        worst_one = max(worst_one, abs(slater.one_point(phi, space)) / scale**3)
        gram_value = 6.0 * float(np.linalg.det(slater.centered_gram(phi, space)))
        worst_two = max(worst_two, _rel(slater.two_point(phi, space), gram_value))
    report.add(
        "one_point_vanishes",
        worst_one <= tol["one_point"],
        worst_one,
        tol["one_point"],
        "triple-weighted mean of the antisymmetric wave function is zero "
        "(50 random spaces, scaled by the cubed component bound)",
    )
    report.add(
        "two_point_gram_identity",
        worst_two <= tol["two_point"],
        worst_two,
        tol["two_point"],
        "mean of Psi^2 equals 6 det(centered Gram) on 50 random spaces",
    )

    space, phi = _random_space_and_wavefunction(rng)
    reduced = slater.reduce_centered(phi, space)
    unit = abs(slater.two_point(reduced, space) / 6.0 - 1.0)
    report.add(
        "two_point_orthonormal_unit",
        unit <= tol["two_point"],
        unit,
        tol["two_point"],
        "centered orthonormal components give mean of Psi^2 equal to 6",
    )

    worst_m = 0.0
    for _ in range(20):
        space, phi = _random_space_and_wavefunction(rng, max_nodes=8)
        k = len(space)
        raw = rng.standard_normal((k, k, k))
        m_table = np.zeros_like(raw)
        for perm in itertools.permutations(range(3)):
            m_table += np.transpose(raw, perm)
        lhs, rhs = slater.symmetric_m_identity(phi, space, m_table)
        worst_m = max(worst_m, _rel(lhs, rhs))
    report.add(
        "symmetric_m_identity",
        worst_m <= tol["m_identity"],
        worst_m,
        tol["m_identity"],
        "3 <ab M Psi> equals <Psi M Psi> for 20 random symmetric weight tables",
    )


def _check_kernels(report: Report, rng, tol) -> None:
    space = slater.MeasuredSpace.uniform(6)
    phi = slater.reduce_centered(rng.standard_normal((6, 2)), space)
    k = len(space)

    g2 = slater.gamma2(phi, space)
    expansion = slater.gamma2_pair_expansion(phi, space)
    scale = max(1.0, float(np.abs(expansion).max()))
    diff = float(np.abs(g2 - expansion).max()) / scale
    report.add(
        "gamma2_expansion_match",
        diff <= tol["gamma2_expansion"],
        diff,
        tol["gamma2_expansion"],
        "order-2 kernel equals its closed-form expansion (difference products "
        "plus wedge product term) entrywise for centered orthonormal input, K = 6",
    )

    big_scale = max(1.0, float(np.abs(g2).max()))
    sym = float(np.abs(g2 - g2.T).max())
    four = g2.reshape(k, k, k, k)
    anti_primed = float(np.abs(four + np.transpose(four, (1, 0, 2, 3))).max())
    anti_unprimed = float(np.abs(four + np.transpose(four, (0, 1, 3, 2))).max())
    g1 = slater.gamma1(phi, space)
    g1_sym = float(np.abs(g1 - g1.T).max())
    worst_sym = max(sym, anti_primed, anti_unprimed, g1_sym) / big_scale
    report.add(
        "kernel_symmetries",
        worst_sym <= tol["kernel_symmetry"],
        worst_sym,
        tol["kernel_symmetry"],
        "order-2 kernel is symmetric as a matrix and antisymmetric within "
        "each node pair; order-1 kernel is symmetric",
    )

    min_eig = float(np.linalg.eigvalsh(g2).min())
    report.add(
        "gamma2_psd",
        min_eig >= -tol["psd_floor"],
        min_eig,
        -tol["psd_floor"],
        "order-2 kernel eigenvalues are nonnegative up to roundoff "
        "(positive semidefinite; definiteness can fail on degenerate nodes)",
    )

    orbital = phi @ phi.T
    diff1 = float(np.abs(g1 - orbital).max()) / max(1.0, float(np.abs(orbital).max()))
    report.add(
        "gamma1_orbital_sum",
        diff1 <= tol["gamma1_orbital"],
        diff1,
        tol["gamma1_orbital"],
        "normalized order-1 kernel equals the orbital sum over both "
        "components for centered orthonormal input",
    )


def _check_spin(report: Report, rng, tol) -> None:
    p = spin.exchange_operator()
    worst = 0.0
    for i in range(2):
        for j in range(2):
            ket = np.zeros(4)
            ket[2 * i + j] = 1.0
            swapped = np.zeros(4)
            swapped[2 * j + i] = 1.0
            worst = max(worst, float(np.abs(p @ ket - swapped).max()))
    worst = max(worst, float(np.abs(p @ p - np.eye(4)).max()))
    report.add(
        "exchange_operator_swap",
        worst == 0.0,
        worst,
        0.0,
        "P|ij> = |ji> on all four basis states and P^2 = Id, exactly",
    )

    e000 = np.zeros(8)
    e000[0] = 1.0
    doublet = np.zeros(8)
    doublet[2] = 1.0 / math.sqrt(2.0)  # |010>
    doublet[4] = -1.0 / math.sqrt(2.0)  # |100>
    worst = max(
        abs(spin.s_squared_expectation(e000) - 15.0),
        abs(spin.s_squared_expectation(doublet) - 3.0),
    )
    report.add(
        "s_squared_expectations",
        worst <= tol["spin_values"],
        worst,
        tol["spin_values"],
        "double Pauli sum gives 15 on |000> (s = 3/2) and 3 on the doublet "
        "(|010> - |100>)/sqrt(2) (s = 1/2); both equal 4 s (s+1)",
    )


_CHECKS = (
    _check_collapse,
    _check_tr1_directions,
    _check_morphism,
    _check_rho_traces,
    _check_affine_det,
    _check_generator,
    _check_nullspace,
    _check_kashiwara,
    _check_moments,
    _check_kernels,
    _check_spin,
)


def run_verify(seed: int = DEFAULT_SEED, tolerances: dict | None = None) -> Report:
    """Run every check suite with one seeded generator; deterministic."""
    tol = dict(DEFAULT_TOLERANCES)
    if tolerances:
        unknown = set(tolerances) - set(tol)
        if unknown:
            raise ValueError(f"unknown tolerance names: {sorted(unknown)}")
        tol.update(tolerances)
    report = Report(command="verify", seed=seed, tolerances=tol)
    rng = np.random.default_rng(seed)
    for check in _CHECKS:
        check(report, rng, tol)
    return report
