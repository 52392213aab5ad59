"""Affine determinants and antisymmetric multi-affine forms in any dimension.

The affine determinant of d+1 points in C^d is det(x_1 - x_0, ..., x_d - x_0);
it is antisymmetric under all (d+1)! argument permutations and translation
invariant.  The module also carries the machinery for exploring which other
antisymmetric forms exist: a coefficient representation of multi-affine forms,
antisymmetrization of generators over the full symmetric group, a nullspace
solver for the antisymmetry constraints per homogeneity sector, a Monte Carlo
non-degeneracy falsifier, and a Laplace determinant expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exterior import signed_permutations

__all__ = [
    "affine_det",
    "is_affinely_dependent",
    "laplace_expand",
    "MultiAffineForm",
    "affine_det_form",
    "determinant_generator",
    "antisymmetrize_generator",
    "NullspaceResult",
    "conjecture_nullspace",
    "ProbeReport",
    "nondegeneracy_probe",
]

MAX_GENERATOR_ARITY = 6
MAX_LAPLACE_DIM = 6
MAX_TABLE_SIZE = 100_000


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=complex)
    if pts.ndim != 2:
        raise ValueError("points must be a sequence of equal-length vectors")
    return pts


def affine_det(points) -> complex:
    """Determinant of (x_1 - x_0, ..., x_d - x_0) for d+1 points in C^d."""
    pts = _as_points(points)
    m, d = pts.shape
    if m != d + 1:
        raise ValueError(f"need d+1 = {d + 1} points in dimension {d}, got {m}")
    return complex(np.linalg.det((pts[1:] - pts[0]).T))


def is_affinely_dependent(points, rel_tol: float = 1e-10) -> bool:
    """Whether the affine span of the points has deficient dimension.

    True iff the difference vectors x_i - x_0 have numerical rank below
    min(m-1, d), decided by singular values under rel_tol times the largest.
    """
    pts = _as_points(points)
    m, d = pts.shape
    if m < 2:
        return False
    diffs = pts[1:] - pts[0]
    svals = np.linalg.svd(diffs, compute_uv=False)
    if svals[0] == 0.0:
        rank = 0
    else:
        rank = int(np.sum(svals > rel_tol * svals[0]))
    return rank < min(m - 1, d)


def laplace_expand(matrix) -> complex:
    """Determinant by recursive expansion along the first column."""
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"need a square matrix, got shape {m.shape}")
    n = m.shape[0]
    if n > MAX_LAPLACE_DIM:
        raise ValueError(f"dimension {n} exceeds supported maximum {MAX_LAPLACE_DIM}")

    def rec(sub: np.ndarray) -> complex:
        k = sub.shape[0]
        if k == 1:
            return complex(sub[0, 0])
        total = 0.0 + 0.0j
        rows = np.arange(k)
        for i in range(k):
            minor = sub[rows != i, 1:]
            total += (-1) ** i * sub[i, 0] * rec(minor)
        return total

    return rec(m)


@dataclass(frozen=True)
class MultiAffineForm:
    """A form of m vector arguments in C^d, affine in each argument.

    Coefficients live in an array of shape (d+1,)*m: index 0 on axis k
    selects the constant in argument k, index j in 1..d selects coordinate
    j-1.  The form value is the full contraction of the coefficient table
    with the per-argument feature vectors (1, p_k[0], ..., p_k[d-1]).
    """

    dim: int
    arity: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        expected = (self.dim + 1,) * self.arity
        c = np.asarray(self.coeffs)
        if c.shape != expected:
            raise ValueError(f"coefficient table must have shape {expected}")
        if c.size > MAX_TABLE_SIZE:
            raise ValueError(
                f"coefficient table size {c.size} exceeds {MAX_TABLE_SIZE}"
            )
        object.__setattr__(self, "coeffs", c.astype(complex))

    @classmethod
    def zero(cls, dim: int, arity: int) -> "MultiAffineForm":
        return cls(dim, arity, np.zeros((dim + 1,) * arity, dtype=complex))

    def __call__(self, points) -> complex:
        pts = _as_points(points)
        if pts.shape != (self.arity, self.dim):
            raise ValueError(
                f"need {self.arity} points of dimension {self.dim}, "
                f"got shape {pts.shape}"
            )
        value = self.coeffs
        for k in range(self.arity):
            feature = np.concatenate(([1.0], pts[k]))
            value = np.tensordot(value, feature, axes=([0], [0]))
        return complex(value)

    def compose_permutation(self, perm) -> "MultiAffineForm":
        """The form with arguments permuted: result(p) = self(p[perm[0]], ...).

        Transposing the table by the inverse permutation feeds slot k of the
        original form with argument perm[k].
        """
        if sorted(perm) != list(range(self.arity)):
            raise ValueError(f"not a permutation of the {self.arity} arguments")
        return MultiAffineForm(
            self.dim, self.arity, np.transpose(self.coeffs, np.argsort(perm))
        )

    def homogeneity_weights(self) -> np.ndarray:
        """Number of non-constant axis selections per coefficient index."""
        w = np.zeros((self.dim + 1,) * self.arity, dtype=int)
        nonconst = np.arange(self.dim + 1) != 0
        for k in range(self.arity):
            shape = [1] * self.arity
            shape[k] = self.dim + 1
            w = w + nonconst.reshape(shape)
        return w

    def restrict_homogeneity(self, degree: int) -> "MultiAffineForm":
        """Keep only monomials with exactly `degree` non-constant factors."""
        mask = self.homogeneity_weights() == degree
        return MultiAffineForm(self.dim, self.arity, np.where(mask, self.coeffs, 0))


def determinant_generator(d: int, arity: int) -> MultiAffineForm:
    """det of the first d arguments, as a multi-affine form of `arity` args.

    The remaining arity - d arguments are spectators (the form is constant
    in them).
    """
    if arity < d:
        raise ValueError("arity must be at least the dimension")
    coeffs = np.zeros((d + 1,) * arity, dtype=complex)
    for perm, sign in signed_permutations(d):
        idx = tuple(perm[k] + 1 for k in range(d)) + (0,) * (arity - d)
        coeffs[idx] = sign
    return MultiAffineForm(d, arity, coeffs)


def affine_det_form(d: int) -> MultiAffineForm:
    """Coefficient table of the affine determinant on d+1 points in C^d.

    Built by direct multilinear expansion: the no-substitution term gives
    det(x_1..x_d), and substituting x_0 into column j contributes the minus
    of the corresponding monomial.  All coefficients are exactly +-1.
    """
    arity = d + 1
    coeffs = np.zeros((d + 1,) * arity, dtype=complex)
    for perm, sign in signed_permutations(d):
        base = [0] * arity
        for j in range(d):
            base[j + 1] = perm[j] + 1
        coeffs[tuple(base)] += sign
        for j in range(d):
            idx = list(base)
            idx[0] = perm[j] + 1
            idx[j + 1] = 0
            coeffs[tuple(idx)] -= sign
    return MultiAffineForm(d, arity, coeffs)


def antisymmetrize_generator(generator: MultiAffineForm) -> MultiAffineForm:
    """Sum of sign(sigma) * (generator with arguments permuted) over S_m.

    No 1/m! normalization; linear in the generator.  Arity above
    MAX_GENERATOR_ARITY is rejected.
    """
    m = generator.arity
    if m > MAX_GENERATOR_ARITY:
        raise ValueError(f"arity {m} exceeds supported maximum {MAX_GENERATOR_ARITY}")
    out = np.zeros_like(generator.coeffs)
    for perm, sign in signed_permutations(m):
        out += sign * np.transpose(generator.coeffs, perm)
    return MultiAffineForm(generator.dim, m, out)


@dataclass(frozen=True)
class NullspaceResult:
    """Antisymmetric forms found in one homogeneity sector."""

    dim: int
    arity: int
    homogeneity: int
    dimension: int
    singular_values: np.ndarray
    basis: tuple  # of MultiAffineForm

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "arity": self.arity,
            "homogeneity": self.homogeneity,
            "dimension": self.dimension,
            "singular_values": [float(s) for s in self.singular_values],
            "basis": [
                np.real(f.coeffs).reshape(-1).tolist() for f in self.basis
            ],
        }


def conjecture_nullspace(
    d: int, m: int, homogeneity: int, rel_tol: float = 1e-8
) -> NullspaceResult:
    """Solve the antisymmetry constraints on multi-affine forms numerically.

    Imposes form . tau = -form for the m-1 adjacent transpositions tau
    (which generate S_m) on the coefficient sector of the requested
    homogeneity, and returns the numerical nullspace: its dimension and an
    orthonormal coefficient basis.  Singular values below rel_tol times the
    largest count as zero.
    """
    if (d + 1) ** m > MAX_TABLE_SIZE:
        raise ValueError(
            f"coefficient table size {(d + 1) ** m} exceeds {MAX_TABLE_SIZE}"
        )
    if m < 2:
        raise ValueError("need at least two arguments")
    shape = (d + 1,) * m
    weights = MultiAffineForm.zero(d, m).homogeneity_weights()
    sector = [idx for idx in np.ndindex(shape) if weights[idx] == homogeneity]
    n = len(sector)
    if n == 0:
        return NullspaceResult(d, m, homogeneity, 0, np.zeros(0), ())
    col_of = {idx: j for j, idx in enumerate(sector)}

    rows = []
    for k in range(m - 1):
        for idx in sector:
            swapped = list(idx)
            swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
            row = np.zeros(n)
            row[col_of[idx]] += 1.0
            row[col_of[tuple(swapped)]] += 1.0
            rows.append(row)
    system = np.array(rows)

    _, svals, vh = np.linalg.svd(system)
    cutoff = rel_tol * svals[0] if svals.size and svals[0] > 0 else 0.0
    rank = int(np.sum(svals > cutoff))
    null_rows = vh[rank:]

    basis = []
    for row in null_rows:
        coeffs = np.zeros(shape, dtype=complex)
        for idx, value in zip(sector, row):
            coeffs[idx] = value
        basis.append(MultiAffineForm(d, m, coeffs))
    return NullspaceResult(
        d, m, homogeneity, len(basis), svals, tuple(basis)
    )


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of a Monte Carlo non-degeneracy probe.

    A falsifier, not a prover: `counterexamples` holds sampled argument
    tuples that are not confined to a (d-2)-dimensional affine subspace yet
    make the form vanish for every sampled leading point.  `identically_zero`
    is set when the form vanished on every pre-scan configuration.
    """

    dim: int
    trials: int
    counterexamples: tuple
    identically_zero: bool

    @property
    def passed(self) -> bool:
        return not self.identically_zero and not self.counterexamples


def nondegeneracy_probe(
    form,
    d: int,
    trials: int = 1000,
    candidates: int = 8,
    seed: int = 0,
    rel_tol: float = 1e-10,
) -> ProbeReport:
    """Search for violations of non-degeneracy of a (d+1)-argument form.

    For each trial, samples points x_1..x_d that do not fit in a
    (d-2)-dimensional affine subspace, then looks for a leading point x_0
    with form(x_0, x_1, ..., x_d) != 0 among `candidates` samples.  Tuples
    where every candidate gives zero are reported as counterexamples.
    """
    rng = np.random.default_rng(seed)

    def sample(count):
        return rng.standard_normal((count, d)) + 1j * rng.standard_normal((count, d))

    prescan = [abs(form(sample(d + 1))) for _ in range(16)]
    scale = max(prescan)
    if scale == 0.0:
        return ProbeReport(d, 0, (), True)
    threshold = rel_tol * scale

    counterexamples = []
    for _ in range(trials):
        tail = sample(d)
        while is_affinely_dependent(tail):
            tail = sample(d)
        hit = False
        for _ in range(candidates):
            x0 = sample(1)
            config = np.vstack([x0, tail])
            if abs(form(config)) > threshold:
                hit = True
                break
        if not hit:
            counterexamples.append(tail)
    return ProbeReport(d, trials, tuple(counterexamples), False)
