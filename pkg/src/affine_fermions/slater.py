"""Affine Slater determinants over a finite weighted node set.

A measured space is a finite set of nodes x_k with positive weights w_k
summing to 1; a wave function assigns d real components to each node.  The
wave function of d+1 particles is the affine determinant of the component
vectors,

    Psi(x_0, ..., x_d) = det(phi(x_1) - phi(x_0), ..., phi(x_d) - phi(x_0)),

and integrals are exact weighted sums over nodes.  The moment and kernel
routines are restricted to d = 2, where Psi is a sum of three 2x2 wedge
scalars and everything reduces to dense tensor contractions.

Kernel assembly uses fixed summation order, so results are reproducible
bit-for-bit for a given input.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .affine_forms import affine_det

__all__ = [
    "MeasuredSpace",
    "CenteredWaveFunction",
    "center",
    "component_means",
    "centered_gram",
    "reduce_centered",
    "psi",
    "one_point",
    "two_point",
    "sample_psi_moments",
    "symmetric_m_identity",
    "order1_kernel",
    "gamma1",
    "gamma2",
    "gamma2_entry",
    "gamma2_pair_expansion",
    "MAX_DENSE_KERNEL_NODES",
]

# gamma2 materializes a K^2 x K^2 matrix; beyond this use gamma2_entry.
MAX_DENSE_KERNEL_NODES = 32


class MeasuredSpace:
    """Finite weighted node set (x_k, w_k) with w_k > 0 and sum w_k = 1."""

    def __init__(self, weights, labels=None, *, atol: float = 1e-10):
        w = np.asarray(weights, dtype=float)
        if w.ndim != 1 or w.size < 2:
            raise ValueError("need at least two weighted nodes")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        total = float(w.sum())
        if abs(total - 1.0) > atol:
            raise ValueError(f"weights must sum to 1, got {total!r}")
        self.weights = w
        self.labels = tuple(range(w.size)) if labels is None else tuple(labels)
        if len(self.labels) != w.size:
            raise ValueError("labels and weights differ in length")
        self._index = {label: k for k, label in enumerate(self.labels)}
        if len(self._index) != w.size:
            raise ValueError("node labels must be distinct")

    @classmethod
    def uniform(cls, k: int) -> "MeasuredSpace":
        return cls(np.full(k, 1.0 / k))

    def __len__(self) -> int:
        return self.weights.size

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown node label {label!r}") from None


class CenteredWaveFunction(NamedTuple):
    """Wave function values with weighted means removed, plus those means."""

    values: np.ndarray  # (K, d)
    means: np.ndarray  # (d,)

    def __array__(self, dtype=None):
        return np.asarray(self.values, dtype=dtype)


def _as_wavefunction(phi, space: MeasuredSpace) -> np.ndarray:
    values = np.asarray(phi, dtype=float)
    if values.ndim != 2 or values.shape[0] != len(space):
        raise ValueError(
            f"wave function must be a {len(space)} x d real matrix, "
            f"got shape {values.shape}"
        )
    if not np.all(np.isfinite(values)):
        raise ValueError("wave function values must be finite")
    return values


def component_means(phi, space: MeasuredSpace) -> np.ndarray:
    """Weighted mean of each component, <phi_j> = sum_k w_k phi_j(x_k)."""
    values = _as_wavefunction(phi, space)
    return space.weights @ values


def center(phi, space: MeasuredSpace) -> CenteredWaveFunction:
    """Subtract the weighted mean from each component."""
    values = _as_wavefunction(phi, space)
    means = space.weights @ values
    return CenteredWaveFunction(values - means, means)


def centered_gram(phi, space: MeasuredSpace) -> np.ndarray:
    """Gram matrix <phi~_i phi~_j> of the centered components."""
    tilde = center(phi, space).values
    return tilde.T @ (space.weights[:, None] * tilde)


def reduce_centered(phi, space: MeasuredSpace) -> np.ndarray:
    """Center the components and whiten them to an identity Gram matrix."""
    tilde = center(phi, space).values
    gram = tilde.T @ (space.weights[:, None] * tilde)
    evals, evecs = np.linalg.eigh(gram)
    if evals.min() <= 0:
        raise ValueError("components are linearly dependent; cannot reduce")
    inv_sqrt = evecs @ np.diag(evals**-0.5) @ evecs.T
    return tilde @ inv_sqrt


def psi(phi, space: MeasuredSpace, nodes) -> float:
    """Affine Slater determinant at d+1 node labels."""
    values = _as_wavefunction(phi, space)
    d = values.shape[1]
    nodes = tuple(nodes)
    if len(nodes) != d + 1:
        raise ValueError(f"need {d + 1} node labels, got {len(nodes)}")
    idx = [space.index(label) for label in nodes]
    return float(np.real(affine_det(values[idx])))


def _require_two_components(values: np.ndarray) -> None:
    if values.shape[1] != 2:
        raise ValueError("this operation is implemented for d = 2 components")


def _psi_tensor(values: np.ndarray) -> np.ndarray:
    """Psi over all node triples as a K x K x K array (d = 2 fast path)."""
    d1 = values[None, :, 0] - values[:, None, 0]  # phi_1(q) - phi_1(p)
    d2 = values[None, :, 1] - values[:, None, 1]
    return np.einsum("ij,ik->ijk", d1, d2) - np.einsum("ik,ij->ijk", d1, d2)


def _wedge_matrix(values: np.ndarray) -> np.ndarray:
    """Pairwise wedge scalars W[p, q] = phi_1(p) phi_2(q) - phi_2(p) phi_1(q)."""
    return np.outer(values[:, 0], values[:, 1]) - np.outer(values[:, 1], values[:, 0])


def one_point(phi, space: MeasuredSpace) -> float:
    """Triple-weighted mean of Psi; vanishes by antisymmetry."""
    values = _as_wavefunction(phi, space)
    _require_two_components(values)
    w = space.weights
    return float(np.einsum("i,j,k,ijk->", w, w, w, _psi_tensor(values)))


def two_point(phi, space: MeasuredSpace) -> float:
    """Triple-weighted mean of Psi^2.

    Equals 6 det(centered Gram); in particular 6 when the components are
    centered and orthonormal.
    """
    values = _as_wavefunction(phi, space)
    _require_two_components(values)
    w = space.weights
    return float(np.einsum("i,j,k,ijk->", w, w, w, _psi_tensor(values) ** 2))


class PsiMoments(NamedTuple):
    mean: float
    second_moment: float


def sample_psi_moments(
    phi, space: MeasuredSpace, n_triples: int, seed: int = 0
) -> PsiMoments:
    """Monte Carlo estimate of <Psi> and <Psi^2> for large node sets.

    Draws node triples from the weight distribution with a fixed-seed
    generator and averages with numpy's pairwise summation, so a given
    (input, seed, n_triples) always reproduces the same estimate.
    """
    values = _as_wavefunction(phi, space)
    _require_two_components(values)
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(space), size=(int(n_triples), 3), p=space.weights)
    a, b, c = values[idx[:, 0]], values[idx[:, 1]], values[idx[:, 2]]
    samples = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (c[:, 0] - a[:, 0]) * (
        b[:, 1] - a[:, 1]
    )
    return PsiMoments(
        float(np.sum(samples) / len(samples)),
        float(np.sum(samples**2) / len(samples)),
    )


def symmetric_m_identity(phi, space: MeasuredSpace, m_table, *, checks: int = 32):
    """Both sides of the symmetric-weight overlap identity.

    For a function M symmetric in its three node arguments, with centered
    components and wedge scalars ab = W(x_0, x_1) etc.,

        lhs = 3 sum w^3 ab M (ab + bc + ca)
        rhs =   sum w^3 (ab + bc + ca) M (ab + bc + ca)

    are equal.  Returns (lhs, rhs).  Symmetry of M is checked on sampled
    triples; an asymmetric table is rejected.
    """
    values = center(phi, space).values
    _require_two_components(values)
    k = len(space)
    m = np.asarray(m_table, dtype=float)
    if m.shape != (k, k, k):
        raise ValueError(f"M must be a {k}x{k}x{k} table, got shape {m.shape}")

    rng = np.random.default_rng(12345)
    triples = rng.integers(0, k, size=(checks, 3))
    for i, j, l in triples:
        reference = m[i, j, l]
        for a, b, c in ((i, l, j), (j, i, l), (j, l, i), (l, i, j), (l, j, i)):
            if abs(m[a, b, c] - reference) > 1e-12 * max(1.0, abs(reference)):
                raise ValueError(
                    f"M is not symmetric at nodes ({i}, {j}, {l})"
                )

    w = space.weights
    wedge = _wedge_matrix(values)
    psi3 = (
        wedge[:, :, None]
        + wedge[None, :, :]
        + np.transpose(wedge)[:, None, :]
    )  # W(x0,x1) + W(x1,x2) + W(x2,x0)
    lhs = 3.0 * np.einsum("i,j,k,ij,ijk,ijk->", w, w, w, wedge, m, psi3)
    rhs = np.einsum("i,j,k,ijk,ijk,ijk->", w, w, w, psi3, m, psi3)
    return float(lhs), float(rhs)


def order1_kernel(phi, space: MeasuredSpace) -> np.ndarray:
    """Unnormalized order-1 kernel by double integration.

    Gamma(x', x) = sum over (x_0, x_2) of w w Psi(x_0, x, x_2) Psi(x_0, x', x_2),
    computed with centered components.  Symmetric K x K matrix.
    """
    values = center(phi, space).values
    _require_two_components(values)
    w = space.weights
    p = _psi_tensor(values)
    return np.einsum("a,b,ajb,aib->ij", w, w, p, p)


def gamma1(phi, space: MeasuredSpace) -> np.ndarray:
    """Normalized order-1 density kernel, Gamma/2 - det(centered Gram).

    For centered orthonormal components this equals the orbital sum
    sum_j phi~_j(x') phi~_j(x).
    """
    gram_det = float(np.linalg.det(centered_gram(phi, space)))
    return order1_kernel(phi, space) / 2.0 - gram_det


def gamma2(phi, space: MeasuredSpace) -> np.ndarray:
    """Order-2 density kernel as a K^2 x K^2 matrix, integrating over x_0 only.

    Entry ((x'_1, x'_2), (x_1, x_2)) = sum_a w_a Psi(a, x_1, x_2)
    Psi(a, x'_1, x'_2) with row-major pair indexing.  Symmetric as a big
    matrix, antisymmetric under swapping within either pair, and positive
    semidefinite (a weighted Gram matrix by construction).
    """
    values = center(phi, space).values
    _require_two_components(values)
    k = len(space)
    if k > MAX_DENSE_KERNEL_NODES:
        raise ValueError(
            f"{k} nodes would materialize a {k * k} x {k * k} matrix; "
            f"use gamma2_entry beyond {MAX_DENSE_KERNEL_NODES} nodes"
        )
    p = _psi_tensor(values)
    big = np.einsum("a,aij,akl->ijkl", space.weights, p, p)
    return big.reshape(k * k, k * k)


def gamma2_entry(phi, space: MeasuredSpace, x1p, x2p, x1, x2) -> float:
    """Single order-2 kernel entry for node labels, O(K) work.

    Matches gamma2 at ((x'_1, x'_2), (x_1, x_2)) without materializing the
    dense matrix.
    """
    values = center(phi, space).values
    _require_two_components(values)
    i1p, i2p = space.index(x1p), space.index(x2p)
    i1, i2 = space.index(x1), space.index(x2)

    def psi_column(i, j):
        d1 = values[[i, j], 0][None, :] - values[:, 0][:, None]
        d2 = values[[i, j], 1][None, :] - values[:, 1][:, None]
        return d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]

    return float(
        np.sum(space.weights * psi_column(i1, i2) * psi_column(i1p, i2p))
    )


def gamma2_pair_expansion(phi, space: MeasuredSpace) -> np.ndarray:
    """Closed-form order-2 kernel for centered orthonormal components.

    Entry ((x'_1, x'_2), (x_1, x_2)) =
        sum_j (phi~_j(x_1) - phi~_j(x_2)) (phi~_j(x'_1) - phi~_j(x'_2))
        + W(x_1, x_2) W(x'_1, x'_2)

    where W is the pairwise wedge scalar.  Valid when the centered Gram
    matrix is the identity.
    """
    values = center(phi, space).values
    _require_two_components(values)
    k = len(space)
    diff = values[:, None, :] - values[None, :, :]  # (K, K, 2)
    affine_part = np.einsum("ijm,klm->ijkl", diff, diff)
    wedge = _wedge_matrix(values)
    slater_part = np.einsum("ij,kl->ijkl", wedge, wedge)
    return (affine_part + slater_part).reshape(k * k, k * k)
