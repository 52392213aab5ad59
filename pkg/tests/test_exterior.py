import itertools
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from affine_fermions import (
    antisymmetrize,
    compose,
    perm_sign,
    signed_permutations,
    tensor_product,
    wedge_scalar,
)


def sign_by_sorting(perm):
    """Independent parity: count the swaps a bubble sort needs."""
    seq = list(perm)
    swaps = 0
    for i in range(len(seq)):
        for j in range(len(seq) - 1):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps += 1
    return -1 if swaps % 2 else 1


def random_tensor(rng, d, p):
    shape = (d,) * p
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def test_perm_sign_matches_transposition_count():
    for p in range(1, 6):
        for perm in itertools.permutations(range(p)):
            assert perm_sign(perm) == sign_by_sorting(perm)


def test_perm_sign_multiplicative_exhaustive():
    for p in range(1, 5):
        perms = list(itertools.permutations(range(p)))
        for s in perms:
            for t in perms:
                assert perm_sign(compose(s, t)) == perm_sign(s) * perm_sign(t)


def test_perm_sign_rejects_non_permutation():
    with pytest.raises(ValueError):
        perm_sign((0, 0, 1))


def test_signed_permutations_complete():
    pairs = signed_permutations(4)
    assert len(pairs) == 24
    assert sum(sign for _, sign in pairs) == 0


def test_tensor_product_basis_case():
    e0 = np.array([1.0, 0.0])
    e1 = np.array([0.0, 1.0])
    out = tensor_product(e0, e1)
    want = np.zeros((2, 2))
    want[0, 1] = 1.0
    assert_allclose(out, want)


def test_tensor_product_with_scalar_is_identity():
    rng = np.random.default_rng(3)
    t = random_tensor(rng, 3, 2)
    one = np.array(1.0 + 0.0j)
    assert_allclose(tensor_product(t, one), t)
    assert_allclose(tensor_product(one, t), t)


def test_tensor_product_bilinear():
    e0 = np.array([1.0, 0.0])
    e1 = np.array([0.0, 1.0])
    out = tensor_product(2.0 * e0, 3.0 * e1)
    assert out[0, 1] == 6.0
    assert np.count_nonzero(out) == 1


def test_tensor_product_dimension_mismatch():
    with pytest.raises(ValueError):
        tensor_product(np.ones(2), np.ones(3))


def test_antisymmetrize_degree_two_definition():
    e0 = np.array([1.0, 0.0])
    e1 = np.array([0.0, 1.0])
    out = antisymmetrize(tensor_product(e0, e1))
    want = (tensor_product(e0, e1) - tensor_product(e1, e0)) / 2.0
    assert_allclose(out, want)


def test_antisymmetrize_repeated_vector_vanishes():
    e0 = np.array([1.0, 0.0])
    assert_allclose(antisymmetrize(tensor_product(e0, e0)), np.zeros((2, 2)))


def test_antisymmetrize_idempotent():
    rng = np.random.default_rng(7)
    for _ in range(100):
        d = int(rng.integers(2, 5))
        p = int(rng.integers(1, 5))
        t = random_tensor(rng, d, p)
        once = antisymmetrize(t)
        scale = max(1.0, np.abs(once).max())
        assert np.abs(antisymmetrize(once) - once).max() <= 1e-12 * scale


def test_antisymmetrize_slot_permutation_sign():
    rng = np.random.default_rng(11)
    for p in range(2, 5):
        t = antisymmetrize(random_tensor(rng, 4, p))
        scale = max(1.0, np.abs(t).max())
        for perm in itertools.permutations(range(p)):
            permuted = np.transpose(t, perm)
            assert np.abs(permuted - perm_sign(perm) * t).max() <= 1e-12 * scale


def test_antisymmetrize_rejects_large_degree():
    with pytest.raises(ValueError):
        antisymmetrize(np.zeros((1,) * 9))


def test_wedge_scalar_identity_and_repeat():
    e0 = np.array([1.0, 0.0])
    e1 = np.array([0.0, 1.0])
    assert wedge_scalar([e0, e1]) == pytest.approx(1.0)
    v = np.array([2.0, 5.0])
    assert wedge_scalar([v, v]) == pytest.approx(0.0)


def test_wedge_scalar_two_by_two():
    assert wedge_scalar([np.array([1.0, 2.0]), np.array([3.0, 4.0])]) == pytest.approx(-2.0)


def test_wedge_scalar_argument_count():
    with pytest.raises(ValueError):
        wedge_scalar([np.ones(3), np.ones(3)])


def test_wedge_scalar_against_antisymmetrized_product():
    # contract the antisymmetrized d-fold product against (0, 1, ..., d-1)
    # and scale by d!: must reproduce the determinant
    rng = np.random.default_rng(13)
    for d in (2, 3, 4):
        vs = [rng.standard_normal(d) + 1j * rng.standard_normal(d) for _ in range(d)]
        prod = vs[0]
        for v in vs[1:]:
            prod = tensor_product(prod, v)
        anti = antisymmetrize(prod)
        entry = anti[tuple(range(d))] * math.factorial(d)
        want = wedge_scalar(vs)
        norm = np.prod([np.linalg.norm(v) for v in vs])
        assert abs(entry - want) <= 1e-10 * max(1.0, norm)
