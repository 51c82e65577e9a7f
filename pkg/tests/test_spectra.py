import numpy as np
import pytest

from tsylv.spectra import (
    is_reciprocal_free,
    reciprocal_free_det_check,
    spectrum,
)


def test_spectrum_scalar():
    sp = spectrum([[0.5]])
    assert sp.source_dim == 1
    np.testing.assert_allclose(sp.values, [0.5])


def test_spectrum_upper_triangular():
    sp = spectrum([[0.5, 0.5], [0.0, 0.0]])
    np.testing.assert_allclose(np.sort_complex(sp.values), [0.0, 0.5], atol=1e-14)


def test_spectrum_identity_multiplicity():
    sp = spectrum(np.eye(2))
    np.testing.assert_allclose(sp.values, [1.0, 1.0])


def test_half_is_free():
    dec = is_reciprocal_free(np.array([0.5]))
    assert dec.free
    np.testing.assert_allclose(dec.margin, 0.75)
    assert dec.witness is None


def test_one_is_never_free():
    dec = is_reciprocal_free(np.array([1.0, 0.3]))
    assert not dec.free
    i, j, li, lj = dec.witness
    assert (i, j) == (0, 0)
    assert li == 1.0 and lj == 1.0


def test_reciprocal_pair_detected():
    dec = is_reciprocal_free(np.array([2.0, 0.5]))
    assert not dec.free
    _, _, li, lj = dec.witness
    assert {li, lj} == {2.0 + 0.0j, 0.5 + 0.0j}
    assert abs(li * lj - 1.0) <= 1e-15


def test_minus_one_is_never_free():
    assert not is_reciprocal_free(np.array([-1.0])).free


def test_zero_is_harmless():
    dec = is_reciprocal_free(np.array([0.0, 0.2]))
    assert dec.free


def test_decision_invariant_under_permutation():
    rng = np.random.default_rng(9)
    values = rng.uniform(-2.0, 2.0, 6) + 1j * rng.uniform(-2.0, 2.0, 6)
    base = is_reciprocal_free(values)
    for _ in range(10):
        perm = rng.permutation(6)
        shuffled = is_reciprocal_free(values[perm])
        assert shuffled.free == base.free
        np.testing.assert_allclose(shuffled.margin, base.margin)


def test_negative_tol_rejected():
    with pytest.raises(ValueError):
        is_reciprocal_free(np.array([0.5]), tol=-1.0)


def test_det_check_scalar_cases():
    assert reciprocal_free_det_check([[0.5]])
    assert not reciprocal_free_det_check([[1.0]])


def test_det_check_reciprocal_diagonal():
    # diag(2, 0.5) has 2 * 0.5 = 1, so I - kron(S, S) is exactly singular
    assert not reciprocal_free_det_check(np.diag([2.0, 0.5]))


def test_det_check_agrees_with_eigenvalue_route():
    rng = np.random.default_rng(13)
    checked = 0
    while checked < 40:
        d = int(rng.integers(1, 9))
        s = rng.uniform(-1.0, 1.0, (d, d))
        dec = is_reciprocal_free(spectrum(s))
        if dec.margin < 1e-3:
            continue
        assert reciprocal_free_det_check(s) == dec.free
        checked += 1


def test_det_check_catches_hidden_reciprocal_pair():
    # the (2, 0.5) pair sits on the diagonal of a non-normal triangular S,
    # with binary-fraction entries so the Kronecker assembly stays exact
    s = np.array([[2.0, 1.0], [0.0, 0.5]])
    assert not is_reciprocal_free(spectrum(s)).free
    assert not reciprocal_free_det_check(s)
