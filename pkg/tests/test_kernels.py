import numpy as np
import pytest

from tsylv.errors import (
    RankDeficientError,
    ShapeError,
    SingularMatrixError,
)
from tsylv.kernels import (
    eigenvalues,
    least_squares_min_norm,
    lu_solve,
    pinv_full_column_rank,
    pinv_full_row_rank,
    smallest_lu_pivot,
)


# lu_solve


def test_lu_solve_identity():
    np.testing.assert_allclose(lu_solve(np.eye(3), [1.0, 2.0, 3.0]), [1.0, 2.0, 3.0])


def test_lu_solve_diagonal():
    np.testing.assert_allclose(lu_solve([[2.0, 0.0], [0.0, 4.0]], [2.0, 8.0]), [1.0, 2.0])


def test_lu_solve_permutation():
    np.testing.assert_allclose(lu_solve([[0.0, 1.0], [1.0, 0.0]], [5.0, 7.0]), [7.0, 5.0])


def test_lu_solve_singular_raises():
    with pytest.raises(SingularMatrixError):
        lu_solve([[1.0, 1.0], [1.0, 1.0]], [1.0, 2.0])


def test_lu_solve_rejects_bad_shapes():
    with pytest.raises(ShapeError):
        lu_solve([[1.0, 2.0]], [1.0])
    with pytest.raises(ShapeError):
        lu_solve(np.eye(2), [1.0, 2.0, 3.0])


def test_lu_solve_rejects_nonfinite():
    with pytest.raises(ValueError):
        lu_solve([[np.nan]], [1.0])


def test_lu_solve_matrix_rhs():
    x = lu_solve([[2.0, 0.0], [0.0, 4.0]], np.eye(2))
    np.testing.assert_allclose(x, [[0.5, 0.0], [0.0, 0.25]])


# least_squares_min_norm


def test_lstsq_consistent_overdetermined():
    res = least_squares_min_norm([[1.0], [1.0]], [2.0, 2.0])
    np.testing.assert_allclose(res.solution, [2.0])
    assert res.residual_norm <= 1e-14
    assert res.rank == 1


def test_lstsq_min_norm_underdetermined():
    res = least_squares_min_norm([[1.0, 0.0]], [3.0])
    np.testing.assert_allclose(res.solution, [3.0, 0.0], atol=1e-14)
    assert res.residual_norm <= 1e-14
    assert res.rank == 1


def test_lstsq_inconsistent_system():
    # normal equations 2x = 0 + 2 give x = 1, leaving residual sqrt(2)
    res = least_squares_min_norm([[1.0], [1.0]], [0.0, 2.0])
    np.testing.assert_allclose(res.solution, [1.0])
    np.testing.assert_allclose(res.residual_norm, np.sqrt(2.0), rtol=1e-12)
    assert res.rank == 1


def test_lstsq_reports_rank_deficiency():
    res = least_squares_min_norm([[1.0, 1.0], [1.0, 1.0]], [2.0, 2.0])
    assert res.rank == 1
    assert res.residual_norm <= 1e-14


def test_lstsq_agrees_with_lu_on_nonsingular():
    rng = np.random.default_rng(11)
    for _ in range(25):
        d = int(rng.integers(1, 9))
        mat = rng.uniform(-1.0, 1.0, (d, d))
        if smallest_lu_pivot(mat) < 1e-6:
            continue
        rhs = rng.uniform(-1.0, 1.0, d)
        x_lu = lu_solve(mat, rhs)
        x_ls = least_squares_min_norm(mat, rhs).solution
        np.testing.assert_allclose(x_ls, x_lu, rtol=1e-10, atol=1e-12)


# eigenvalues


def test_eigenvalues_diagonal():
    lam = np.sort_complex(eigenvalues([[2.0, 0.0], [0.0, 3.0]]))
    np.testing.assert_allclose(lam, [2.0, 3.0])


def test_eigenvalues_rotation_conjugate_pair():
    lam = np.sort_complex(eigenvalues([[0.0, 1.0], [-1.0, 0.0]]))
    np.testing.assert_allclose(lam, [-1.0j, 1.0j], atol=1e-14)


def test_eigenvalues_hand_characteristic_polynomial():
    # roots of lam^2 - 0.5 lam
    lam = np.sort_complex(eigenvalues([[0.5, 0.5], [0.0, 0.0]]))
    np.testing.assert_allclose(lam, [0.0, 0.5], atol=1e-14)


def test_eigenvalues_trace_det_and_conjugate_closure():
    rng = np.random.default_rng(23)
    for _ in range(40):
        d = int(rng.integers(1, 13))
        mat = rng.uniform(-1.0, 1.0, (d, d))
        lam = eigenvalues(mat)
        assert lam.shape == (d,)
        np.testing.assert_allclose(
            np.sort_complex(lam), np.sort_complex(lam.conj()), atol=1e-12
        )
        tr, det = np.trace(mat), np.linalg.det(mat)
        assert abs(lam.sum() - tr) <= 1e-8 * (1.0 + abs(tr))
        assert abs(lam.prod() - det) <= 1e-8 * (1.0 + abs(det))


def test_eigenvalues_requires_square():
    with pytest.raises(ShapeError):
        eigenvalues([[1.0, 2.0]])


# pseudoinverses


def test_pinv_column_identity():
    np.testing.assert_allclose(pinv_full_column_rank(np.eye(2)), np.eye(2))


def test_pinv_column_hand_formula():
    # (A^T A)^{-1} A^T = (2)^{-1} (1, 1)
    np.testing.assert_allclose(pinv_full_column_rank([[1.0], [1.0]]), [[0.5, 0.5]])


def test_pinv_column_zero_matrix_rank_deficient():
    with pytest.raises(RankDeficientError):
        pinv_full_column_rank([[0.0], [0.0]])


def test_pinv_column_rejects_wide():
    with pytest.raises(ShapeError):
        pinv_full_column_rank([[1.0, 2.0]])


def test_pinv_row_identity():
    np.testing.assert_allclose(pinv_full_row_rank(np.eye(3)), np.eye(3))


def test_pinv_row_hand_formulas():
    np.testing.assert_allclose(pinv_full_row_rank([[1.0, 0.0]]), [[1.0], [0.0]])
    np.testing.assert_allclose(pinv_full_row_rank([[1.0, 1.0]]), [[0.5], [0.5]])


def test_pinv_row_rank_deficient():
    with pytest.raises(RankDeficientError):
        pinv_full_row_rank([[0.0, 0.0], [0.0, 0.0]])


def test_pinv_left_identity_property():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(1, 11))
        m = int(rng.integers(n, 11))
        a = rng.uniform(-1.0, 1.0, (m, n))
        p = pinv_full_column_rank(a)
        err = np.linalg.norm(p @ a - np.eye(n), "fro")
        assert err <= 1e-10 * np.linalg.norm(a, "fro") * np.linalg.norm(p, "fro")


def test_pinv_right_identity_property():
    rng = np.random.default_rng(6)
    for _ in range(50):
        m = int(rng.integers(1, 11))
        n = int(rng.integers(m, 11))
        a = rng.uniform(-1.0, 1.0, (m, n))
        d = pinv_full_row_rank(a)
        err = np.linalg.norm(a @ d - np.eye(m), "fro")
        assert err <= 1e-10 * np.linalg.norm(a, "fro") * np.linalg.norm(d, "fro")
