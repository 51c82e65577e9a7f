"""Dense linear-algebra kernels: pivoted solves, minimum-norm least squares,
nonsymmetric eigenvalues, and full-rank pseudoinverses.

All routines operate on plain float64 numpy arrays at desk scale.  LAPACK
(through numpy/scipy) supplies the factorizations behind the tolerance
contracts stated below; every function validates shapes and finiteness on
the way in.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    NoConvergenceError,
    RankDeficientError,
    ShapeError,
    SingularMatrixError,
)

EPS = float(np.finfo(np.float64).eps)


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate and return ``a`` as a 2-d float64 array with finite entries."""
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-dimensional, got ndim={arr.ndim}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def as_vector(v, name: str = "vector") -> np.ndarray:
    """Validate and return ``v`` as a 1-d float64 array with finite entries."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1:
        raise ShapeError(f"{name} must be 1-dimensional, got ndim={arr.ndim}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def frobenius(a) -> float:
    return float(np.linalg.norm(a, "fro"))


def pivot_tolerance(m: np.ndarray) -> float:
    """Singularity threshold for LU pivots: dim * eps * max-row-sum norm."""
    return max(m.shape) * EPS * float(np.linalg.norm(m, np.inf))


def _require_square(m: np.ndarray, name: str) -> None:
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"{name} must be square, got {m.shape[0]}x{m.shape[1]}")
    if m.shape[0] < 1:
        raise ShapeError(f"{name} must have dimension >= 1")


def _lu_factor(m: np.ndarray):
    # scipy warns instead of raising on exact zero pivots; the pivot check
    # below owns singularity detection.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    return lu, piv, float(np.abs(np.diag(lu)).min())


def smallest_lu_pivot(m) -> float:
    """Magnitude of the smallest LU pivot of a square matrix."""
    m = as_matrix(m, "m")
    _require_square(m, "m")
    return _lu_factor(m)[2]


def lu_solve(m, rhs) -> np.ndarray:
    """Solve the square system ``m @ x = rhs`` by partially pivoted LU.

    ``rhs`` may be a vector or a matrix of stacked right-hand sides.

    Raises
    ------
    SingularMatrixError
        When the smallest pivot magnitude falls below ``pivot_tolerance``.
    """
    m = as_matrix(m, "m")
    _require_square(m, "m")
    b = np.asarray(rhs, dtype=np.float64)
    if b.ndim not in (1, 2) or b.shape[0] != m.shape[0]:
        raise ShapeError(
            f"rhs must have leading dimension {m.shape[0]}, got shape {b.shape}"
        )
    if not np.isfinite(b).all():
        raise ValueError("rhs contains non-finite entries")
    lu, piv, smallest = _lu_factor(m)
    if smallest <= pivot_tolerance(m):
        raise SingularMatrixError(
            f"pivot {smallest:.3e} at or below tolerance "
            f"{pivot_tolerance(m):.3e}; matrix is numerically singular"
        )
    return scipy.linalg.lu_solve((lu, piv), b, check_finite=False)


@dataclass(frozen=True, eq=False)
class LstsqResult:
    solution: np.ndarray
    residual_norm: float
    rank: int


def least_squares_min_norm(m, rhs, tol: float | None = None) -> LstsqResult:
    """Minimum-norm least-squares solution of ``m @ x = rhs``.

    Rank counts the singular values above ``tol`` relative to the largest
    (default ``max(shape) * eps``).  Rank-deficient and inconsistent
    systems are reported through ``rank`` and ``residual_norm``, never
    raised.
    """
    m = as_matrix(m, "m")
    b = as_vector(rhs, "rhs")
    if b.shape[0] != m.shape[0]:
        raise ShapeError(f"rhs length {b.shape[0]} does not match {m.shape[0]} rows")
    rcond = max(m.shape) * EPS if tol is None else float(tol)
    x, _, rank, _ = np.linalg.lstsq(m, b, rcond=rcond)
    return LstsqResult(x, float(np.linalg.norm(m @ x - b)), int(rank))


def eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a square matrix, with algebraic multiplicity.

    Complex eigenvalues of the real input come out in exact conjugate
    pairs (LAPACK dgeev convention: Hessenberg reduction plus implicitly
    shifted QR).
    """
    m = as_matrix(m, "m")
    _require_square(m, "m")
    try:
        w = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigenvalue iteration failed: {exc}") from exc
    return w.astype(np.complex128, copy=False)


def _rank_estimate(a: np.ndarray) -> int:
    sv = np.linalg.svd(a, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > max(a.shape) * EPS * sv[0]))


def pinv_full_column_rank(a) -> np.ndarray:
    """Pseudoinverse ``(A^T A)^{-1} A^T`` of a tall full-column-rank matrix.

    Satisfies ``pinv @ a == eye(cols)`` up to roundoff.

    Raises
    ------
    RankDeficientError
        When the estimated rank is below the column count.
    """
    a = as_matrix(a, "a")
    rows, cols = a.shape
    if rows < cols:
        raise ShapeError(f"need rows >= cols, got {rows}x{cols}")
    if _rank_estimate(a) < cols:
        raise RankDeficientError(
            f"column rank below {cols}; full-rank pseudoinverse formula invalid"
        )
    return np.linalg.solve(a.T @ a, a.T)


def pinv_full_row_rank(a) -> np.ndarray:
    """Pseudoinverse ``A^T (A A^T)^{-1}`` of a wide full-row-rank matrix.

    Satisfies ``a @ pinv == eye(rows)`` up to roundoff.
    """
    a = as_matrix(a, "a")
    rows, cols = a.shape
    if rows > cols:
        raise ShapeError(f"need rows <= cols, got {rows}x{cols}")
    if _rank_estimate(a) < rows:
        raise RankDeficientError(
            f"row rank below {rows}; full-rank pseudoinverse formula invalid"
        )
    # A A^T is symmetric, so solving against A and transposing gives A^T (A A^T)^{-1}.
    return np.linalg.solve(a @ a.T, a).T
