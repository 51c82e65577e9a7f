"""Spectrum extraction and the reciprocal-free predicate, with an
eigenvalue-free determinant cross-check.

A multiset of scalars is reciprocal free when no ordered pair, a scalar
with itself included, multiplies to 1.  The transformations in
:mod:`tsylv.transforms` are valid exactly when the coupling spectrum has
this property, so both the decision and the margin (the smallest distance
of any pair product from 1) are reported.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .kernels import as_matrix, eigenvalues, pivot_tolerance, smallest_lu_pivot


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalue multiset of a square real matrix."""

    values: np.ndarray
    source_dim: int


def spectrum(s) -> Spectrum:
    s = as_matrix(s, "s")
    if s.shape[0] != s.shape[1]:
        raise ShapeError(f"spectrum needs a square matrix, got {s.shape}")
    return Spectrum(values=eigenvalues(s), source_dim=s.shape[0])


def default_reciprocal_tol(values: np.ndarray) -> float:
    """Margin below which an eigenvalue pair product counts as 1."""
    top = float(np.max(np.abs(values)))
    return 1e-8 * (1.0 + top * top)


@dataclass(frozen=True, eq=False)
class ReciprocalDecision:
    """Outcome of the reciprocal-free test.

    ``margin`` is min over all ordered pairs (i, j) of ``|v_i * v_j - 1|``;
    ``witness`` names the closest pair when the decision is negative.
    """

    free: bool
    margin: float
    tol: float
    witness: tuple[int, int, complex, complex] | None


def is_reciprocal_free(sp, tol: float | None = None) -> ReciprocalDecision:
    """Decide whether no ordered eigenvalue pair has product within ``tol`` of 1.

    Accepts a :class:`Spectrum` or a plain sequence of (complex) values.
    Pair products use complex arithmetic and complex modulus, since real
    matrices routinely carry conjugate eigenvalue pairs.
    """
    values = sp.values if isinstance(sp, Spectrum) else np.asarray(sp)
    values = np.atleast_1d(values).astype(np.complex128)
    if values.ndim != 1 or values.size == 0:
        raise ShapeError("spectrum must be a non-empty 1-d collection")
    if tol is None:
        tol = default_reciprocal_tol(values)
    if tol < 0:
        raise ValueError(f"tol must be >= 0, got {tol}")
    dist = np.abs(np.outer(values, values) - 1.0)
    i, j = np.unravel_index(int(np.argmin(dist)), dist.shape)
    margin = float(dist[i, j])
    free = margin > tol
    witness = None if free else (int(i), int(j), complex(values[i]), complex(values[j]))
    return ReciprocalDecision(free=free, margin=margin, tol=float(tol), witness=witness)


def reciprocal_free_det_check(s, tol: float | None = None) -> bool:
    """Eigenvalue-free cross-check of the reciprocal-free property.

    The spectrum of S is reciprocal free exactly when ``I - kron(S, S)``
    is nonsingular; nonsingularity is judged by the smallest LU pivot
    against ``tol`` (default :func:`tsylv.kernels.pivot_tolerance`).
    """
    s = as_matrix(s, "s")
    if s.shape[0] != s.shape[1]:
        raise ShapeError(f"need a square matrix, got {s.shape}")
    g = np.eye(s.shape[0] ** 2) - np.kron(s, s)
    threshold = pivot_tolerance(g) if tol is None else float(tol)
    return smallest_lu_pivot(g) > threshold
