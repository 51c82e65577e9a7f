"""Seeded random instance generation with rank, solvability, and
near-reciprocal controls."""

from __future__ import annotations

import numpy as np

from .errors import GenerationError, ShapeError
from .kernels import EPS, eigenvalues, pinv_full_column_rank, pinv_full_row_rank
from .spectra import is_reciprocal_free
from .transforms import ProblemInstance

MAX_ATTEMPTS = 100


def _full_rank(a: np.ndarray) -> bool:
    sv = np.linalg.svd(a, compute_uv=False)
    return sv[0] > 0.0 and sv[-1] > max(a.shape) * EPS * sv[0]


def canonical_coupling(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """S = B^T A^+ for either shape regime (A^{-1} when square)."""
    m, n = a.shape
    pinv = pinv_full_column_rank(a) if m >= n else pinv_full_row_rank(a)
    return b.T @ pinv


def generate_instance(
    m: int,
    n: int,
    rng: np.random.Generator,
    *,
    solvable: bool = False,
    near_reciprocal: float | None = None,
    min_margin: float | None = None,
    max_attempts: int = MAX_ATTEMPTS,
) -> ProblemInstance:
    """Draw an instance with entries uniform on [-1, 1].

    A is resampled until it has full rank for its shape regime (column
    rank for m >= n, row rank for m <= n).  With ``solvable`` the right
    hand side is built as ``A X0 + X0^T B`` from a random X0, so an exact
    solution exists.  ``near_reciprocal`` rescales B so that one coupling
    eigenvalue pair product lands exactly at 1 + delta; ``min_margin``
    instead resamples until the coupling's reciprocal-free margin reaches
    the given value.
    """
    if m < 1 or n < 1:
        raise ShapeError(f"dimensions must be >= 1, got ({m}, {n})")
    for _ in range(max_attempts):
        a = rng.uniform(-1.0, 1.0, size=(m, n))
        if not _full_rank(a):
            continue
        b = rng.uniform(-1.0, 1.0, size=(n, m))
        if near_reciprocal is not None:
            lam = eigenvalues(canonical_coupling(a, b))
            top = float(np.max(np.abs(lam)))
            if top < 1e-8:
                # a (near-)nilpotent coupling cannot be rescaled onto the boundary
                continue
            # scaling B scales every eigenvalue; the largest one and its
            # conjugate then multiply to exactly 1 + delta
            b = b * float(np.sqrt((1.0 + near_reciprocal) / (top * top)))
        if min_margin is not None:
            lam = eigenvalues(canonical_coupling(a, b))
            if is_reciprocal_free(lam, tol=0.0).margin < min_margin:
                continue
        if solvable:
            x0 = rng.uniform(-1.0, 1.0, size=(n, m))
            c = a @ x0 + x0.T @ b
        else:
            c = rng.uniform(-1.0, 1.0, size=(m, m))
        return ProblemInstance(a, b, c)
    raise GenerationError(
        f"no admissible instance after {max_attempts} draws for size {m}x{n}"
    )
