"""Column-stacking vec/unvec, Kronecker products, and the commutation maps
that shuffle vec(A^T) into vec(A)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .kernels import as_matrix, as_vector


def vec(m) -> np.ndarray:
    """Stack the columns of ``m`` top to bottom into one vector."""
    return as_matrix(m, "m").reshape(-1, order="F")


def unvec(v, rows: int, cols: int) -> np.ndarray:
    """Inverse of ``vec``: refill a rows-by-cols matrix column-wise.

    Pure data movement, so ``unvec(vec(m), *m.shape)`` is bit-identical
    to ``m``.
    """
    v = as_vector(v, "v")
    if v.shape[0] != rows * cols:
        raise ShapeError(
            f"vector of length {v.shape[0]} cannot fill a {rows}x{cols} matrix"
        )
    return v.reshape((rows, cols), order="F")


def kron(a, b) -> np.ndarray:
    """Dense Kronecker product with (i, j) block ``a[i, j] * b``."""
    return np.kron(as_matrix(a, "a"), as_matrix(b, "b"))


@dataclass(frozen=True, eq=False)
class PermutationMap:
    """The commutation matrix P_mn stored as an index permutation.

    ``sigma`` scatters source position j to target position sigma[j], so
    applying the map to vec(A^T) of any m-by-n A yields vec(A).  The dense
    0/1 form exists for tests and explicit system assembly; applications
    go through O(mn) indexing.
    """

    m: int
    n: int
    sigma: np.ndarray

    @property
    def size(self) -> int:
        return self.m * self.n

    def apply(self, v) -> np.ndarray:
        """Permute a vector; index shuffling only, no arithmetic."""
        v = np.asarray(v)
        if v.ndim != 1 or v.shape[0] != self.size:
            raise ShapeError(f"vector must have length {self.size}, got {v.shape}")
        out = np.empty_like(v)
        out[self.sigma] = v
        return out

    def apply_rows(self, mat) -> np.ndarray:
        """Row-permute a matrix; equals ``self.dense() @ mat``."""
        mat = np.asarray(mat)
        if mat.ndim != 2 or mat.shape[0] != self.size:
            raise ShapeError(f"matrix must have {self.size} rows, got {mat.shape}")
        out = np.empty_like(mat)
        out[self.sigma] = mat
        return out

    def apply_cols(self, mat) -> np.ndarray:
        """Column-permute a matrix; equals ``mat @ self.dense().T``."""
        mat = np.asarray(mat)
        if mat.ndim != 2 or mat.shape[1] != self.size:
            raise ShapeError(f"matrix must have {self.size} columns, got {mat.shape}")
        out = np.empty_like(mat)
        out[:, self.sigma] = mat
        return out

    def transpose(self) -> "PermutationMap":
        """The transpose map, which coincides with the (n, m) commutation."""
        inv = np.empty_like(self.sigma)
        inv[self.sigma] = np.arange(self.size)
        return PermutationMap(self.n, self.m, inv)

    def dense(self) -> np.ndarray:
        """Explicit permutation matrix D with ``D @ v == self.apply(v)``."""
        d = np.zeros((self.size, self.size))
        d[self.sigma, np.arange(self.size)] = 1.0
        return d


def commutation(m: int, n: int) -> PermutationMap:
    """Build P_mn, the permutation with ``P_mn @ vec(A.T) == vec(A)``.

    Row i*m + k of the dense form is the unit row picking source position
    k*n + i, for k < m and i < n.
    """
    if m < 1 or n < 1:
        raise ShapeError(f"commutation needs m, n >= 1, got ({m}, {n})")
    src = np.arange(m * n)
    k, i = divmod(src, n)
    return PermutationMap(m, n, i * m + k)
