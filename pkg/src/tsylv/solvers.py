"""Two independent solve paths plus residual evaluation and comparison.

The brute-force oracle vectorizes the equation into the stacked system
``{I_m kron A + P_mm (I_m kron B^T)} x = vec(C)`` and takes the
minimum-norm least-squares solution.  Transformed forms are solved on
``(I_m kron left) - (S kron right)`` instead, followed by the form's
recovery map; the Lyapunov-shaped square forms go through a plain LU
because the reciprocal-free gate makes them uniquely solvable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .kernels import as_matrix, frobenius, least_squares_min_norm, lu_solve
from .tensors import commutation, kron, unvec, vec
from .transforms import EquivalentForm, FormKind, ProblemInstance, recover_x

DEFAULT_REPORT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SolveReport:
    """Outcome of one solve.

    ``residual`` is the Frobenius norm of A X + X^T B - C at the returned
    X; ``consistent`` states whether the assembled linear system was
    solved to within ``tol * scale``; ``margin`` carries the
    reciprocal-free margin when a transformation was involved, and
    ``transformed_solution`` the pre-recovery unknown.
    """

    method: str
    x: np.ndarray
    residual: float
    system_rank: int
    consistent: bool
    margin: float | None = None
    transformed_solution: np.ndarray | None = None


def residual(inst: ProblemInstance, x) -> float:
    """Frobenius norm of ``A @ X + X.T @ B - C``."""
    x = as_matrix(x, "X")
    if x.shape != (inst.n, inst.m):
        raise ShapeError(
            f"X must be {inst.n}x{inst.m}, got {x.shape[0]}x{x.shape[1]}"
        )
    return frobenius(inst.a @ x + x.T @ inst.b - inst.c)


def assemble_vec_system(inst: ProblemInstance) -> tuple[np.ndarray, np.ndarray]:
    """Stack the equation into the m^2-by-mn system ``M x = vec(C)``."""
    eye = np.eye(inst.m)
    p = commutation(inst.m, inst.m)
    mat = kron(eye, inst.a) + p.apply_rows(kron(eye, inst.b.T))
    return mat, vec(inst.c)


def solve_direct(inst: ProblemInstance, tol: float | None = None) -> SolveReport:
    """Oracle route: minimum-norm least squares on the stacked system.

    Never refuses.  Inconsistent instances come back with
    ``consistent=False`` and the best-achievable residual.
    """
    tol = DEFAULT_REPORT_TOL if tol is None else float(tol)
    mat, rhs = assemble_vec_system(inst)
    res = least_squares_min_norm(mat, rhs)
    x = unvec(res.solution, inst.n, inst.m)
    return SolveReport(
        method="direct",
        x=x,
        residual=residual(inst, x),
        system_rank=res.rank,
        consistent=res.residual_norm <= tol * inst.scale,
    )


def transformed_system(form: EquivalentForm) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized form ``{(I_m kron left) - (S kron right)} y = vec(rhs)``."""
    eye = np.eye(form.source.m)
    return kron(eye, form.left) - kron(form.coupling, form.right), vec(form.rhs)


def solve_lyapunov_kron(coupling, rhs_q) -> np.ndarray:
    """Solve ``Y - S Y S^T = Q`` through the LU of ``I - kron(S, S)``.

    Unique whenever the spectrum of S is reciprocal free; raises
    SingularMatrixError if that gate was bypassed and the system is
    singular.
    """
    s = as_matrix(coupling, "S")
    q = as_matrix(rhs_q, "Q")
    if s.shape[0] != s.shape[1] or s.shape != q.shape:
        raise ShapeError(f"need square S and Q of equal size, got {s.shape} and {q.shape}")
    m = s.shape[0]
    sys = np.eye(m * m) - kron(s, s)
    return unvec(lu_solve(sys, vec(q)), m, m)


def solve_transformed(form: EquivalentForm, tol: float | None = None) -> SolveReport:
    """Solve a transformed form, map back to X, and report the source
    equation's residual."""
    tol = DEFAULT_REPORT_TOL if tol is None else float(tol)
    inst = form.source
    mat, rhs = transformed_system(form)
    if form.kind in (FormKind.LYAP_OVER, FormKind.LYAP_UNDER):
        y = solve_lyapunov_kron(form.coupling, form.rhs)
        system_rank = mat.shape[1]
        stacked_residual = float(np.linalg.norm(mat @ vec(y) - rhs))
    else:
        res = least_squares_min_norm(mat, rhs)
        rows, cols = form.unknown_shape
        y = unvec(res.solution, rows, cols)
        system_rank = res.rank
        stacked_residual = res.residual_norm
    x = recover_x(form, y)
    return SolveReport(
        method=form.kind.value,
        x=x,
        residual=residual(inst, x),
        system_rank=system_rank,
        consistent=stacked_residual <= tol * inst.scale,
        margin=form.margin,
        transformed_solution=y,
    )


@dataclass(frozen=True, eq=False)
class Comparison:
    """Verdict of comparing two solve reports on the same instance."""

    equivalent: bool
    residual_ok: tuple[bool, bool]
    x_agree: bool | None


def compare_solutions(
    r1: SolveReport,
    r2: SolveReport,
    inst: ProblemInstance,
    tol: float | None = None,
) -> Comparison:
    """Judge two reports equivalent when both X's solve the equation.

    Solution sets may be non-unique, so equivalence is decided on the
    equation residual of each X against ``tol * scale``.  The X's
    themselves are compared, relatively, only when the stacked system
    pins the solution down (rank == m * n).
    """
    tol = DEFAULT_REPORT_TOL if tol is None else float(tol)
    bound = tol * inst.scale
    ok = (r1.residual <= bound, r2.residual <= bound)
    x_agree = None
    if max(r1.system_rank, r2.system_rank) == inst.m * inst.n:
        diff = frobenius(r1.x - r2.x)
        x_agree = diff <= tol * (1.0 + frobenius(r1.x))
    return Comparison(
        equivalent=ok[0] and ok[1] and x_agree is not False,
        residual_ok=ok,
        x_agree=x_agree,
    )
