"""Equivalence transformations of AX + X^T B = C and their recovery maps.

The equation couples X with its transpose, which rules out the standard
Sylvester/Lyapunov machinery.  Under a reciprocal-free condition on a
coupling matrix S it can be rewritten into a transpose-free equivalent:

* tall or square A (m >= n), any S with ``B^T = S A``::

      A X - B^T X S^T = C - (S C)^T          unknown X unchanged

* wide or square A (m <= n), any right inverse D with ``A D = I`` and
  ``S = B^T D``::

      A Xt - B^T Xt S^T = C                  X = Xt - D Xt^T B

* square nonsingular A, ``S = B^T A^{-1}``, two Lyapunov specializations::

      Xt - S Xt S^T = C - (S C)^T            Xt = A X
      Xh - S Xh S^T = C                      Xh = A Xt,  X = Xt - A^{-1} Xt^T B

Each transform checks its hypotheses (coupling consistency, right-inverse
quality, reciprocal-free spectrum) and returns an :class:`EquivalentForm`
bundling the rewritten equation with the exact recovery map back to X.
The canonical S and D use the full-rank pseudoinverse of A; callers may
supply their own, which only need to pass the consistency checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    BadRightInverseError,
    InconsistentCouplingError,
    NotReciprocalFreeError,
    ShapeError,
    SingularMatrixError,
)
from .kernels import (
    as_matrix,
    frobenius,
    lu_solve,
    pinv_full_column_rank,
    pinv_full_row_rank,
)
from .spectra import ReciprocalDecision, is_reciprocal_free, spectrum
from .tensors import commutation, kron

DEFAULT_CONSISTENCY_TOL = 1e-10


def _read_only(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=np.float64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """The equation data (A, B, C) with A m-by-n, B n-by-m, and C m-by-m."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a = _read_only(as_matrix(self.a, "A"))
        b = _read_only(as_matrix(self.b, "B"))
        c = _read_only(as_matrix(self.c, "C"))
        m, n = a.shape
        if b.shape != (n, m):
            raise ShapeError(
                f"B must be {n}x{m} to match A, got {b.shape[0]}x{b.shape[1]}"
            )
        if c.shape != (m, m):
            raise ShapeError(f"C must be {m}x{m}, got {c.shape[0]}x{c.shape[1]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def m(self) -> int:
        return self.a.shape[0]

    @property
    def n(self) -> int:
        return self.a.shape[1]

    @property
    def scale(self) -> float:
        """Combined magnitude used to scale residual tolerances."""
        return 1.0 + frobenius(self.a) + frobenius(self.b) + frobenius(self.c)


class FormKind(str, Enum):
    GEN_SYLV_OVER = "gen-sylv-over"
    GEN_SYLV_UNDER = "gen-sylv-under"
    LYAP_OVER = "lyap-over"
    LYAP_UNDER = "lyap-under"


class RecoveryKind(str, Enum):
    IDENTITY = "identity"
    LEFT_INVERT = "left-invert"
    UNDER = "under"


@dataclass(frozen=True, eq=False)
class RecoveryMap:
    """Exact map from a transformed solution back to the original X.

    IDENTITY returns the solution unchanged, LEFT_INVERT applies A^{-1},
    and UNDER computes ``Y - D @ Y.T @ B``.  When ``a`` is set on an UNDER
    map the square composition applies: Y is first multiplied by A^{-1}
    and A^{-1} then plays the role of D.
    """

    kind: RecoveryKind
    a: np.ndarray | None = None
    d: np.ndarray | None = None
    b: np.ndarray | None = None

    def apply(self, y: np.ndarray) -> np.ndarray:
        y = as_matrix(y, "solution")
        if self.kind is RecoveryKind.IDENTITY:
            return y
        if self.kind is RecoveryKind.LEFT_INVERT:
            return lu_solve(self.a, y)
        if self.a is not None:
            xt = lu_solve(self.a, y)
            return xt - lu_solve(self.a, xt.T @ self.b)
        return y - self.d @ (y.T @ self.b)


@dataclass(frozen=True, eq=False)
class EquivalentForm:
    """A transformed equation ``left @ Y - right @ Y @ coupling.T = rhs``.

    ``recovery`` maps any solution Y back to a solution X of the source
    instance; ``margin`` is the reciprocal-free margin of the coupling
    spectrum measured at construction time.
    """

    kind: FormKind
    left: np.ndarray
    right: np.ndarray
    coupling: np.ndarray
    rhs: np.ndarray
    recovery: RecoveryMap
    margin: float
    source: ProblemInstance

    @property
    def unknown_shape(self) -> tuple[int, int]:
        return (self.left.shape[1], self.rhs.shape[1])


def build_coupling(a, b) -> np.ndarray:
    """Canonical coupling ``S = B^T A^+`` satisfying ``B^T = S A``.

    Requires m >= n and full column rank; infinitely many couplings exist,
    this is the pseudoinverse one.
    """
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    m, n = a.shape
    if b.shape != (n, m):
        raise ShapeError(f"B must be {n}x{m}, got {b.shape[0]}x{b.shape[1]}")
    if m < n:
        raise ShapeError(
            "canonical coupling needs m >= n; supply a coupling matrix explicitly"
        )
    return b.T @ pinv_full_column_rank(a)


def check_coupling(a, b, s, tol: float | None = None) -> bool:
    """Whether ``B^T = S A`` holds within ``tol * (1 + ||B||_F)``."""
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    s = as_matrix(s, "S")
    m, n = a.shape
    if b.shape != (n, m) or s.shape != (m, m):
        raise ShapeError("coupling check needs A m*n, B n*m, S m*m")
    base = DEFAULT_CONSISTENCY_TOL if tol is None else float(tol)
    return frobenius(b.T - s @ a) <= base * (1.0 + frobenius(b))


def build_right_inverse(a) -> np.ndarray:
    """Canonical right inverse ``D = A^+`` with ``A D = I``.

    Requires m <= n and full row rank.
    """
    a = as_matrix(a, "A")
    m, n = a.shape
    if m > n:
        raise ShapeError("right inverse needs m <= n")
    return pinv_full_row_rank(a)


def check_right_inverse(a, d, tol: float | None = None) -> bool:
    """Whether ``A D = I`` holds within ``tol * (1 + ||A||_F)``."""
    a = as_matrix(a, "A")
    d = as_matrix(d, "D")
    m, n = a.shape
    if d.shape != (n, m):
        raise ShapeError(f"D must be {n}x{m}, got {d.shape[0]}x{d.shape[1]}")
    base = DEFAULT_CONSISTENCY_TOL if tol is None else float(tol)
    return frobenius(a @ d - np.eye(m)) <= base * (1.0 + frobenius(a))


def _gate_reciprocal(s: np.ndarray) -> ReciprocalDecision:
    decision = is_reciprocal_free(spectrum(s))
    if not decision.free:
        i, j, li, lj = decision.witness
        raise NotReciprocalFreeError(
            "coupling spectrum is not reciprocal free: eigenvalues "
            f"{li} and {lj} (indices {i}, {j}) have product within "
            f"{decision.tol:.3e} of 1",
            witness=decision.witness,
            margin=decision.margin,
        )
    return decision


def transform_over(inst: ProblemInstance, coupling=None, tol: float | None = None) -> EquivalentForm:
    """Rewrite as ``A X - B^T X S^T = C - (S C)^T`` for m >= n.

    The unknown stays X itself.  ``coupling`` defaults to the canonical
    ``B^T A^+``; a user-supplied S only has to satisfy ``B^T = S A``.
    """
    if inst.m < inst.n:
        raise ShapeError(f"this route needs m >= n, got m={inst.m}, n={inst.n}")
    if coupling is None:
        s = build_coupling(inst.a, inst.b)
    else:
        s = as_matrix(coupling, "S")
        if s.shape != (inst.m, inst.m):
            raise ShapeError(f"S must be {inst.m}x{inst.m}, got {s.shape}")
    if not check_coupling(inst.a, inst.b, s, tol):
        raise InconsistentCouplingError(
            "S does not satisfy B^T = S A within tolerance"
        )
    decision = _gate_reciprocal(s)
    rhs = inst.c - (s @ inst.c).T
    return EquivalentForm(
        kind=FormKind.GEN_SYLV_OVER,
        left=inst.a,
        right=inst.b.T,
        coupling=s,
        rhs=rhs,
        recovery=RecoveryMap(RecoveryKind.IDENTITY),
        margin=decision.margin,
        source=inst,
    )


def transform_under(inst: ProblemInstance, right_inverse=None, tol: float | None = None) -> EquivalentForm:
    """Rewrite as ``A Xt - B^T Xt S^T = C`` with ``S = B^T D`` for m <= n.

    The unknown changes; solutions map back through ``X = Xt - D Xt^T B``.
    ``right_inverse`` defaults to the canonical ``A^+``; a user-supplied D
    only has to satisfy ``A D = I``.
    """
    if inst.m > inst.n:
        raise ShapeError(f"this route needs m <= n, got m={inst.m}, n={inst.n}")
    if right_inverse is None:
        d = build_right_inverse(inst.a)
    else:
        d = as_matrix(right_inverse, "D")
        if d.shape != (inst.n, inst.m):
            raise ShapeError(f"D must be {inst.n}x{inst.m}, got {d.shape}")
    if not check_right_inverse(inst.a, d, tol):
        raise BadRightInverseError("D does not satisfy A D = I within tolerance")
    s = inst.b.T @ d
    decision = _gate_reciprocal(s)
    return EquivalentForm(
        kind=FormKind.GEN_SYLV_UNDER,
        left=inst.a,
        right=inst.b.T,
        coupling=s,
        rhs=inst.c,
        recovery=RecoveryMap(RecoveryKind.UNDER, d=d, b=inst.b),
        margin=decision.margin,
        source=inst,
    )


def _square_coupling(inst: ProblemInstance) -> np.ndarray:
    """S = B^T A^{-1} for square instances, via a solve against A^T."""
    if inst.m != inst.n:
        raise ShapeError(f"square routes need m == n, got m={inst.m}, n={inst.n}")
    try:
        return lu_solve(inst.a.T, inst.b).T
    except SingularMatrixError as exc:
        raise SingularMatrixError("A is singular; square routes need nonsingular A") from exc


def transform_lyap_over(inst: ProblemInstance, tol: float | None = None) -> EquivalentForm:
    """Square specialization of the m >= n route, in Lyapunov shape.

    Produces ``Xt - S Xt S^T = C - (S C)^T`` with ``Xt = A X``, so the
    recovery applies A^{-1}.
    """
    s = _square_coupling(inst)
    decision = _gate_reciprocal(s)
    rhs = inst.c - (s @ inst.c).T
    return EquivalentForm(
        kind=FormKind.LYAP_OVER,
        left=np.eye(inst.m),
        right=s,
        coupling=s,
        rhs=rhs,
        recovery=RecoveryMap(RecoveryKind.LEFT_INVERT, a=inst.a),
        margin=decision.margin,
        source=inst,
    )


def transform_lyap_under(inst: ProblemInstance, tol: float | None = None) -> EquivalentForm:
    """Square specialization of the m <= n route, in Lyapunov shape.

    Produces ``Xh - S Xh S^T = C``; recovery composes ``Xt = A^{-1} Xh``
    with ``X = Xt - A^{-1} Xt^T B``.
    """
    s = _square_coupling(inst)
    decision = _gate_reciprocal(s)
    return EquivalentForm(
        kind=FormKind.LYAP_UNDER,
        left=np.eye(inst.m),
        right=s,
        coupling=s,
        rhs=inst.c,
        recovery=RecoveryMap(RecoveryKind.UNDER, a=inst.a, b=inst.b),
        margin=decision.margin,
        source=inst,
    )


def recover_x(form: EquivalentForm, solution) -> np.ndarray:
    """Map a solution of the transformed equation back to X of the source."""
    y = as_matrix(solution, "solution")
    if y.shape != form.unknown_shape:
        raise ShapeError(
            f"solution must be {form.unknown_shape[0]}x{form.unknown_shape[1]}, "
            f"got {y.shape[0]}x{y.shape[1]}"
        )
    return form.recovery.apply(y)


def g_matrix_over(s) -> np.ndarray:
    """Certificate matrix ``I - P_mm (I_m kron S)`` of the m >= n route.

    The transformation is an equivalence exactly when this is nonsingular,
    which the reciprocal-free gate guarantees.
    """
    s = as_matrix(s, "S")
    if s.shape[0] != s.shape[1]:
        raise ShapeError(f"S must be square, got {s.shape}")
    m = s.shape[0]
    p = commutation(m, m)
    return np.eye(m * m) - p.apply_rows(kron(np.eye(m), s))


def g_matrix_under(d, b) -> np.ndarray:
    """Certificate matrix ``I - P_nm (D kron B^T)`` of the m <= n route.

    It also links the unknowns: ``vec(X) = G @ vec(Xt)``.
    """
    d = as_matrix(d, "D")
    b = as_matrix(b, "B")
    n, m = d.shape
    if b.shape != (n, m):
        raise ShapeError(f"B must be {n}x{m}, got {b.shape[0]}x{b.shape[1]}")
    p = commutation(n, m)
    return np.eye(m * n) - p.apply_rows(kron(d, b.T))


def build_g_matrix(form: EquivalentForm) -> np.ndarray:
    """The certificate matrix G for this form, exposed for verification."""
    if form.kind in (FormKind.GEN_SYLV_OVER, FormKind.LYAP_OVER):
        return g_matrix_over(form.coupling)
    if form.kind is FormKind.GEN_SYLV_UNDER:
        return g_matrix_under(form.recovery.d, form.recovery.b)
    # LYAP_UNDER: the right inverse is A^{-1}
    d = lu_solve(form.recovery.a, np.eye(form.source.m))
    return g_matrix_under(d, form.recovery.b)
