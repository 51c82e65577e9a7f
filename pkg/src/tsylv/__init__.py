"""Toolkit for the T-congruence Sylvester equation A X + X^T B = C.

Provides a brute-force vectorized solver, equivalence transformations to
generalized Sylvester / Lyapunov forms with exact recovery maps, the
reciprocal-free spectrum gates behind them, and a CLI for instance
generation, solving, and cross-verification.
"""

from .errors import (
    BadRightInverseError,
    GenerationError,
    InconsistentCouplingError,
    InstanceFormatError,
    NoConvergenceError,
    NotReciprocalFreeError,
    RankDeficientError,
    ShapeError,
    SingularMatrixError,
    TsylvError,
)
from .generate import generate_instance
from .instance_io import dump_instance, read_instance, write_instance
from .kernels import (
    eigenvalues,
    least_squares_min_norm,
    lu_solve,
    pinv_full_column_rank,
    pinv_full_row_rank,
)
from .solvers import (
    Comparison,
    SolveReport,
    assemble_vec_system,
    compare_solutions,
    residual,
    solve_direct,
    solve_lyapunov_kron,
    solve_transformed,
)
from .spectra import (
    ReciprocalDecision,
    Spectrum,
    is_reciprocal_free,
    reciprocal_free_det_check,
    spectrum,
)
from .tensors import PermutationMap, commutation, kron, unvec, vec
from .transforms import (
    EquivalentForm,
    FormKind,
    ProblemInstance,
    RecoveryKind,
    RecoveryMap,
    build_coupling,
    build_g_matrix,
    build_right_inverse,
    check_coupling,
    check_right_inverse,
    recover_x,
    transform_lyap_over,
    transform_lyap_under,
    transform_over,
    transform_under,
)

__version__ = "0.1.0"

__all__ = [
    "BadRightInverseError",
    "Comparison",
    "EquivalentForm",
    "FormKind",
    "GenerationError",
    "InconsistentCouplingError",
    "InstanceFormatError",
    "NoConvergenceError",
    "NotReciprocalFreeError",
    "PermutationMap",
    "ProblemInstance",
    "RankDeficientError",
    "ReciprocalDecision",
    "RecoveryKind",
    "RecoveryMap",
    "ShapeError",
    "SingularMatrixError",
    "SolveReport",
    "Spectrum",
    "TsylvError",
    "assemble_vec_system",
    "build_coupling",
    "build_g_matrix",
    "build_right_inverse",
    "check_coupling",
    "check_right_inverse",
    "commutation",
    "compare_solutions",
    "dump_instance",
    "eigenvalues",
    "generate_instance",
    "is_reciprocal_free",
    "kron",
    "least_squares_min_norm",
    "lu_solve",
    "pinv_full_column_rank",
    "pinv_full_row_rank",
    "read_instance",
    "reciprocal_free_det_check",
    "recover_x",
    "residual",
    "solve_direct",
    "solve_lyapunov_kron",
    "solve_transformed",
    "spectrum",
    "transform_lyap_over",
    "transform_lyap_under",
    "transform_over",
    "transform_under",
    "unvec",
    "vec",
    "write_instance",
]
