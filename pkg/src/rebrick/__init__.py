"""Build, repair and certify complex bases and frames from pairs of real ones.

The package decides when two real bases or frames combine columnwise
into a complex basis or frame (f_n + i*g_n), constructs the combined
system together with duals and sharp bounds, repairs failed combinations
by permuting columns, and models the shift-invariant case on Z_N where
the discrete Hilbert transform famously fails to rebrick.
"""

from . import errors
from .basis import (
    RebrickVerdict,
    RieszBoundReport,
    non_transitivity_witness,
    onb_rebrick_check,
    real_part_preservation_lambda,
    rebrick_pair,
    rebrick_with_operator,
    rebricked_dual,
    rebricked_frame_bounds,
    spectral_factorize_orthosym,
    symmetry_condition_check,
    transfer_operator,
)
from .frames import (
    FiniteFrame,
    FrameBounds,
    OrderVerdict,
    compatibility_operator,
    frame_bounds,
    frame_kernel,
    frame_leq,
    frrebrick_check,
    is_parseval,
    operator_rebrick_frame,
    parseval_rebrick,
    rebrick_frames,
    surjective_factor,
)
from .linalg import DEFAULT_TOL, Tolerance, eigenvalues, invert, kernel_basis, rank, svd
from .multipliers import (
    ConditioningRow,
    TrigRebrickReport,
    analytic_defect,
    apply_multiplier,
    conditioning_sweep,
    dft,
    discrete_hilbert,
    idft,
    multiplier_matrix,
    rebrick_translates,
    shift_matrix,
    trig_rebrick_demo,
    validate_rebrick_multiplier,
)
from .permutation import (
    CharPoly,
    PermutationRepair,
    apply_column_permutation,
    char_poly,
    cycle_notation,
    invariant_eigenvalue_candidates,
    permutation_matrix,
    rebrick_with_permutation,
    repair_permutation,
    summed_char_poly,
)

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "ConditioningRow",
    "DEFAULT_TOL",
    "FiniteFrame",
    "FrameBounds",
    "OrderVerdict",
    "PermutationRepair",
    "RebrickVerdict",
    "RieszBoundReport",
    "Tolerance",
    "TrigRebrickReport",
    "analytic_defect",
    "apply_column_permutation",
    "apply_multiplier",
    "char_poly",
    "compatibility_operator",
    "conditioning_sweep",
    "cycle_notation",
    "dft",
    "discrete_hilbert",
    "eigenvalues",
    "errors",
    "frame_bounds",
    "frame_kernel",
    "frame_leq",
    "frrebrick_check",
    "idft",
    "invariant_eigenvalue_candidates",
    "invert",
    "is_parseval",
    "kernel_basis",
    "multiplier_matrix",
    "non_transitivity_witness",
    "onb_rebrick_check",
    "operator_rebrick_frame",
    "parseval_rebrick",
    "permutation_matrix",
    "rank",
    "real_part_preservation_lambda",
    "rebrick_frames",
    "rebrick_pair",
    "rebrick_translates",
    "rebrick_with_operator",
    "rebrick_with_permutation",
    "rebricked_dual",
    "rebricked_frame_bounds",
    "repair_permutation",
    "shift_matrix",
    "spectral_factorize_orthosym",
    "summed_char_poly",
    "surjective_factor",
    "svd",
    "symmetry_condition_check",
    "transfer_operator",
    "trig_rebrick_demo",
    "validate_rebrick_multiplier",
]
