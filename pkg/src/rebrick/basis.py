"""Rebricking of bases: pairing two real bases into one complex basis.

Columns of an invertible real matrix V carry a basis of R^n.  Two bases
V1, V2 combine into the complex candidate V1 + i*V2; the candidate is a
basis of C^n exactly when the transfer operator A = V2 @ inv(V1) has no
eigenvalue i, equivalently when Id + A@A is invertible.  The verdict
produced here reports all three routes but the singular-value test on
the complex matrix is authoritative: eigenvalues of a non-normal matrix
are ill-conditioned while singular values are not.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    InternalConsistencyError,
    NotABasis,
    NotOrthogonal,
    NotOrthogonalSymmetric,
    NotRebrickable,
    ShapeMismatch,
    Singular,
    TooSmall,
)
from .linalg import DEFAULT_TOL, Tolerance

# Disagreements between the decision routes are escalated only when every
# quantity sits this far away from its own threshold.
_GUARD = 1e4
# A verdict inside [cutoff, WARN_BAND*cutoff] is flagged as near-degenerate.
_WARN_BAND = 100.0


@dataclass(frozen=True, eq=False)
class RebrickVerdict:
    """Certificate for one rebricking decision.

    sigma_min_B is the smallest singular value of the complex candidate
    (V1 + i*V2, or Id + i*A); the verdict is True exactly when it clears
    the rank cutoff.  The eigenvalues of the transfer operator and the
    smallest singular value of Id + A@A are diagnostic companions.
    """

    rebrickable: bool
    sigma_min_B: float
    eigenvalues_A: np.ndarray
    min_dist_to_i: float
    idA2_sigma_min: float
    condition_number: float
    warning: bool = False


@dataclass(frozen=True)
class RieszBoundReport:
    """Exact frame bounds of a rebricked basis plus operator-norm estimates.

    c_exact/C_exact are the squared extreme singular values of B @ V.
    The estimates sandwich them: c * ||inv(B)||^-2 <= c_exact and
    C_exact <= ||B||^2 * C, with (c, C) the bounds of V itself.
    norm_B is the operator norm of B = Id + i*A.
    """

    c_exact: float
    C_exact: float
    c_lower_estimate: float
    C_upper_estimate: float
    norm_B: float


def _verdict(B: np.ndarray, A: np.ndarray, tol: Tolerance) -> RebrickVerdict:
    smin_B, smax_B = linalg.sigma_extremes(B)
    cutoff_B = linalg.rank_cutoff(B, tol, sigma_max=smax_B)
    rebrickable = smin_B > cutoff_B

    eigs = linalg.eigenvalues(A)
    min_dist = float(np.min(np.abs(eigs - 1j)))
    eig_ok = min_dist > tol.eig_abs

    M = np.eye(A.shape[0]) + A @ A
    smin_M, smax_M = linalg.sigma_extremes(M)
    cutoff_M = linalg.rank_cutoff(M, tol, sigma_max=smax_M)
    ida2_ok = smin_M > cutoff_M

    warning = False
    if rebrickable != eig_ok or rebrickable != ida2_ok:
        # A disagreement is legitimate near a decision boundary; only a
        # decisive disagreement means the implementation is inconsistent.
        decisive = (
            (smin_B > _GUARD * cutoff_B or smin_B < cutoff_B / _GUARD)
            and (min_dist > _GUARD * tol.eig_abs or min_dist < tol.eig_abs / _GUARD)
            and (smin_M > _GUARD * cutoff_M or smin_M < cutoff_M / _GUARD)
        )
        if decisive:
            raise InternalConsistencyError(
                "singular-value and eigenvalue rebricking tests disagree: "
                f"sigma_min(B)={smin_B:.3e}, min|eig-i|={min_dist:.3e}, "
                f"sigma_min(Id+A^2)={smin_M:.3e}"
            )
        warning = True
    if rebrickable and (
        smin_B <= _WARN_BAND * cutoff_B or min_dist <= _WARN_BAND * tol.eig_abs
    ):
        warning = True

    cond = smax_B / smin_B if smin_B > 0.0 else float("inf")
    return RebrickVerdict(
        rebrickable=rebrickable,
        sigma_min_B=smin_B,
        eigenvalues_A=eigs,
        min_dist_to_i=min_dist,
        idA2_sigma_min=smin_M,
        condition_number=cond,
        warning=warning,
    )


def transfer_operator(V1, V2, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """The operator A = V2 @ inv(V1) mapping basis V1 elementwise onto V2."""
    A1 = linalg.require_square(V1, "V1")
    A2 = linalg.as_matrix(V2, "V2")
    if A1.shape != A2.shape:
        raise ShapeMismatch(f"V1 is {A1.shape}, V2 is {A2.shape}")
    return A2 @ linalg.invert(A1, tol)


def rebrick_pair(V1, V2, tol: Tolerance = DEFAULT_TOL):
    """Combine two real bases into V1 + i*V2 and certify the result.

    Raises NotABasis when either factor is singular at tolerance.
    Returns (complex matrix, RebrickVerdict).
    """
    A1 = linalg.require_square(V1, "V1")
    A2 = linalg.as_matrix(V2, "V2")
    if A1.shape != A2.shape:
        raise ShapeMismatch(f"V1 is {A1.shape}, V2 is {A2.shape}")
    for name, M in (("V1", A1), ("V2", A2)):
        if not linalg.is_invertible(M, tol):
            raise NotABasis(f"columns of {name} do not form a basis", which=name)
    B = A1 + 1j * A2
    A = A2 @ linalg.invert(A1, tol)
    return B, _verdict(B, A, tol)


def rebrick_with_operator(A, V, tol: Tolerance = DEFAULT_TOL):
    """Rebrick the basis V with the operator A: returns ((Id + i*A) @ V, verdict).

    The verdict is computed from Id + i*A alone, so it does not depend on
    which basis V is being rebricked.
    """
    A_ = linalg.require_square(A, "A")
    V_ = linalg.require_square(V, "V")
    if A_.shape != V_.shape:
        raise ShapeMismatch(f"A is {A_.shape}, V is {V_.shape}")
    if not linalg.is_invertible(V_, tol):
        raise NotABasis("columns of V do not form a basis", which="V")
    B = np.eye(A_.shape[0]) + 1j * A_
    return B @ V_, _verdict(B, A_, tol)


def non_transitivity_witness(dim: int):
    """Two rebricking operators whose product is not a rebricking operator.

    Both factors are the rotation by pi/4 on the leading 2-D block (their
    shared eigenvalue (1+i)/sqrt(2) multiplies to i in the product), padded
    with the identity.
    """
    if dim < 2:
        raise TooSmall("witness needs dimension >= 2")
    A = np.eye(dim)
    c = 1.0 / np.sqrt(2.0)
    A[:2, :2] = np.array([[c, -c], [c, c]])
    return A.copy(), A.copy()


def onb_rebrick_check(E1, E2, tol: Tolerance = DEFAULT_TOL):
    """Check whether two orthonormal bases combine into a complex one.

    Returns ((E1 + i*E2)/sqrt(2), is_onb, A) with A = E2 @ E1.T.  The
    combination is an orthonormal basis of C^n exactly when A is symmetric,
    equivalently when the combined matrix is unitary; both tests run and
    must agree.
    """
    M1 = linalg.require_square(E1, "E1")
    M2 = linalg.require_square(E2, "E2")
    if M1.shape != M2.shape:
        raise ShapeMismatch(f"E1 is {M1.shape}, E2 is {M2.shape}")
    for name, M in (("E1", M1), ("E2", M2)):
        if np.iscomplexobj(M) or not linalg.is_orthogonal(M, tol):
            raise NotOrthogonal(f"{name} is not orthogonal at tolerance", which=name)
    U = (M1 + 1j * M2) / np.sqrt(2.0)
    A = M2 @ M1.T
    symmetric = linalg.matrices_close(A, A.T, tol.equality_abs)
    unitary = linalg.is_unitary_defect(U) <= tol.equality_abs
    if symmetric != unitary:
        raise InternalConsistencyError(
            "symmetry test and unitarity test disagree "
            f"(symmetric={symmetric}, unitary={unitary})"
        )
    return U, unitary, A


def symmetry_condition_check(E1, E2, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Gram-symmetry test <d_n, e_k> == <d_k, e_n> for the columns of E1, E2."""
    M1 = linalg.require_square(E1, "E1")
    M2 = linalg.require_square(E2, "E2")
    if M1.shape != M2.shape:
        raise ShapeMismatch(f"E1 is {M1.shape}, E2 is {M2.shape}")
    for name, M in (("E1", M1), ("E2", M2)):
        if np.iscomplexobj(M) or not linalg.is_orthogonal(M, tol):
            raise NotOrthogonal(f"{name} is not orthogonal at tolerance", which=name)
    # G[n, k] = <d_n, e_k> with d_n, e_k the columns of E2, E1
    G = M2.T @ M1
    return linalg.matrices_close(G, G.T, tol.equality_abs)


def rebricked_dual(V, A, tol: Tolerance = DEFAULT_TOL):
    """Rebrick a basis and its dual simultaneously.

    primal = (Id + i*A) @ V, dual = inv(B*) @ inv(V.T); the columns are
    biorthogonal: dual* @ primal == Id.
    """
    V_ = linalg.require_square(V, "V")
    A_ = linalg.require_square(A, "A")
    if V_.shape != A_.shape:
        raise ShapeMismatch(f"V is {V_.shape}, A is {A_.shape}")
    B = np.eye(A_.shape[0]) + 1j * A_
    if not _verdict(B, A_, tol).rebrickable:
        raise NotRebrickable("A has eigenvalue i at tolerance; Id + iA is singular")
    if not linalg.is_invertible(V_, tol):
        raise NotABasis("columns of V do not form a basis", which="V")
    primal = B @ V_
    dual = linalg.invert(B.conj().T, tol) @ linalg.invert(V_.T, tol)
    return primal, dual


def real_part_preservation_lambda(A, tol: Tolerance = DEFAULT_TOL):
    """The constant lambda with Re(inv(B*) g) = lambda * g, if one exists.

    Such a lambda exists exactly when A @ A is a real multiple mu * Id with
    1 + mu != 0; then lambda = 1 / (1 + mu).  Returns None otherwise.
    """
    A_ = linalg.require_square(A, "A")
    if not linalg.is_invertible(A_, tol):
        raise Singular("A must be invertible")
    n = A_.shape[0]
    A2 = A_ @ A_
    mu = float(np.trace(A2).real) / n
    if not linalg.matrices_close(A2, mu * np.eye(n), tol.equality_abs * max(1.0, abs(mu))):
        return None
    if abs(1.0 + mu) <= tol.equality_abs:
        return None
    lam = 1.0 / (1.0 + mu)
    if abs(lam) <= tol.equality_abs or abs(lam - 1.0) <= tol.equality_abs:
        return None
    # cross-check the advertised dual identity before reporting the constant
    B = np.eye(n) + 1j * A_
    R = np.linalg.inv(B.conj().T).real
    if not linalg.matrices_close(R, lam * np.eye(n), 1e3 * tol.equality_abs):
        raise InternalConsistencyError(
            "scalar relation A^2 = mu*Id found but the dual real part is not lambda*g"
        )
    return lam


def rebricked_frame_bounds(V, A, tol: Tolerance = DEFAULT_TOL) -> RieszBoundReport:
    """Exact and estimated frame bounds of the rebricked basis (Id + i*A) @ V."""
    V_ = linalg.require_square(V, "V")
    A_ = linalg.require_square(A, "A")
    if V_.shape != A_.shape:
        raise ShapeMismatch(f"V is {V_.shape}, A is {A_.shape}")
    B = np.eye(A_.shape[0]) + 1j * A_
    if not _verdict(B, A_, tol).rebrickable:
        raise NotRebrickable("A has eigenvalue i at tolerance")
    if not linalg.is_invertible(V_, tol):
        raise NotABasis("columns of V do not form a basis", which="V")
    smin_BV, smax_BV = linalg.sigma_extremes(B @ V_)
    smin_B, smax_B = linalg.sigma_extremes(B)
    smin_V, smax_V = linalg.sigma_extremes(V_)
    return RieszBoundReport(
        c_exact=smin_BV**2,
        C_exact=smax_BV**2,
        c_lower_estimate=smin_V**2 * smin_B**2,
        C_upper_estimate=smax_V**2 * smax_B**2,
        norm_B=smax_B,
    )


def spectral_factorize_orthosym(A, tol: Tolerance = DEFAULT_TOL):
    """Factor an orthogonal symmetric matrix as A = R @ D @ R.T.

    D is diagonal with entries +/-1, the +1 block first; R is orthogonal
    with each column's largest-magnitude entry made positive, so the
    output is reproducible.
    """
    A_ = linalg.require_square(A, "A")
    if np.iscomplexobj(A_):
        raise NotOrthogonalSymmetric("input must be real")
    if not linalg.matrices_close(A_, A_.T, tol.equality_abs):
        raise NotOrthogonalSymmetric("input is not symmetric at tolerance")
    if not linalg.is_orthogonal(A_, tol):
        raise NotOrthogonalSymmetric("input is not orthogonal at tolerance")
    w, R = np.linalg.eigh(A_)
    order = np.argsort(-w)  # +1 eigenvalues first
    w = w[order]
    R = R[:, order]
    d = np.where(w >= 0.0, 1.0, -1.0)
    for j in range(R.shape[1]):
        k = int(np.argmax(np.abs(R[:, j])))
        if R[k, j] < 0.0:
            R[:, j] = -R[:, j]
    D = np.diag(d)
    if not linalg.matrices_close(R @ D @ R.T, A_, 1e2 * tol.equality_abs):
        raise NotOrthogonalSymmetric("eigenvalues are not +/-1 at tolerance")
    return R, D
