"""Column permutations that repair a failed rebricking.

A real square matrix whose spectrum contains i cannot rebrick a basis,
but permuting its columns always can: the only eigenvalues shared by
every column permutation of a matrix are 0 and the mean of all entries,
both real.  This module provides the characteristic-polynomial machinery
behind that statement and the search for a repairing permutation.

Permutations are 0-based image vectors throughout: pi[k] is the index
that k maps to.  Right-multiplying by the associated matrix P_pi sends
column pi_inverse(j) of the operand to position j, so for the 4x4
image (0, 2, 3, 1) the columns (a1|a2|a3|a4) become (a1|a4|a2|a3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from . import linalg
from .errors import InvalidMatrix, NotAPermutation, NotRepaired, SearchExhausted, ShapeMismatch
from .linalg import DEFAULT_TOL, Tolerance

_MINOR_PATH_MAX = 12
_RANDOM_TRIAL_CAP = 1_000_000
_EXHAUSTIVE_MAX = 8
_WARN_BAND = 100.0


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial; coefficients[k] multiplies lambda^k."""

    coefficients: tuple[float, ...]

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise ValueError("need at least degree 1")
        if self.coefficients[-1] != 1.0:
            raise ValueError("leading coefficient must be exactly 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0.0 + 0.0j if np.iscomplexobj(np.asarray(x)) else 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class PermutationRepair:
    """A repairing permutation plus the certificate that it worked."""

    permutation: tuple[int, ...]
    trials: int
    min_dist_to_i_after: float
    sigma_min_after: float
    degenerate: bool = False


def _check_permutation(pi, n: int) -> tuple[int, ...]:
    p = tuple(int(k) for k in pi)
    if sorted(p) != list(range(n)):
        raise NotAPermutation(f"{pi!r} is not a bijection on 0..{n - 1}")
    return p


def permutation_matrix(pi, n: int) -> np.ndarray:
    """Matrix P with P[k, pi[k]] = 1; acts on columns by right multiplication."""
    p = _check_permutation(pi, n)
    return np.eye(n)[list(p)]


def apply_column_permutation(A, pi) -> np.ndarray:
    """A @ P_pi: column pi[k] of the result is column k of A."""
    M = linalg.as_matrix(A)
    p = _check_permutation(pi, M.shape[1])
    out = np.empty_like(M)
    out[:, list(p)] = M
    return out


def compose(pi, sigma) -> tuple[int, ...]:
    """Image vector of sigma after pi: (sigma o pi)[k] = sigma[pi[k]].

    Matches matrix composition: P_pi @ P_sigma = P_(sigma o pi), so
    applying pi then sigma to columns equals applying the composite once.
    """
    n = len(pi)
    p = _check_permutation(pi, n)
    s = _check_permutation(sigma, n)
    return tuple(s[p[k]] for k in range(n))


def cycle_notation(pi) -> str:
    """One-line cycle notation with 1-based indices, e.g. '(2 3 4)'."""
    n = len(pi)
    p = _check_permutation(pi, n)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        k = p[start]
        while k != start:
            cyc.append(k)
            seen[k] = True
            k = p[k]
        cycles.append("(" + " ".join(str(j + 1) for j in cyc) + ")")
    return "".join(cycles) if cycles else "id"


def _char_poly_minors(A: np.ndarray) -> np.ndarray:
    # coefficient of lambda^k is (-1)^(n-k) * sum of principal minors of
    # order n-k (rows and columns indexed by I, |I| = k, deleted)
    n = A.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    idx = list(range(n))
    for k in range(n):
        if k == n - 1:
            total = float(np.trace(A))
        else:
            minors = []
            for dropped in combinations(idx, k):
                keep = [j for j in idx if j not in dropped]
                minors.append(A[np.ix_(keep, keep)])
            total = float(np.sum(np.linalg.det(np.stack(minors))))
        coeffs[k] = (-1.0) ** (n - k) * total
    return coeffs


def _char_poly_recursion(A: np.ndarray) -> np.ndarray:
    # Faddeev-LeVerrier: trace recursion, O(n^4), no combinatorics
    n = A.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    M = np.zeros_like(A, dtype=float)
    c = 1.0
    for k in range(1, n + 1):
        M = A @ M + c * np.eye(n)
        c = -float(np.trace(A @ M)) / k
        coeffs[n - k] = c
    return coeffs


def char_poly(A, method: str = "auto") -> CharPoly:
    """Characteristic polynomial det(lambda*Id - A), ascending coefficients.

    method 'minors' sums signed principal minors (the literal formula,
    combinatorial, capped at n=12); 'recursion' uses the Faddeev-LeVerrier
    trace recursion; 'auto' picks minors up to the cap, recursion beyond.
    """
    M = linalg.require_square(A)
    if np.iscomplexobj(M):
        raise InvalidMatrix("characteristic machinery expects a real matrix")
    n = M.shape[0]
    if method == "auto":
        method = "minors" if n <= _MINOR_PATH_MAX else "recursion"
    if method == "minors":
        if n > _MINOR_PATH_MAX:
            method = "recursion"
        else:
            return CharPoly(tuple(_char_poly_minors(M)))
    if method != "recursion":
        raise ValueError(f"unknown method {method!r}")
    return CharPoly(tuple(_char_poly_recursion(M)))


def summed_char_poly(A) -> np.ndarray:
    """Sum of char polys of A @ P_pi over all permutations, ascending coeffs.

    Closed form: n! * lambda^n - (n-1)! * (sum of all entries) * lambda^(n-1);
    every lower coefficient cancels exactly.
    """
    M = linalg.require_square(A)
    n = M.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[n] = float(math.factorial(n))
    coeffs[n - 1] = -float(math.factorial(n - 1)) * float(np.sum(M))
    return coeffs


def invariant_eigenvalue_candidates(A) -> tuple[float, float]:
    """The only values that can be eigenvalues of A @ P_pi for every pi.

    Returns (0, mean of all entries); both are real, which is why a
    repairing permutation always exists for eigenvalue i.
    """
    M = linalg.require_square(A)
    return 0.0, float(np.sum(M)) / M.shape[0]


def _repair_score(A: np.ndarray, pi, tol: Tolerance):
    AP = apply_column_permutation(A, pi)
    B = np.eye(A.shape[0]) + 1j * AP
    smin, smax = linalg.sigma_extremes(B)
    cutoff = linalg.rank_cutoff(B, tol, sigma_max=smax)
    return smin, cutoff, AP


def _candidate_order(n: int):
    # identity, all transpositions in lexicographic order, then every
    # permutation in lexicographic order (duplicates skipped)
    ident = tuple(range(n))
    yield ident
    tried = {ident}
    for a in range(n):
        for b in range(a + 1, n):
            p = list(range(n))
            p[a], p[b] = p[b], p[a]
            t = tuple(p)
            tried.add(t)
            yield t
    for p in permutations(range(n)):
        if p not in tried:
            yield p


def repair_permutation(A, tol: Tolerance = DEFAULT_TOL, seed: int = 0) -> PermutationRepair:
    """Find a column permutation pi so that Id + i * A @ P_pi is regular.

    The search is deterministic: identity first, then transpositions, then
    full lexicographic enumeration for n <= 8; larger sizes fall back to
    seeded random draws capped at one million trials.
    """
    M = linalg.require_square(A)
    n = M.shape[0]
    trials = 0
    if n <= _EXHAUSTIVE_MAX:
        source = _candidate_order(n)
        cap = None
    else:
        rng = np.random.default_rng(seed)
        source = (tuple(int(j) for j in rng.permutation(n)) for _ in range(_RANDOM_TRIAL_CAP))
        cap = _RANDOM_TRIAL_CAP
    for pi in source:
        trials += 1
        smin, cutoff, AP = _repair_score(M, pi, tol)
        if smin > cutoff:
            eigs = linalg.eigenvalues(AP)
            min_dist = float(np.min(np.abs(eigs - 1j)))
            return PermutationRepair(
                permutation=pi,
                trials=trials,
                min_dist_to_i_after=min_dist,
                sigma_min_after=smin,
                degenerate=(min_dist <= _WARN_BAND * tol.eig_abs or smin <= _WARN_BAND * cutoff),
            )
    raise SearchExhausted(
        f"no repairing permutation found in {trials} trials", trials=trials
    )  # unreachable for n <= 8: only real eigenvalues survive all permutations


def rebrick_with_permutation(V, A, pi, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """The repaired complex basis matrix V + i * A @ V @ P_pi.

    Equals V @ (Id + i * At @ P_pi) for the conjugated operator
    At = inv(V) @ A @ V.  Raises NotRepaired when pi does not make the
    result regular.
    """
    V_ = linalg.require_square(V, "V")
    A_ = linalg.require_square(A, "A")
    if V_.shape != A_.shape:
        raise ShapeMismatch(f"V is {V_.shape}, A is {A_.shape}")
    p = _check_permutation(pi, V_.shape[1])
    W = V_ + 1j * apply_column_permutation(A_ @ V_, p)
    smin, smax = linalg.sigma_extremes(W)
    if smin <= linalg.rank_cutoff(W, tol, sigma_max=smax):
        raise NotRepaired(
            f"permutation {p} leaves the rebricked matrix singular (sigma_min={smin:.3e})"
        )
    return W
