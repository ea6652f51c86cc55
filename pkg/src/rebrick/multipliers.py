"""Shift-invariant rebricking on Z_N: multipliers, translates, Hilbert symbol.

Signals live on the cyclic group of even length N; the unitary DFT
(1/sqrt(N) both ways) diagonalizes every circular-shift-invariant
operator, so an operator is carried by its length-N frequency symbol.
A symbol rebricks bases of translates exactly when it is real, even and
takes only the values +-1.  The discrete Hilbert symbol fails all of
that on purpose: Id + i*H collapses the negative frequencies, which is
the classical obstruction to spanning the complex space with analytic
signals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    GeneratorNotONB,
    GridTooSmall,
    InternalConsistencyError,
    LengthMismatch,
    OddLength,
)
from .linalg import DEFAULT_TOL, Tolerance


def _as_signal(x, name: str = "signal") -> np.ndarray:
    v = np.asarray(x)
    if v.ndim != 1 or v.size == 0:
        raise LengthMismatch(f"{name} must be a nonempty 1-D array")
    if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
        raise LengthMismatch(f"{name} must be finite")
    return v.astype(np.complex128, copy=False)


def dft(x) -> np.ndarray:
    """Unitary forward DFT; Parseval holds exactly: ||x|| == ||dft(x)||."""
    return np.fft.fft(_as_signal(x), norm="ortho")


def idft(X) -> np.ndarray:
    """Unitary inverse DFT."""
    return np.fft.ifft(_as_signal(X, "spectrum"), norm="ortho")


def shift_matrix(N: int) -> np.ndarray:
    """Circular right shift: (T x)[m] = x[m-1 mod N]."""
    if N < 1:
        raise LengthMismatch("N must be positive")
    return np.roll(np.eye(N), 1, axis=0)


def apply_multiplier(m, x) -> np.ndarray:
    """Apply the shift-invariant operator with frequency symbol m to x."""
    mv = _as_signal(m, "multiplier")
    xv = _as_signal(x)
    if mv.shape != xv.shape:
        raise LengthMismatch(f"multiplier length {mv.size} != signal length {xv.size}")
    return idft(mv * dft(xv))


def multiplier_matrix(m) -> np.ndarray:
    """Dense N x N matrix of the operator with symbol m."""
    mv = _as_signal(m, "multiplier")
    N = mv.size
    F = np.fft.fft(np.eye(N), axis=0, norm="ortho")
    return np.fft.ifft(mv[:, None] * F, axis=0, norm="ortho")


def is_real_symbol_operator(m, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the operator with symbol m maps real signals to real ones."""
    mv = _as_signal(m, "multiplier")
    N = mv.size
    return bool(np.max(np.abs(mv - np.conj(mv[(-np.arange(N)) % N]))) <= tol.equality_abs)


def validate_rebrick_multiplier(m, tol: Tolerance = DEFAULT_TOL):
    """Check the three clauses a rebricking symbol must satisfy.

    Returns (valid, reasons): real-valued, even (m[k] == m[N-k]), and
    values in {-1, +1}.  Any failed clause lands in `reasons`.
    """
    mv = _as_signal(m, "multiplier")
    N = mv.size
    reasons = []
    if np.max(np.abs(mv.imag)) > tol.equality_abs:
        reasons.append("not real-valued")
    mirrored = mv[(-np.arange(N)) % N]
    if np.max(np.abs(mv - mirrored)) > tol.equality_abs:
        reasons.append("not even (m[k] != m[N-k])")
    if np.max(np.abs(np.abs(mv.real) - 1.0)) > tol.equality_abs:
        reasons.append("values not in {-1, +1}")
    return len(reasons) == 0, reasons


def rebrick_translates(x, m, tol: Tolerance = DEFAULT_TOL):
    """Rebrick the translate basis {T^n x} with the symbol m.

    Builds the N x N matrix whose columns are T^n((Id + i*A)/sqrt(2) x)
    with A the operator of m, and reports whether the columns form an
    orthonormal basis of C^N.  The generator must produce an orthonormal
    translate basis, i.e. all its DFT magnitudes equal 1/sqrt(N).
    """
    xv = _as_signal(x)
    mv = _as_signal(m, "multiplier")
    if xv.shape != mv.shape:
        raise LengthMismatch(f"generator length {xv.size} != multiplier length {mv.size}")
    N = xv.size
    mags = np.abs(dft(xv))
    if np.max(np.abs(mags - 1.0 / np.sqrt(N))) > max(tol.equality_abs, 1e-10):
        raise GeneratorNotONB(
            "translates of the generator are not orthonormal "
            "(DFT magnitudes deviate from 1/sqrt(N))"
        )
    bx = idft((1.0 + 1j * mv) / np.sqrt(2.0) * dft(xv))
    cols = np.empty((N, N), dtype=complex)
    for n in range(N):
        cols[:, n] = np.roll(bx, n)
    unitary = linalg.is_unitary_defect(cols) <= max(tol.equality_abs, 1e-10)
    return cols, unitary


def discrete_hilbert(N: int) -> np.ndarray:
    """Frequency symbol of the discrete Hilbert transform on Z_N.

    -i on positive frequencies, +i on negative ones, 0 at DC and Nyquist
    (the convention that keeps the operator real-valued).
    """
    if N < 2 or N % 2 != 0:
        raise OddLength(f"N must be even and >= 2, got {N}")
    m = np.zeros(N, dtype=complex)
    m[1 : N // 2] = -1j
    m[N // 2 + 1 :] = 1j
    return m


def analytic_defect(N: int, tol: Tolerance = DEFAULT_TOL):
    """Rank and kernel dimension of Id + i*H on Z_N.

    The symbol of Id + i*H is 2 on positive frequencies, 0 on negative
    ones and 1 at DC/Nyquist, so the kernel has dimension N/2 - 1 and the
    rank is N/2 + 1: analytic signals never span the complex space.
    """
    m = discrete_hilbert(N)
    H = multiplier_matrix(m)
    B = np.eye(N) + 1j * H
    r = linalg.rank(B, tol)
    return r, N - r


@dataclass(frozen=True)
class TrigRebrickReport:
    """Deviations of the rebricked trigonometric system from pure exponentials."""

    K: int
    N: int
    max_dev_constant: float
    max_dev_exp_pos: float
    max_dev_exp_neg: float

    @property
    def max_dev(self) -> float:
        return max(self.max_dev_constant, self.max_dev_exp_pos, self.max_dev_exp_neg)


def trig_rebrick_demo(K: int, N: int | None = None) -> TrigRebrickReport:
    """Rebrick the alternating cos/sin basis against its sin/cos reordering.

    Sampling on the uniform grid with quadrature weight 1/N, the combined
    vectors come out as unimodular multiples of complex exponentials:
    (1+i)/sqrt(2) for the constant, exp(+2*pi*i*k*x) at odd positions and
    i*exp(-2*pi*i*k*x) at even ones.  Reports the worst grid-norm
    deviation per class.
    """
    if K < 1:
        raise GridTooSmall("K must be >= 1")
    if N is None:
        N = 4 * K + 2
    if N < 4 * K + 2:
        raise GridTooSmall(f"grid N={N} too small for K={K}; need N >= {4 * K + 2}")
    t = np.arange(N) / N
    weight = 1.0 / np.sqrt(N)

    def grid_norm(v):
        return float(np.linalg.norm(v) * weight)

    dev_const = grid_norm(
        (np.ones(N) + 1j * np.ones(N)) / np.sqrt(2.0)
        - (1.0 + 1j) / np.sqrt(2.0) * np.ones(N)
    )
    dev_pos = 0.0
    dev_neg = 0.0
    root2 = np.sqrt(2.0)
    for k in range(1, K + 1):
        cos_k = root2 * np.cos(2.0 * np.pi * k * t)
        sin_k = root2 * np.sin(2.0 * np.pi * k * t)
        # odd slot: (sqrt2*cos + i*sqrt2*sin)/sqrt2 against exp(+)
        dev_pos = max(dev_pos, grid_norm((cos_k + 1j * sin_k) / root2 - np.exp(2j * np.pi * k * t)))
        # even slot: (sqrt2*sin + i*sqrt2*cos)/sqrt2 against i*exp(-)
        dev_neg = max(
            dev_neg, grid_norm((sin_k + 1j * cos_k) / root2 - 1j * np.exp(-2j * np.pi * k * t))
        )
    return TrigRebrickReport(
        K=K,
        N=N,
        max_dev_constant=dev_const,
        max_dev_exp_pos=dev_pos,
        max_dev_exp_neg=dev_neg,
    )


@dataclass(frozen=True)
class ConditioningRow:
    """One sweep entry: problem size, sigma_min of Id + i*A_N, kernel dimension."""

    N: int
    sigma_min: float
    kernel_dim: int


def _creeping_symbol(N: int) -> np.ndarray:
    # samples of i*(1 - 1/w) on the integer band w = 2..N/2-1, the flat
    # value i/2 below the band, conjugate-mirrored onto negative bins;
    # DC and Nyquist are 0 to keep the operator real
    m = np.zeros(N, dtype=complex)
    for k in range(1, N // 2):
        w = float(k)
        m[k] = 0.5j if w < 2.0 else 1j * (1.0 - 1.0 / w)
        m[N - k] = np.conj(m[k])
    return m


def conditioning_sweep(N_list) -> list[ConditioningRow]:
    """sigma_min of Id + i*A_N for symbols creeping toward i as N grows.

    Each operator stays injective (kernel dimension 0) while sigma_min
    decreases strictly toward zero: the conditioning worsens without the
    kernel ever opening up.  The symbol model (integer band up to N/2) is
    a modeling choice; the reported threshold behaviour depends on it.
    """
    sizes = [int(N) for N in N_list]
    if any(N < 4 or N % 2 for N in sizes):
        raise OddLength("sweep sizes must be even and >= 4")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise OddLength("sweep sizes must be strictly increasing")
    rows = []
    for N in sizes:
        m = _creeping_symbol(N)
        A = multiplier_matrix(m)
        if np.max(np.abs(A.imag)) > 1e-12:  # pragma: no cover - symbol is mirrored
            raise InternalConsistencyError("creeping symbol produced a non-real operator")
        B = np.eye(N) + 1j * A.real
        smin, _ = linalg.sigma_extremes(B)
        kdim = N - linalg.rank(B)
        rows.append(ConditioningRow(N=N, sigma_min=smin, kernel_dim=kdim))
    return rows
