"""Eigenvalue engines.

Two routes are kept deliberately separate:

* :func:`jacobi_eigenvalues` -- cyclic Jacobi rotations, the oracle for the
  full spectrum;
* :func:`power_spectral_radius` -- power iteration for the Perron root of a
  nonnegative irreducible matrix.

Neither calls LAPACK.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .linalg import is_irreducible, is_nonnegative

__all__ = [
    "SpectrumResult",
    "SolverError",
    "jacobi_eigenvalues",
    "power_spectral_radius",
    "check_psd",
    "majorization_check",
]

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
POWER_RQ_TOL = 1e-13
POWER_RES_TOL = 1e-10
POWER_MAX_ITER = 100_000


class SolverError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class SpectrumResult:
    """Output of either eigen engine.

    ``eigenvalues`` is sorted nonincreasing and is ``None`` for power
    iteration (which only finds the radius). ``perron_vector`` is set when the
    input is nonnegative and irreducible. ``fallback`` marks a power iteration
    that hit its cap and was answered by the Jacobi oracle instead.
    """

    eigenvalues: np.ndarray | None
    spectral_radius: float
    perron_vector: np.ndarray | None
    iterations: int
    residual: float
    method: str
    fallback: bool = False
    eigenvectors: np.ndarray | None = None

    @property
    def smallest(self) -> float:
        return float(self.eigenvalues[-1])


@numba.njit(cache=True)
def _jacobi_kernel(a, v, target, max_sweeps):
    n = a.shape[0]
    sweeps = 0
    off = _off_norm(a)
    while off > target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                # the rotation annihilates (p, q); drop the rounding residue
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
        sweeps += 1
        off = _off_norm(a)
    return sweeps, off


@numba.njit(cache=True)
def _off_norm(a):
    n = a.shape[0]
    total = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                total += a[i, j] * a[i, j]
    return np.sqrt(total)


def jacobi_eigenvalues(m, *, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> SpectrumResult:
    """Symmetric eigendecomposition by classical cyclic Jacobi rotations.

    Sweeps visit the off-diagonal pairs in row order ``(0,1), (0,2), ...``
    and stop once the off-diagonal Frobenius norm is at most
    ``tol * ||m||_F``.

    Raises
    ------
    SolverError
        After ``max_sweeps`` sweeps without convergence.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    v = np.eye(n)
    target = tol * float(np.linalg.norm(a))
    sweeps, off = _jacobi_kernel(a, v, target, max_sweeps)
    if off > target:
        raise SolverError("Jacobi did not converge", off)

    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    w, v = w[order], v[:, order]
    perron = None
    if n > 0 and is_nonnegative(m) and is_irreducible(m):
        x = v[:, 0]
        perron = x * np.sign(x.sum())
    return SpectrumResult(
        eigenvalues=w,
        spectral_radius=float(np.max(np.abs(w))) if n else 0.0,
        perron_vector=perron,
        iterations=sweeps,
        residual=off,
        method="jacobi",
        eigenvectors=v,
    )


def power_spectral_radius(m, *, max_iter: int = POWER_MAX_ITER) -> SpectrumResult:
    """Perron root and vector of a nonnegative irreducible matrix.

    Starts from the all-ones vector. When some diagonal entry is zero the
    iteration runs on ``m + ||m||_inf I`` (and the shift is removed again) so
    that a periodic matrix, e.g. a bipartite adjacency matrix, still has a
    strictly dominant eigenvalue. Convergence requires a relative
    Rayleigh-quotient change below 1e-13 and residual ``||m x - lam x||``
    below ``1e-10 * lam``. After ``max_iter`` steps the Jacobi oracle answers
    instead and ``fallback`` is set.
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if not is_nonnegative(m):
        raise ValueError("power iteration requires a nonnegative matrix")
    if not is_irreducible(m):
        raise ValueError("power iteration requires an irreducible matrix")
    shift = float(np.abs(m).sum(axis=1).max()) if np.any(np.diag(m) == 0) else 0.0
    x = np.full(n, 1.0 / np.sqrt(n))
    mx = m @ x
    lam = float(x @ mx)
    res = float(np.linalg.norm(mx - lam * x))
    for k in range(1, max_iter + 1):
        y = mx + shift * x
        x = y / np.linalg.norm(y)
        mx = m @ x
        lam_new = float(x @ mx)
        res = float(np.linalg.norm(mx - lam_new * x))
        change = abs(lam_new - lam)
        lam = lam_new
        if change <= POWER_RQ_TOL * max(1.0, abs(lam)) and res <= POWER_RES_TOL * lam:
            return SpectrumResult(None, lam, x, k, res, "power")
    oracle = jacobi_eigenvalues(m)
    return SpectrumResult(
        None,
        float(oracle.eigenvalues[0]),
        oracle.perron_vector,
        max_iter,
        res,
        "power",
        fallback=True,
    )


def check_psd(m, spectrum: SpectrumResult | None = None) -> bool:
    """Smallest eigenvalue >= -1e-9 * max(1, ||m||_2), by the Jacobi oracle."""
    if spectrum is None:
        spectrum = jacobi_eigenvalues(m)
    return spectrum.smallest >= -1e-9 * max(1.0, spectrum.spectral_radius)


def majorization_check(spectrum, diagonal, rtol: float = 1e-9) -> bool:
    """True iff ``spectrum`` majorizes ``diagonal``.

    Both sequences are sorted nonincreasing first. Prefix sums of the
    spectrum must dominate and the totals must agree, up to ``rtol`` times
    the largest partial-sum magnitude.
    """
    a = np.sort(np.asarray(spectrum, dtype=float))[::-1]
    b = np.sort(np.asarray(diagonal, dtype=float))[::-1]
    if a.shape != b.shape:
        raise ValueError("length mismatch")
    ca, cb = np.cumsum(a), np.cumsum(b)
    tol = rtol * max(1.0, np.abs(ca).max(initial=0.0), np.abs(cb).max(initial=0.0))
    return bool(np.all(ca >= cb - tol) and abs(ca[-1] - cb[-1]) <= tol)
