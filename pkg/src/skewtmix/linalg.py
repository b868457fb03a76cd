"""Dense symmetric positive definite matrix helpers for small dimensions.

Scale matrices in this package are tiny (d up to roughly 10), so the
factorizations are written out directly. numpy.linalg is left untouched
here on purpose: the tests use it as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "NotPositiveDefiniteError",
    "SpdMatrix",
    "cholesky",
    "log_det",
    "solve",
    "quad_form",
    "sqrt_spd",
    "solve_lower_batch",
    "solve_upper_batch",
]

_JACOBI_SWEEPS = 60
_JACOBI_TOL = 1e-14


class NotPositiveDefiniteError(ValueError):
    pass


@dataclass(frozen=True)
class SpdMatrix:
    """Symmetric positive definite matrix.

    Input is symmetrized by averaging with its transpose so that matrices
    round-tripped through text configs stay usable. Positive definiteness
    is established eagerly through the Cholesky factorization.
    """

    entries: np.ndarray
    dim: int = field(init=False)

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must be finite")
        sym = 0.5 * (arr + arr.T)
        sym.setflags(write=False)
        object.__setattr__(self, "entries", sym)
        object.__setattr__(self, "dim", sym.shape[0])
        object.__setattr__(self, "_chol", _cholesky_factor(sym))

    @property
    def cholesky_factor(self) -> np.ndarray:
        return self._chol


def _cholesky_factor(a: np.ndarray) -> np.ndarray:
    d = a.shape[0]
    lower = np.zeros_like(a)
    for j in range(d):
        s = a[j, j] - lower[j, :j] @ lower[j, :j]
        if not (s > 0.0) or not np.isfinite(s):
            raise NotPositiveDefiniteError("not positive definite")
        lower[j, j] = np.sqrt(s)
        if j + 1 < d:
            lower[j + 1 :, j] = (a[j + 1 :, j] - lower[j + 1 :, :j] @ lower[j, :j]) / lower[j, j]
    lower.setflags(write=False)
    return lower


def _as_spd(s) -> SpdMatrix:
    return s if isinstance(s, SpdMatrix) else SpdMatrix(np.asarray(s, dtype=float))


def cholesky(s) -> np.ndarray:
    """Lower triangular L with L L' equal to the input matrix."""
    return _as_spd(s).cholesky_factor


def log_det(s) -> float:
    """Log determinant via the Cholesky diagonal."""
    l = _as_spd(s).cholesky_factor
    return float(2.0 * np.sum(np.log(np.diag(l))))


def solve_lower_batch(lower: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve L y = b for lower triangular L; b has shape (..., d)."""
    d = lower.shape[0]
    y = np.empty_like(b, dtype=float)
    for i in range(d):
        acc = b[..., i]
        if i:
            acc = acc - y[..., :i] @ lower[i, :i]
        y[..., i] = acc / lower[i, i]
    return y


def solve_upper_batch(lower: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Solve L' x = y for lower triangular L; y has shape (..., d)."""
    d = lower.shape[0]
    x = np.empty_like(y, dtype=float)
    for i in range(d - 1, -1, -1):
        acc = y[..., i]
        if i + 1 < d:
            acc = acc - x[..., i + 1 :] @ lower[i + 1 :, i]
        x[..., i] = acc / lower[i, i]
    return x


def solve(s, b) -> np.ndarray:
    """Solve S x = b for SPD S; b may be a vector or a batch (..., d)."""
    spd = _as_spd(s)
    b = np.asarray(b, dtype=float)
    if b.shape[-1] != spd.dim:
        raise ValueError(f"dimension mismatch: matrix is {spd.dim}x{spd.dim}, rhs has {b.shape[-1]}")
    l = spd.cholesky_factor
    return solve_upper_batch(l, solve_lower_batch(l, b))


def quad_form(s, z) -> float | np.ndarray:
    """Quadratic form z' S^{-1} z, nonnegative; z may be batched (..., d)."""
    spd = _as_spd(s)
    z = np.asarray(z, dtype=float)
    if z.shape[-1] != spd.dim:
        raise ValueError(f"dimension mismatch: matrix is {spd.dim}x{spd.dim}, vector has {z.shape[-1]}")
    half = solve_lower_batch(spd.cholesky_factor, z)
    q = np.sum(half * half, axis=-1)
    return float(q) if q.ndim == 0 else q


def _jacobi_eigh(a: np.ndarray):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix."""
    d = a.shape[0]
    m = np.array(a, dtype=float)
    v = np.eye(d)
    scale = np.max(np.abs(m)) or 1.0
    for _ in range(_JACOBI_SWEEPS):
        off = 0.0
        for p in range(d - 1):
            for q in range(p + 1, d):
                off = max(off, abs(m[p, q]))
                if abs(m[p, q]) <= _JACOBI_TOL * scale:
                    continue
                theta = 0.5 * (m[q, q] - m[p, p]) / m[p, q]
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta != 0.0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(d)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                m = rot.T @ m @ rot
                v = v @ rot
        if off <= _JACOBI_TOL * scale:
            break
    return np.diag(m).copy(), v


def sqrt_spd(s) -> SpdMatrix:
    """Symmetric square root M with M M equal to the input matrix."""
    spd = _as_spd(s)
    eigvals, eigvecs = _jacobi_eigh(spd.entries)
    if np.any(eigvals <= 0.0):
        raise NotPositiveDefiniteError("not positive definite")
    root = (eigvecs * np.sqrt(eigvals)) @ eigvecs.T
    return SpdMatrix(0.5 * (root + root.T))
