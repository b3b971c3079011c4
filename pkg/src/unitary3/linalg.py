"""Fixed-size complex linear algebra: 3x3 Hermitian eigensolver and helpers.

Everything operates on plain numpy arrays (shape (3,) complex vectors and
(3, 3) complex matrices). All functions are pure; nothing here mutates its
inputs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Default gates, overridable per call.
UNITARITY_TOL = 1e-12
HERMITICITY_TOL = 1e-12
DEGENERACY_GATE = 1e-10

_JACOBI_OFF_TARGET = 1e-14
_JACOBI_MAX_SWEEPS = 100


class NotHermitianError(ValueError):
    """Input matrix is not Hermitian within tolerance."""


class NoConvergenceError(RuntimeError):
    """Jacobi iteration failed to reach the off-diagonal target."""


def as_vector3(v) -> np.ndarray:
    v = np.ascontiguousarray(v, dtype=complex).reshape(3)
    if not np.all(np.isfinite(v.view(float))):
        raise ValueError("vector has non-finite entries")
    return v


def as_matrix3(m) -> np.ndarray:
    m = np.ascontiguousarray(m, dtype=complex).reshape(3, 3)
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix has non-finite entries")
    return m


def unitarity_distance(m) -> float:
    """Frobenius norm of M†M - I."""
    m = as_matrix3(m)
    return float(np.linalg.norm(m.conj().T @ m - np.eye(3)))


def hermiticity_distance(m) -> float:
    """Frobenius norm of M - M†."""
    m = as_matrix3(m)
    return float(np.linalg.norm(m - m.conj().T))


def is_unitary(m, tol: float = UNITARITY_TOL) -> bool:
    return unitarity_distance(m) <= tol


def is_hermitian(m, tol: float = HERMITICITY_TOL) -> bool:
    return hermiticity_distance(m) <= tol


@dataclass(frozen=True)
class StructureReport:
    """Diagnostic distances and scalar invariants of a 3x3 complex matrix."""

    unitarity_distance: float
    hermiticity_distance: float
    determinant: complex
    trace: complex


def matrix_norms_and_checks(m) -> StructureReport:
    m = as_matrix3(m)
    return StructureReport(
        unitarity_distance=unitarity_distance(m),
        hermiticity_distance=hermiticity_distance(m),
        determinant=complex(np.linalg.det(m)),
        trace=complex(np.trace(m)),
    )


def outer_product(v) -> np.ndarray:
    """Conjugate outer product v v†, a Hermitian PSD matrix of rank <= 1."""
    v = as_vector3(v)
    return np.outer(v, v.conj())


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (nonincreasing) and matching orthonormal eigenvectors.

    ``values[i]`` pairs with column ``vectors[:, i]``.  ``normalized`` holds
    values divided by the input trace (all-zero for a zero-trace input).
    """

    values: np.ndarray
    normalized: np.ndarray
    vectors: np.ndarray


def _jacobi_rotate(a, v, p, q):
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
    if tau != 0.0:
        t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau))
    else:
        t = 1.0
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    j = np.eye(3, dtype=complex)
    j[p, p] = c
    j[q, q] = c
    j[p, q] = s * phase
    j[q, p] = -s * np.conj(phase)
    a[:] = j.conj().T @ a @ j
    v[:] = v @ j


def _fix_column_phases(vectors: np.ndarray) -> np.ndarray:
    """Make each column's largest-magnitude component real and positive."""
    out = vectors.copy()
    for i in range(3):
        col = out[:, i]
        k = int(np.argmax(np.abs(col)))
        z = col[k]
        if abs(z) > 0.0:
            out[:, i] = col * (np.conj(z) / abs(z))
    return out


def eig_hermitian3(r, tol: float = HERMITICITY_TOL) -> EigenDecomposition:
    """Diagonalize a 3x3 Hermitian matrix with cyclic complex Jacobi sweeps.

    Eigenvalues come out sorted nonincreasing; eigenvectors are orthonormal
    with a deterministic phase (largest component real positive).

    Raises NotHermitianError if ``r`` fails the Hermiticity gate and
    NoConvergenceError if the off-diagonal norm does not reach
    1e-14 * ||r||_F within 100 sweeps.
    """
    r = as_matrix3(r)
    if hermiticity_distance(r) > tol:
        raise NotHermitianError(
            f"matrix is not Hermitian: ||R - R'|| = {hermiticity_distance(r):.3e}"
        )
    a = 0.5 * (r + r.conj().T)
    scale = float(np.linalg.norm(a))
    vec = np.eye(3, dtype=complex)
    if scale > 0.0:
        for _ in range(_JACOBI_MAX_SWEEPS):
            off = np.sqrt(2.0) * np.sqrt(
                abs(a[0, 1]) ** 2 + abs(a[0, 2]) ** 2 + abs(a[1, 2]) ** 2
            )
            if off <= _JACOBI_OFF_TARGET * scale:
                break
            for p, q in ((0, 1), (0, 2), (1, 2)):
                _jacobi_rotate(a, vec, p, q)
        else:
            raise NoConvergenceError("Jacobi sweeps did not converge")
    values = a.diagonal().real.copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vec = _fix_column_phases(vec[:, order])
    trace = float(np.trace(r).real)
    if abs(trace) > np.finfo(float).tiny:
        normalized = values / trace
    else:
        normalized = np.zeros(3)
    return EigenDecomposition(values=values, normalized=normalized, vectors=vec)
