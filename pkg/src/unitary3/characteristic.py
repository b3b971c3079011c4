"""Characteristic decomposition of 3x3 coherency matrices and regularity.

A positive semidefinite Hermitian R with positive trace splits as

    R = tr(R) * (P1 * Rp_hat + (P2 - P1) * Rm_hat + (1 - P2) * Ru_hat)

where Rp_hat is the pure projector onto the top eigenvector, Rm_hat is the
half-projector onto the top-two eigenspace, Ru_hat = I/3, and the purity
indices are P1 = l1 - l2, P2 = l1 + l2 - 2*l3 in terms of the normalized
eigenvalues.  R is regular when Rm_hat is a real matrix, which happens
exactly when the ellipticity angle chi_m of its intrinsic form vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    EigenDecomposition,
    HERMITICITY_TOL,
    NotHermitianError,
    as_matrix3,
    eig_hermitian3,
    is_unitary,
    outer_product,
)
from .parametrization import normalize_global_phase, recover_first_column

REGULARITY_GATE = 1e-8
_PSD_TOL = 1e-10


class ZeroTraceError(ValueError):
    """Coherency matrix has (numerically) zero trace: nothing to decompose."""


class NotPositiveSemidefiniteError(ValueError):
    """Coherency matrix has a significantly negative eigenvalue."""


class NotUnitaryInputError(ValueError):
    """Matrix expected to be unitary."""


@dataclass(frozen=True)
class PurityIndices:
    """Indices of polarimetric purity, 0 <= P1 <= P2 <= 1."""

    P1: float
    P2: float


@dataclass(frozen=True)
class CharacteristicComponents:
    """Trace-1 components of the characteristic decomposition.

    ``coefficients`` holds (P1, P2 - P1, 1 - P2); the convex combination of
    the three hatted components scaled by ``traceR`` reassembles the input.
    """

    traceR: float
    Rp_hat: np.ndarray
    Rm_hat: np.ndarray
    Ru_hat: np.ndarray
    purity: PurityIndices
    coefficients: tuple[float, float, float]

    def reconstruct(self) -> np.ndarray:
        c1, c2, c3 = self.coefficients
        return self.traceR * (c1 * self.Rp_hat + c2 * self.Rm_hat + c3 * self.Ru_hat)


@dataclass(frozen=True)
class RegularityReport:
    """Spectrum of Re(Rm_hat), the middle ellipticity angle, and the verdict."""

    m1_hat: float
    m2_hat: float
    m3_hat: float
    chi_m: float
    regular: bool
    im_norm: float


def purity_indices(e: EigenDecomposition) -> PurityIndices:
    """P1 and P2 from a normalized, nonincreasing eigenvalue triple."""
    l1, l2, l3 = e.normalized
    return PurityIndices(P1=float(l1 - l2), P2=float(l1 + l2 - 2.0 * l3))


def characteristic_decomposition(
    r, tol: float = HERMITICITY_TOL
) -> CharacteristicComponents:
    """Split a Hermitian PSD matrix into pure, middle and unpolarized parts.

    Raises NotHermitianError, ZeroTraceError or
    NotPositiveSemidefiniteError when the preconditions fail.
    """
    r = as_matrix3(r)
    e = eig_hermitian3(r, tol=tol)
    trace = float(np.trace(r).real)
    if trace <= np.finfo(float).tiny:
        raise ZeroTraceError(f"trace {trace:.3e} is not positive")
    if e.values[2] < -_PSD_TOL * trace:
        raise NotPositiveSemidefiniteError(
            f"smallest eigenvalue {e.values[2]:.3e} is negative"
        )
    u1, u2 = e.vectors[:, 0], e.vectors[:, 1]
    rp = outer_product(u1)
    rm = 0.5 * (rp + outer_product(u2))
    ru = np.eye(3, dtype=complex) / 3.0
    p = purity_indices(e)
    return CharacteristicComponents(
        traceR=trace,
        Rp_hat=rp,
        Rm_hat=rm,
        Ru_hat=ru,
        purity=p,
        coefficients=(p.P1, p.P2 - p.P1, 1.0 - p.P2),
    )


def middle_component(u) -> np.ndarray:
    """Half-projector onto the span of the first two columns of a unitary."""
    u = as_matrix3(u)
    if not is_unitary(u):
        raise NotUnitaryInputError("middle_component expects a unitary matrix")
    return 0.5 * (outer_product(u[:, 0]) + outer_product(u[:, 1]))


def u3_form(
    chi: float,
    mu: float,
    alpha1: float = 0.0,
    alpha2: float = 0.0,
    alpha3: float = 0.0,
    beta2: float = 0.0,
) -> np.ndarray:
    """Unitary with the pure state as its third column.

    Columns are (v2, v3, n1): the two completion vectors first, then the
    intrinsic state.  This is the column ordering whose middle component
    is intrinsic_middle(chi) for every (mu, alpha2, alpha3, beta2), since
    v2 v2† + v3 v3† = I - n1 n1†.
    """
    from .jones import CompletionParams, completion_v2, completion_v3

    c = CompletionParams(mu=mu, alpha2=alpha2, alpha3=alpha3, beta2=beta2)
    n1 = np.exp(1j * alpha1) * np.array([np.cos(chi), 1j * np.sin(chi), 0.0])
    return np.column_stack([completion_v2(chi, c), completion_v3(chi, c), n1])


def intrinsic_middle(chi: float) -> np.ndarray:
    """Middle component in the intrinsic frame; depends on chi alone."""
    c, s = np.cos(chi), np.sin(chi)
    return 0.5 * np.array(
        [
            [s * s, 1j * c * s, 0.0],
            [-1j * c * s, c * c, 0.0],
            [0.0, 0.0, 1.0],
        ]
    )


def _middle_chi(rm: np.ndarray) -> float:
    """Ellipticity angle of a middle component, sign included.

    The kernel of Rm_hat is spanned by the rotated intrinsic state
    (cos chi, i sin chi, 0), so the first-column recovery machinery reads
    chi straight off the null eigenvector.
    """
    kernel = eig_hermitian3(rm).vectors[:, 2]
    _, eps, circular = normalize_global_phase(kernel)
    chi, _, _ = recover_first_column(eps, circular=circular)
    return chi


def regularity_report(r, gate: float = REGULARITY_GATE) -> RegularityReport:
    """Regularity analysis of the middle component of a coherency matrix."""
    rm = characteristic_decomposition(r).Rm_hat
    spectrum = eig_hermitian3(rm.real.astype(complex)).values
    chi_m = _middle_chi(rm)
    return RegularityReport(
        m1_hat=float(spectrum[0]),
        m2_hat=float(spectrum[1]),
        m3_hat=float(spectrum[2]),
        chi_m=chi_m,
        regular=abs(chi_m) <= gate,
        im_norm=float(np.linalg.norm(rm.imag)),
    )
