"""3D Jones vectors: intrinsic form, canonical basis, orthonormal completion.

A fully polarized state in its intrinsic frame is

    sqrt(I) * exp(i*gamma) * (cos chi, i sin chi, 0)

where chi in [-pi/4, pi/4] is the ellipticity angle (sign = handedness) and
gamma a global phase.  The same state in an arbitrary frame is obtained by
applying the composed rotation Q.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rotations import RotationAngles, compose_rotation


@dataclass(frozen=True)
class EllipseParams:
    """Intensity, global phase and ellipticity angle of a pure state."""

    intensity: float = 1.0
    gamma: float = 0.0
    chi: float = 0.0

    def __post_init__(self):
        if self.intensity < 0.0:
            raise ValueError("intensity must be nonnegative")
        if abs(self.chi) > np.pi / 4 + 1e-12:
            raise ValueError("chi must lie in [-pi/4, pi/4]")


@dataclass(frozen=True)
class CompletionParams:
    """Mixing angle mu in [0, pi/2] and phases for the completion vectors.

    The phases are kept in the full circle (-pi, pi]; half-range phases do
    not reach every unit vector orthogonal to the reference state.
    """

    mu: float
    alpha2: float = 0.0
    alpha3: float = 0.0
    beta2: float = 0.0

    def __post_init__(self):
        if not -1e-12 <= self.mu <= np.pi / 2 + 1e-12:
            raise ValueError("mu must lie in [0, pi/2]")


def intrinsic_jones(p: EllipseParams) -> np.ndarray:
    """Jones vector of a pure state in its own intrinsic frame."""
    amp = np.sqrt(p.intensity) * np.exp(1j * p.gamma)
    return amp * np.array([np.cos(p.chi), 1j * np.sin(p.chi), 0.0])


def jones_in_frame(p: EllipseParams, r: RotationAngles) -> np.ndarray:
    """Jones vector of the state re-expressed in an arbitrary frame."""
    return compose_rotation(r) @ intrinsic_jones(p)


def canonical_basis(chi: float, gammas=(0.0, 0.0, 0.0)):
    """Orthonormal basis (n1, n2, n3) built in the intrinsic frame of n1.

    n2 is the coplanar state with opposite ellipticity, n3 is linear along
    the normal of the polarization plane.  Each carries its own phase.
    """
    g1, g2, g3 = gammas
    c, s = np.cos(chi), np.sin(chi)
    n1 = np.exp(1j * g1) * np.array([c, 1j * s, 0.0])
    n2 = np.exp(1j * g2) * np.array([1j * s, c, 0.0])
    n3 = np.exp(1j * g3) * np.array([0.0, 0.0, 1.0])
    return n1, n2, n3


def completion_v2(chi: float, c: CompletionParams) -> np.ndarray:
    """Generic unit vector orthogonal to n1: cos(mu) e^{i a2} n2 + sin(mu) e^{i b2} n3."""
    cx, sx = np.cos(chi), np.sin(chi)
    cm, sm = np.cos(c.mu), np.sin(c.mu)
    return np.array(
        [
            1j * np.exp(1j * c.alpha2) * cm * sx,
            np.exp(1j * c.alpha2) * cm * cx,
            np.exp(1j * c.beta2) * sm,
        ]
    )


def completion_v3(chi: float, c: CompletionParams) -> np.ndarray:
    """Unit vector completing (n1, v2) to an orthonormal triple.

    Unique up to the phase alpha3; the third component carries the
    combination beta2 - alpha2 + alpha3.
    """
    cx, sx = np.cos(chi), np.sin(chi)
    cm, sm = np.cos(c.mu), np.sin(c.mu)
    delta = c.beta2 - c.alpha2 + c.alpha3
    return np.array(
        [
            1j * np.exp(1j * c.alpha3) * sm * sx,
            np.exp(1j * c.alpha3) * sm * cx,
            -np.exp(1j * delta) * cm,
        ]
    )
