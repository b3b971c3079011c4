"""Proper orthogonal matrices of the composed frame rotation.

The composed rotation Q(phi, theta, varphi) is defined by its closed-form
entries (the form every downstream trigonometric identity assumes):

    Q = [[ cf ct cv + sf sv,  -cf ct sv + sf cv,  st cf ],
         [ -sf ct cv + cf sv,  sf ct sv + cf cv,  -sf st ],
         [ -st cv,             st sv,              ct   ]]

with cf = cos(phi), st = sin(theta), cv = cos(varphi) and so on.  In terms
of elementary factors this equals rot_z(-phi) @ rot_y(-theta) @ rot_z(varphi);
note the sign flips on the two leftmost factors relative to the naive
product reading.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEGENERACY_GATE

ORTHOGONALITY_TOL = 1e-12


class NotOrthogonalError(ValueError):
    """Input is not a proper orthogonal matrix within tolerance."""


def wrap_angle(x: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    return float(-((np.pi - x) % (2.0 * np.pi) - np.pi))


@dataclass(frozen=True)
class RotationAngles:
    """Rotation triple (phi, theta, varphi), all radians.

    Canonical ranges are phi in (-pi, pi], theta in [-pi/2, pi/2] and
    varphi in [0, pi).  The chart with those ranges reaches exactly the
    rotations with Q[2,2] >= 0; extraction from an arbitrary proper
    orthogonal matrix may therefore report |theta| > pi/2.
    """

    phi: float
    theta: float
    varphi: float

    def canonical(self) -> "RotationAngles":
        """Wrap into canonical ranges, using the Q-preserving equivalence
        (varphi, theta, phi) -> (varphi - pi, -theta, phi + pi)."""
        phi, theta, varphi = self.phi, self.theta, self.varphi
        varphi = varphi % (2.0 * np.pi)
        if varphi >= np.pi:
            varphi -= np.pi
            theta = -theta
            phi = phi + np.pi
        return RotationAngles(wrap_angle(phi), float(theta), float(varphi))


def rot_z(angle: float) -> np.ndarray:
    """Rotation about the Z axis (the printed Q_phi / Q_varphi factor)."""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rot_y(angle: float) -> np.ndarray:
    """Rotation about the Y axis with -sin in the (1,3) slot."""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, 0.0, -s], [0.0, 1.0, 0.0], [s, 0.0, c]])


def compose_rotation(angles: RotationAngles) -> np.ndarray:
    """Composed rotation Q from the closed-form entries above."""
    cf, sf = np.cos(angles.phi), np.sin(angles.phi)
    ct, st = np.cos(angles.theta), np.sin(angles.theta)
    cv, sv = np.cos(angles.varphi), np.sin(angles.varphi)
    return np.array(
        [
            [cf * ct * cv + sf * sv, -cf * ct * sv + sf * cv, st * cf],
            [-sf * ct * cv + cf * sv, sf * ct * sv + cf * cv, -sf * st],
            [-st * cv, st * sv, ct],
        ]
    )


def _check_proper_orthogonal(q: np.ndarray, tol: float):
    if np.linalg.norm(q.T @ q - np.eye(3)) > tol:
        raise NotOrthogonalError("matrix is not orthogonal within tolerance")
    if np.linalg.det(q) < 0.0:
        raise NotOrthogonalError("matrix is orthogonal but not proper (det < 0)")


def extract_rotation_angles(
    q,
    tol: float = ORTHOGONALITY_TOL,
    gimbal_gate: float = DEGENERACY_GATE,
) -> tuple[RotationAngles, bool]:
    """Invert compose_rotation.

    Returns (angles, gimbal_degenerate).  theta is read from Q[2,2],
    varphi from row 3 and phi from column 3.  At gimbal lock
    (|sin theta| <= gate) the in-plane rotation is absorbed into phi and
    varphi is set to 0; the flag reports that convention fired.
    """
    q = np.asarray(q, dtype=float).reshape(3, 3)
    _check_proper_orthogonal(q, tol)
    ct = q[2, 2]
    st = float(np.hypot(q[0, 2], q[1, 2]))
    gimbal = st <= gimbal_gate
    if not gimbal:
        theta = float(np.arctan2(st, ct))
        phi = float(np.arctan2(-q[1, 2], q[0, 2]))
        varphi = float(np.arctan2(q[2, 1], -q[2, 0]))
    else:
        varphi = 0.0
        if ct >= 0.0:
            theta = 0.0
            phi = float(np.arctan2(q[0, 1], q[0, 0]))
        else:
            theta = np.pi
            phi = float(np.arctan2(q[0, 1], -q[0, 0]))
    return RotationAngles(phi, theta, varphi).canonical(), gimbal
