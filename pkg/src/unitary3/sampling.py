"""Deterministic random sampling: SplitMix64 stream, Gaussians, Haar unitaries.

The generator is a plain SplitMix64 counter PRNG (64-bit state, golden-ratio
increment) feeding Box-Muller for standard normals.  Both pieces use only
integer arithmetic and libm calls, so a fixed seed yields the identical
sample stream on every platform; golden files generated once stay valid.
"""
from __future__ import annotations

import numpy as np

from .parametrization import UnitaryParams
from .rotations import RotationAngles

ALGORITHM = "splitmix64+box-muller"

_MASK = (1 << 64) - 1


class SeededGenerator:
    """SplitMix64 stream with Box-Muller Gaussian output."""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK
        self._state = self.seed
        self._spare = None

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_uint64() >> 11) * (1.0 / (1 << 53))

    def gauss(self) -> float:
        """Standard normal via Box-Muller (pairs cached)."""
        if self._spare is not None:
            x, self._spare = self._spare, None
            return x
        u1 = self.uniform()
        while u1 <= 0.0:
            u1 = self.uniform()
        u2 = self.uniform()
        r = np.sqrt(-2.0 * np.log(u1))
        self._spare = float(r * np.sin(2.0 * np.pi * u2))
        return float(r * np.cos(2.0 * np.pi * u2))

    def complex_gauss_matrix(self) -> np.ndarray:
        m = np.empty((3, 3), dtype=complex)
        for i in range(3):
            for j in range(3):
                m[i, j] = complex(self.gauss(), self.gauss())
        return m


def generate_haar_unitary(g: SeededGenerator) -> np.ndarray:
    """Haar-distributed 3x3 unitary.

    QR-orthonormalize a complex Gaussian matrix, then absorb the phases of
    the triangular factor's diagonal so it is real positive; without that
    fix the QR convention would bias the distribution.
    """
    q, r = np.linalg.qr(g.complex_gauss_matrix())
    d = r.diagonal().copy()
    d = d / np.abs(d)
    return q * d


def random_params(g: SeededGenerator, margin: float = 0.0) -> UnitaryParams:
    """Parameter tuple drawn uniformly from the chart.

    ``margin`` shrinks every bounded range away from its degeneracy
    boundaries (chi = 0 and +-pi/4, mu = 0 and pi/2, theta = +-pi/2).
    """

    def spread(lo, hi):
        return lo + margin + (hi - lo - 2.0 * margin) * g.uniform()

    def phase():
        return -np.pi + 2.0 * np.pi * g.uniform()

    half = np.pi / 4
    chi = spread(-half, half)
    while abs(chi) < margin:
        chi = spread(-half, half)
    return UnitaryParams(
        rotation=RotationAngles(
            phi=phase(),
            theta=spread(-np.pi / 2, np.pi / 2),
            varphi=spread(0.0, np.pi),
        ),
        chi=float(chi),
        mu=spread(0.0, np.pi / 2),
        alpha1=phase(),
        alpha2=phase(),
        alpha3=phase(),
        beta2=phase(),
    )


def random_psd_hermitian(g: SeededGenerator) -> np.ndarray:
    """Hermitian positive semidefinite matrix A A† from a Gaussian A."""
    a = g.complex_gauss_matrix()
    return a @ a.conj().T


def random_hermitian(g: SeededGenerator) -> np.ndarray:
    """Hermitian (not necessarily PSD) matrix (A + A†)/2."""
    a = g.complex_gauss_matrix()
    return 0.5 * (a + a.conj().T)
