"""
optical/beamsplitter.py
-----------------------
Greenlight – Lossless Two-Mode Beamsplitter

A beamsplitter with transmittance T, reflectance R (R + T = 1) and phase φ
acts on the coherent amplitudes of its two input ports as

    (b1, b2) = U_BS · (a1, a2),   U_BS = [[ √T,          e^{iφ}√R ],
                                          [ -e^{-iφ}√R,  √T       ]]

Coherent states |α⟩ are tracked by their complex amplitude α only; the
photon-number expansion is never materialised.

A "50:50" splitter is R = T = ½ (√R = √T = 1/√2). φ = 0 gives the real
Hadamard-like kernel; φ = π/2 gives the symmetric splitter [[1, i], [i, 1]]/√2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

RT_TOLERANCE = 1e-12


class BeamsplitterSpecError(ValueError):
    """Raised when a beamsplitter spec violates R + T = 1 or the [0, 1] range."""


def check_amplitude(value: complex) -> complex:
    """Return *value* as a finite complex amplitude (units √photons)."""
    alpha = complex(value)
    if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
        raise ValueError(f"Coherent amplitude must be finite, got {value!r}")
    return alpha


@dataclass(frozen=True)
class BeamsplitterSpec:
    transmittance: float = 0.5
    reflectance:   float = 0.5
    phase:         float = 0.0          # radians

    def __post_init__(self) -> None:
        for label, v in (("transmittance", self.transmittance), ("reflectance", self.reflectance)):
            if not 0.0 <= v <= 1.0:
                raise BeamsplitterSpecError(f"{label} {v} outside [0, 1]")
        if abs(self.transmittance + self.reflectance - 1.0) > RT_TOLERANCE:
            raise BeamsplitterSpecError(
                f"R + T must equal 1, got {self.reflectance} + {self.transmittance}"
            )
        if not math.isfinite(self.phase):
            raise BeamsplitterSpecError(f"phase must be finite, got {self.phase}")

    @classmethod
    def balanced(cls, phase: float = 0.0) -> "BeamsplitterSpec":
        """50:50 splitter with the given phase."""
        return cls(0.5, 0.5, phase)

    def matrix(self) -> np.ndarray:
        t = math.sqrt(self.transmittance)
        r = math.sqrt(self.reflectance)
        return np.array(
            [[t, cmath.exp(1j * self.phase) * r],
             [-cmath.exp(-1j * self.phase) * r, t]],
            dtype=np.complex128,
        )


HADAMARD_SPEC  = BeamsplitterSpec.balanced(0.0)
SYMMETRIC_SPEC = BeamsplitterSpec.balanced(math.pi / 2)


def beamsplitter_apply(spec: BeamsplitterSpec, a1: complex, a2: complex) -> tuple[complex, complex]:
    """Apply U_BS to the port amplitudes (a1, a2); returns (b1, b2)."""
    a1 = check_amplitude(a1)
    a2 = check_amplitude(a2)
    u = spec.matrix()
    b1 = complex(u[0, 0] * a1 + u[0, 1] * a2)
    b2 = complex(u[1, 0] * a1 + u[1, 1] * a2)
    return b1, b2
