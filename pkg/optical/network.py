"""
optical/network.py
------------------
Greenlight – Optical Butterfly Receiver

Encodes Hadamard codewords as BPSK coherent states, propagates them through
the beamsplitter butterfly, and decodes by locating the mode that collects
the codeword energy.

With the default 50:50, φ = 0 splitter every codeword j concentrates into a
single output mode j carrying amplitude 2^{n/2}·α (up to sign); all other
modes go dark.

Usage
-----
    from hadamard.topology  import build_butterfly
    from optical.network    import encode_optical, propagate_optical, decode_optical

    plan = build_butterfly(3)
    out  = propagate_optical(plan, encode_optical(5, 3, 1.0))
    decode_optical(out)          # (5, 1.0)

Phase correction
----------------
`phase_correction=True` wraps every splitter with a phase e^{-iφ} on the hi
input and -e^{iφ} on the hi output. The wrapped kernel is exactly
(1/√2)[[1, 1], [1, -1]], so the network output equals
fwht_reference(x) / 2^{n/2} for any balanced spec, including φ = π/2.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from hadamard.code     import check_index, check_order, encode_codeword, order_of_length
from hadamard.topology import HadamardPlan

from .beamsplitter import HADAMARD_SPEC, BeamsplitterSpec, check_amplitude

logger = logging.getLogger("greenlight.optical.network")


class OpticalDomainError(ValueError):
    """Raised for malformed mode vectors or plan/vector size mismatches."""


class NoSignalError(RuntimeError):
    """Raised when decoding a mode vector that carries no energy."""


# ---------------------------------------------------------------------------
# ModeVector
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ModeVector:
    """Coherent amplitudes across 2^n optical modes (read-only complex128)."""
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.size == 0:
            raise OpticalDomainError(f"Mode vector must be a non-empty 1-D array, got shape {amps.shape}")
        try:
            order_of_length(amps.size)
        except ValueError as exc:
            raise OpticalDomainError(str(exc)) from exc
        if not np.all(np.isfinite(amps)):
            raise OpticalDomainError("Mode vector contains NaN or Inf amplitudes")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def order(self) -> int:
        return self.amplitudes.size.bit_length() - 1

    def __len__(self) -> int:
        return self.amplitudes.size

    @property
    def mean_photon_numbers(self) -> np.ndarray:
        """|α_k|² per mode."""
        return np.abs(self.amplitudes) ** 2

    @property
    def energy(self) -> float:
        """Total mean photon number Σ|α_k|²."""
        return float(self.mean_photon_numbers.sum())


# ---------------------------------------------------------------------------
# Encoding / propagation / decoding
# ---------------------------------------------------------------------------

def encode_optical(j: int, n: int, alpha: complex) -> ModeVector:
    """BPSK codeword j: amplitude k is α·(H_n)_{j,k}."""
    check_order(n, minimum=0)
    check_index(j, n, "j")
    alpha = check_amplitude(alpha)
    return ModeVector(alpha * encode_codeword(j, n).astype(np.complex128))


def propagate_optical(
    plan: HadamardPlan,
    mode_vector: ModeVector,
    spec: BeamsplitterSpec = HADAMARD_SPEC,
    phase_correction: bool = False,
    trace: Optional[list[ModeVector]] = None,
) -> ModeVector:
    """
    Apply the splitter at every (lo, hi) pair, stage by stage.

    If *trace* is a list, it receives the input followed by each stage output.
    """
    if len(mode_vector) != plan.modes:
        raise OpticalDomainError(
            f"Input has {len(mode_vector)} modes, plan of order {plan.order} needs {plan.modes}"
        )
    u = spec.matrix()
    pre = cmath.exp(-1j * spec.phase) if phase_correction else 1.0
    post = -cmath.exp(1j * spec.phase) if phase_correction else 1.0

    x = mode_vector.amplitudes.copy()
    if trace is not None:
        trace.append(mode_vector)
    for s in range(plan.depth):
        lo, hi = plan.lo(s), plan.hi(s)
        a = x[lo]
        b = x[hi] * pre
        x[lo] = u[0, 0] * a + u[0, 1] * b
        x[hi] = (u[1, 0] * a + u[1, 1] * b) * post
        if trace is not None:
            trace.append(ModeVector(x))

    out = ModeVector(x)
    logger.debug(
        "[Optical] Propagated order-%d vector: energy in %.6e, out %.6e",
        plan.order, mode_vector.energy, out.energy,
    )
    return out


def decode_optical(output: ModeVector) -> tuple[int, float]:
    """Return (argmax mode, its share of total energy); ties go to the lowest index."""
    energies = output.mean_photon_numbers
    total = float(energies.sum())
    if total == 0.0:
        raise NoSignalError("Mode vector carries no energy")
    index = int(np.argmax(energies))
    return index, float(energies[index] / total)


def trace_rows(trace: list[ModeVector]) -> list[dict]:
    """Flatten a propagation trace into rows: stage, mode, re, im, energy."""
    rows = []
    for stage, vec in enumerate(trace):
        for mode, amp in enumerate(vec.amplitudes):
            rows.append({
                "stage":  stage,
                "mode":   mode,
                "re":     float(amp.real),
                "im":     float(amp.imag),
                "energy": float(abs(amp) ** 2),
            })
    return rows
