"""
digital/network.py
------------------
Greenlight – Digital Butterfly Receiver

Gate-level counterpart of the optical receiver: codewords become Plus/Minus
symbol vectors, every plan pair is fed through the logical beamsplitter, and
a correct codeword leaves exactly one non-Vacuum line at its own index.

Signal amplification is not modelled (a 2-bit symbol has no magnitude); this
is exact for codeword inputs because no stage ever pairs Vacuum with a
non-Vacuum symbol. Logic levels are ideal between stages.

Usage
-----
    from hadamard.topology import build_butterfly
    from digital.network   import encode_digital, propagate_digital, decode_digital

    plan = build_butterfly(2)
    decode_digital(propagate_digital(plan, encode_digital(3, 2)))   # (3, '+')
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from hadamard.code     import check_index, check_order, encode_codeword
from hadamard.topology import HadamardPlan

from .netlist import apply_stage
from .symbols import DigitalDomainError, Symbol, SymbolVector

logger = logging.getLogger("greenlight.digital.network")


class DigitalDecodeError(RuntimeError):
    """Raised when an output word does not carry exactly one non-Vacuum symbol."""


def encode_digital(j: int, n: int, invert: bool = False) -> SymbolVector:
    """Plus where (H_n)_{j,k} = +1, Minus otherwise; *invert* swaps the two."""
    check_order(n, minimum=0)
    check_index(j, n, "j")
    positive = encode_codeword(j, n) > 0
    if invert:
        positive = ~positive
    # Plus = 01, Minus = 10
    return SymbolVector(first=~positive, second=positive)


def propagate_digital(
    plan: HadamardPlan,
    word: SymbolVector,
    trace: Optional[list[SymbolVector]] = None,
) -> SymbolVector:
    """
    Apply the logical beamsplitter at every pair of every stage.

    If *trace* is a list, it receives the input and each stage's output.
    Raises NetlistConsistencyError if any stage would emit bit pattern 11.
    """
    if len(word) != plan.modes:
        raise DigitalDomainError(
            f"Input has {len(word)} lines, plan of order {plan.order} needs {plan.modes}"
        )
    first, second = word.first.copy(), word.second.copy()
    if trace is not None:
        trace.append(word)
    current = word
    for s in range(plan.depth):
        first, second = apply_stage(first, second, plan.lo(s), plan.hi(s))
        current = SymbolVector(first, second)
        if trace is not None:
            trace.append(current)
    logger.debug("[Digital] Propagated order-%d word: %d line(s) occupied",
                 plan.order, int(current.occupied.sum()))
    return current


def decode_digital(output: SymbolVector) -> tuple[int, str]:
    """Return (index, polarity '+'/'-') of the single non-Vacuum line."""
    hits = np.flatnonzero(output.occupied)
    if hits.size != 1:
        raise DigitalDecodeError(
            f"Expected exactly one non-Vacuum symbol, found {hits.size}"
        )
    index = int(hits[0])
    return index, "+" if output.second[index] else "-"


def electronic_latency(plan: HadamardPlan, and_delay: float) -> float:
    """depth(n) · and_delay: each logical beamsplitter is one AND gate deep."""
    if not and_delay > 0:
        raise ValueError(f"AND delay must be positive, got {and_delay}")
    return plan.depth * and_delay


def orphan_stages(trace: list[SymbolVector], plan: HadamardPlan) -> list[int]:
    """Stages whose input pairs a Vacuum line with a non-Vacuum line."""
    bad = []
    for s in range(plan.depth):
        occ = trace[s].occupied
        if np.any(occ[plan.lo(s)] != occ[plan.hi(s)]):
            bad.append(s)
    return bad


def trace_rows(trace: list[SymbolVector]) -> list[dict]:
    """Flatten a propagation trace into rows: stage, mode, symbol_bits."""
    return [
        {"stage": stage, "mode": mode, "symbol_bits": sym.value}
        for stage, vec in enumerate(trace)
        for mode, sym in enumerate(vec.symbols)
    ]


__all__ = [
    "DigitalDecodeError",
    "Symbol",
    "encode_digital",
    "propagate_digital",
    "decode_digital",
    "electronic_latency",
    "orphan_stages",
    "trace_rows",
]
