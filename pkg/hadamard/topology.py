"""
hadamard/topology.py
--------------------
Greenlight – Butterfly Network Plan

Builds the butterfly plan shared by the optical and the digital receiver:
n stages, stage s pairing every mode k (bit s clear) with k | 2^s. Stages run
least-significant bit first. Within a pair, `lo` carries the "+" output of the
2×2 kernel and `hi` the "−" output.

Also exposes the device-count and depth formulas of the receiver:

    beamsplitter_count(n) = (2^n / 2) · log2 2^n = n · 2^(n-1)
    depth(n)              = log2 2^n             = n

Usage
-----
    from hadamard.topology import build_butterfly

    plan = build_butterfly(2)
    plan.pairs(1)        # [(0, 2), (1, 3)]
    plan.to_json()       # {"order": 2, "stages": [[[0, 1], [2, 3]], [[0, 2], [1, 3]]]}
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .code import DEFAULT_MAX_ORDER, HadamardDomainError, check_order

logger = logging.getLogger("greenlight.hadamard.topology")


# ---------------------------------------------------------------------------
# HadamardPlan
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HadamardPlan:
    """
    Immutable butterfly topology.

    stages[s] is a read-only int64 array of shape (2^(n-1), 2) whose rows are
    (lo, hi) pairs, sorted by lo.
    """
    order:  int
    stages: tuple[np.ndarray, ...]

    @property
    def modes(self) -> int:
        return 1 << self.order

    @property
    def depth(self) -> int:
        return len(self.stages)

    @property
    def pair_count(self) -> int:
        return sum(len(stage) for stage in self.stages)

    def lo(self, stage: int) -> np.ndarray:
        return self.stages[stage][:, 0]

    def hi(self, stage: int) -> np.ndarray:
        return self.stages[stage][:, 1]

    def pairs(self, stage: int) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in self.stages[stage]]

    def flat_pairs(self) -> list[tuple[int, int]]:
        return [p for s in range(self.depth) for p in self.pairs(s)]

    def to_dict(self) -> dict:
        return {
            "order":  self.order,
            "stages": [stage.tolist() for stage in self.stages],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def __repr__(self) -> str:
        return f"<HadamardPlan order={self.order} pairs={self.pair_count}>"


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def build_butterfly(n: int, cap: int = DEFAULT_MAX_ORDER) -> HadamardPlan:
    """Return the order-n butterfly plan. Raises HadamardDomainError for n = 0 or n > cap."""
    n = check_order(n, cap=cap)
    return _build_cached(n)


@lru_cache(maxsize=32)
def _build_cached(n: int) -> HadamardPlan:
    k = np.arange(1 << n, dtype=np.int64)
    stages = []
    for s in range(n):
        bit = 1 << s
        lo = k[(k & bit) == 0]
        stage = np.stack([lo, lo | bit], axis=1)
        stage.flags.writeable = False
        stages.append(stage)
    logger.debug("[Topology] Built order-%d plan: %d pairs", n, n * (1 << (n - 1)))
    return HadamardPlan(order=n, stages=tuple(stages))


# ---------------------------------------------------------------------------
# Counting formulas
# ---------------------------------------------------------------------------

def beamsplitter_count(n: int) -> int:
    """(2^n / 2) · log2 2^n beamsplitters (equivalently n · 2^(n-1))."""
    n = check_order(n, cap=64)
    return n * (1 << (n - 1))


def depth(n: int) -> int:
    """Network depth log2 2^n = n."""
    return check_order(n, cap=64)


__all__ = [
    "HadamardPlan",
    "HadamardDomainError",
    "build_butterfly",
    "beamsplitter_count",
    "depth",
]
