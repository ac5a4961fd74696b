"""
digital/symbols.py
------------------
Greenlight – Two-Bit Symbols

The digital receiver represents each optical mode by two logic lines:

    Vacuum  ↦ 00
    Plus    ↦ 01     (|α⟩)
    Minus   ↦ 10     (|−α⟩)

The pattern 11 is not a symbol. A SymbolVector stores the two lines as
separate boolean arrays (`first`, `second`) so gates can be evaluated over a
whole stage at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from hadamard.code import order_of_length


class DigitalDomainError(ValueError):
    """Raised for malformed symbol vectors or plan/vector size mismatches."""


class NetlistConsistencyError(RuntimeError):
    """Raised when a gate evaluation produces the non-symbol bit pattern 11."""


class Symbol(str, Enum):
    VACUUM = "00"
    PLUS   = "01"
    MINUS  = "10"

    @property
    def bits(self) -> tuple[int, int]:
        return int(self.value[0]), int(self.value[1])

    @classmethod
    def from_bits(cls, first: int, second: int) -> "Symbol":
        if first and second:
            raise NetlistConsistencyError("Bit pattern 11 is not a valid symbol")
        return cls(f"{int(bool(first))}{int(bool(second))}")


@dataclass(frozen=True, eq=False)
class SymbolVector:
    """2^n symbols stored bit-parallel as two read-only boolean lines."""
    first:  np.ndarray
    second: np.ndarray

    def __post_init__(self) -> None:
        first = np.array(self.first, dtype=bool)
        second = np.array(self.second, dtype=bool)
        if first.ndim != 1 or first.shape != second.shape or first.size == 0:
            raise DigitalDomainError(
                f"Symbol lines must be equal-length non-empty 1-D arrays, got {first.shape} / {second.shape}"
            )
        try:
            order_of_length(first.size)
        except ValueError as exc:
            raise DigitalDomainError(str(exc)) from exc
        if np.any(first & second):
            bad = int(np.flatnonzero(first & second)[0])
            raise NetlistConsistencyError(f"Line {bad} carries bit pattern 11")
        first.flags.writeable = False
        second.flags.writeable = False
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    @classmethod
    def from_symbols(cls, symbols: Iterable[Symbol]) -> "SymbolVector":
        bits = [Symbol(s).bits for s in symbols]
        return cls([b[0] for b in bits], [b[1] for b in bits])

    @property
    def symbols(self) -> list[Symbol]:
        return [Symbol.from_bits(a, b) for a, b in zip(self.first, self.second)]

    @property
    def occupied(self) -> np.ndarray:
        """Boolean mask of non-Vacuum lines."""
        return self.first | self.second

    def __len__(self) -> int:
        return self.first.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolVector):
            return NotImplemented
        return bool(np.array_equal(self.first, other.first) and np.array_equal(self.second, other.second))

    def __repr__(self) -> str:
        return f"SymbolVector({' '.join(s.value for s in self.symbols)})"
