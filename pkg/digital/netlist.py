"""
digital/netlist.py
------------------
Greenlight – Logical Beamsplitter

The binary beamsplitter maps input symbols (A, B) to outputs (C, D). Its
listed transformations are

    A1A2 B1B2 | C1C2 D1D2
    00   00   | 00   00
    01   01   | 01   00
    01   10   | 00   01
    10   01   | 00   10
    10   10   | 10   00

and it is realised by four two-input AND gates:

    C1 = A1 ∧ B1     C2 = A2 ∧ B2
    D1 = B2 ∧ A1     D2 = B1 ∧ A2

The netlist is total over the nine symbol pairs; rows not listed above
(Vacuum against a non-Vacuum symbol) evaluate to (Vacuum, Vacuum).
All four gates read only primary inputs, so one logical beamsplitter is one
AND gate deep.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .symbols import Symbol


@dataclass(frozen=True)
class AndGate:
    output: str
    inputs: tuple[str, str]


@dataclass(frozen=True)
class AndNetlist:
    gates: tuple[AndGate, ...] = (
        AndGate("C1", ("A1", "B1")),
        AndGate("C2", ("A2", "B2")),
        AndGate("D1", ("B2", "A1")),
        AndGate("D2", ("B1", "A2")),
    )

    @property
    def gate_depth(self) -> int:
        outputs = {g.output for g in self.gates}
        return 2 if any(i in outputs for g in self.gates for i in g.inputs) else 1

    def fan_out(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for g in self.gates:
            for line in g.inputs:
                counts[line] = counts.get(line, 0) + 1
        return counts

    def evaluate(self, lines: dict) -> dict:
        """Evaluate every gate; works on ints, bools or boolean numpy arrays."""
        return {g.output: lines[g.inputs[0]] & lines[g.inputs[1]] for g in self.gates}


LOGICAL_BEAMSPLITTER = AndNetlist()

# Listed transformations; unlisted pairs fall through to the netlist closure.
_LISTED_ROWS: dict[tuple[Symbol, Symbol], tuple[Symbol, Symbol]] = {
    (Symbol.VACUUM, Symbol.VACUUM): (Symbol.VACUUM, Symbol.VACUUM),
    (Symbol.PLUS,   Symbol.PLUS):   (Symbol.PLUS,   Symbol.VACUUM),
    (Symbol.PLUS,   Symbol.MINUS):  (Symbol.VACUUM, Symbol.PLUS),
    (Symbol.MINUS,  Symbol.PLUS):   (Symbol.VACUUM, Symbol.MINUS),
    (Symbol.MINUS,  Symbol.MINUS):  (Symbol.MINUS,  Symbol.VACUUM),
}


def bs_truth_table(a: Symbol, b: Symbol) -> tuple[Symbol, Symbol]:
    """Truth-table lookup; Vacuum paired with a non-Vacuum symbol gives (Vacuum, Vacuum)."""
    a, b = Symbol(a), Symbol(b)
    return _LISTED_ROWS.get((a, b), (Symbol.VACUUM, Symbol.VACUUM))


def logical_beamsplitter(a: Symbol, b: Symbol) -> tuple[Symbol, Symbol]:
    """Evaluate the 4-AND netlist on the bit representations of (a, b)."""
    a, b = Symbol(a), Symbol(b)
    out = LOGICAL_BEAMSPLITTER.evaluate({
        "A1": a.bits[0], "A2": a.bits[1],
        "B1": b.bits[0], "B2": b.bits[1],
    })
    return Symbol.from_bits(out["C1"], out["C2"]), Symbol.from_bits(out["D1"], out["D2"])


def apply_stage(
    first: np.ndarray,
    second: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Bit-parallel netlist evaluation over all (lo, hi) pairs of one stage."""
    out = LOGICAL_BEAMSPLITTER.evaluate({
        "A1": first[lo], "A2": second[lo],
        "B1": first[hi], "B2": second[hi],
    })
    new_first = first.copy()
    new_second = second.copy()
    new_first[lo], new_second[lo] = out["C1"], out["C2"]
    new_first[hi], new_second[hi] = out["D1"], out["D2"]
    return new_first, new_second
