"""
digital/
--------
Greenlight – Digital Receiver Simulation

Modules
-------
symbols.py  — Symbol (00/01/10) and bit-parallel SymbolVector
netlist.py  — truth table, 4-AND logical beamsplitter, stage-wide evaluation
network.py  — codeword encoding, propagation, decoding, electronic latency
"""

from .netlist import (
    LOGICAL_BEAMSPLITTER,
    AndGate,
    AndNetlist,
    apply_stage,
    bs_truth_table,
    logical_beamsplitter,
)
from .network import (
    DigitalDecodeError,
    decode_digital,
    electronic_latency,
    encode_digital,
    orphan_stages,
    propagate_digital,
    trace_rows,
)
from .symbols import DigitalDomainError, NetlistConsistencyError, Symbol, SymbolVector

__all__ = [
    "LOGICAL_BEAMSPLITTER",
    "AndGate",
    "AndNetlist",
    "apply_stage",
    "bs_truth_table",
    "logical_beamsplitter",
    "DigitalDecodeError",
    "decode_digital",
    "electronic_latency",
    "encode_digital",
    "orphan_stages",
    "propagate_digital",
    "trace_rows",
    "DigitalDomainError",
    "NetlistConsistencyError",
    "Symbol",
    "SymbolVector",
]
