"""
hadamard/
---------
Greenlight – Hadamard Code & Butterfly Topology

Public API
----------
    from hadamard import (
        bitwise_dot, hadamard_entry, encode_codeword, fwht_reference,
        build_butterfly, beamsplitter_count, depth, HadamardPlan,
    )
"""

from .code     import (
    DEFAULT_MAX_ORDER,
    HadamardDomainError,
    bitwise_dot,
    check_index,
    check_order,
    encode_codeword,
    fwht_reference,
    hadamard_entry,
    hadamard_matrix,
    order_of_length,
)
from .topology import HadamardPlan, beamsplitter_count, build_butterfly, depth

__all__ = [
    "DEFAULT_MAX_ORDER",
    "HadamardDomainError",
    "bitwise_dot",
    "check_index",
    "check_order",
    "encode_codeword",
    "fwht_reference",
    "hadamard_entry",
    "hadamard_matrix",
    "order_of_length",
    "HadamardPlan",
    "beamsplitter_count",
    "build_butterfly",
    "depth",
]
