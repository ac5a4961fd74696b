"""
hadamard/code.py
----------------
Greenlight – Hadamard Code Reference

Reference mathematics of the Hadamard code shared by both receivers:

  - bitwise scalar product of two mode indices
  - Hadamard matrix entries (H_n)_{j,k} = (-1)^{j·k}
  - codeword encoding (one row of H_n)
  - an unnormalised fast Walsh-Hadamard transform used as the oracle

Mode indices are plain ints; bit t is the t-th least-significant bit and the
scalar product runs over all n bit positions of an order-n code (2^n modes).

Usage
-----
    from hadamard.code import encode_codeword, fwht_reference

    word = encode_codeword(3, 2)          # array([ 1, -1, -1,  1])
    fwht_reference([1, 1, 1, 1])          # array([4, 0, 0, 0])
"""

from __future__ import annotations

import numpy as np

# ---------------------------------------------------------------------------
# Limits
# ---------------------------------------------------------------------------

DEFAULT_MAX_ORDER = 20          # 2^20 modes; bounds memory of plans and vectors


class HadamardDomainError(ValueError):
    """Raised for out-of-range orders, indices or non-power-of-two lengths."""


# ---------------------------------------------------------------------------
# Validation helpers
# ---------------------------------------------------------------------------

def check_order(n: int, cap: int = DEFAULT_MAX_ORDER, minimum: int = 1) -> int:
    """Return *n* if minimum <= n <= cap, else raise HadamardDomainError."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise HadamardDomainError(f"Order must be an integer, got {n!r}")
    if n < minimum or n > cap:
        raise HadamardDomainError(f"Order {n} outside [{minimum}, {cap}]")
    return int(n)


def check_index(j: int, n: int, what: str = "index") -> int:
    if isinstance(j, bool) or not isinstance(j, (int, np.integer)):
        raise HadamardDomainError(f"Mode {what} must be an integer, got {j!r}")
    if not 0 <= j < (1 << n):
        raise HadamardDomainError(f"Mode {what} {j} outside [0, {1 << n}) for order {n}")
    return int(j)


def order_of_length(length: int) -> int:
    """Return n such that length == 2^n; raise for anything else."""
    if length < 1 or length & (length - 1):
        raise HadamardDomainError(f"Length {length} is not a power of two")
    return length.bit_length() - 1


# ---------------------------------------------------------------------------
# Code operations
# ---------------------------------------------------------------------------

def bitwise_dot(j: int, k: int, n: int) -> int:
    """Sum of j_t·k_t over the n binary digits of j and k."""
    check_order(n, minimum=0)
    j = check_index(j, n, "j")
    k = check_index(k, n, "k")
    return (j & k).bit_count()


def hadamard_entry(j: int, k: int, n: int) -> int:
    """(H_n)_{j,k} = (-1)^{j·k}."""
    return -1 if bitwise_dot(j, k, n) & 1 else 1


def encode_codeword(j: int, n: int) -> np.ndarray:
    """
    Return row *j* of H_n as an int8 sign vector of length 2^n.

    Entry k equals hadamard_entry(j, k, n). The returned array is read-only.
    """
    check_order(n, minimum=0)
    j = check_index(j, n, "j")
    k = np.arange(1 << n, dtype=np.int64)
    parity = np.zeros(k.shape, dtype=np.int64)
    masked = k & j
    while masked.any():
        parity ^= masked & 1
        masked >>= 1
    word = (1 - 2 * parity).astype(np.int8)
    word.flags.writeable = False
    return word


def hadamard_matrix(n: int) -> np.ndarray:
    """Dense H_n (2^n × 2^n, int64). Intended for n <= 12."""
    check_order(n, cap=12, minimum=0)
    return np.stack([encode_codeword(j, n).astype(np.int64) for j in range(1 << n)])


def fwht_reference(x) -> np.ndarray:
    """
    Unnormalised fast Walsh-Hadamard transform: returns H_n·x.

    Integer inputs stay integer (exact); float and complex inputs keep their
    dtype. The input is never modified.
    """
    out = np.array(x)
    if out.ndim != 1:
        raise HadamardDomainError(f"Expected a 1-D vector, got shape {out.shape}")
    order_of_length(out.size)
    if out.dtype == bool or np.issubdtype(out.dtype, np.integer):
        out = out.astype(np.int64)

    h = 1
    while h < out.size:
        blocks = out.reshape(-1, 2, h)
        a = blocks[:, 0, :].copy()
        b = blocks[:, 1, :]
        blocks[:, 0, :] = a + b
        blocks[:, 1, :] = a - b
        h *= 2
    return out
