"""CRC24 variants A and B over bit sequences.

Both use a zero initial register and no final XOR: the CRC is the remainder
of bits(x) * x^24 divided by the generator over GF(2).  The production path
exploits linearity: the contribution of the bit i positions from the end is
x^(24+i) mod g, precomputed once per variant and XOR-reduced over the set
bits, which vectorizes cleanly.
"""

from __future__ import annotations

import numpy as np

CRC24A_POLY = 0x864CFB
CRC24B_POLY = 0x800063
CRC_LEN = 24

TB_CRC_VARIANT = "A"
CB_CRC_VARIANT = "B"

_POLYS = {"A": CRC24A_POLY, "B": CRC24B_POLY}
_mask_cache: dict[str, np.ndarray] = {}


def _masks(variant: str, length: int) -> np.ndarray:
    """x^(24+i) mod g for i in [0, length), as uint32 values."""
    table = _mask_cache.get(variant)
    if table is None or len(table) < length:
        poly = _POLYS[variant]
        old = 0 if table is None else len(table)
        size = max(length, 2 * old, 4096)
        out = np.empty(size, dtype=np.uint32)
        if table is not None:
            out[:old] = table
        m = poly if old == 0 else int(table[old - 1])  # x^24 mod g == low bits of g
        start = old
        if old == 0:
            out[0] = m
            start = 1
        for i in range(start, size):
            m <<= 1
            if m & (1 << CRC_LEN):
                m = (m & 0xFFFFFF) ^ poly
            out[i] = m
        _mask_cache[variant] = out
        table = out
    return table[:length]


def crc24(bits: np.ndarray, variant: str) -> int:
    """24-bit CRC of a bit sequence (MSB-first polynomial division)."""
    if variant not in _POLYS:
        raise ValueError(f"unknown CRC24 variant {variant!r}")
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.ndim != 1 or bits.size == 0:
        raise ValueError("bits must be a non-empty 1-D sequence")
    masks = _masks(variant, bits.size)
    idx = np.flatnonzero(bits)
    if idx.size == 0:
        return 0
    sel = masks[bits.size - 1 - idx]
    return int(np.bitwise_xor.reduce(sel))


def attach_crc(bits: np.ndarray, variant: str) -> np.ndarray:
    """Return bits with their 24 CRC bits appended (MSB first)."""
    value = crc24(bits, variant)
    crc_bits = (value >> np.arange(CRC_LEN - 1, -1, -1)) & 1
    return np.concatenate([np.asarray(bits, dtype=np.uint8), crc_bits.astype(np.uint8)])


def check_crc(bits_with_crc: np.ndarray, variant: str) -> bool:
    """True iff the trailing 24 bits are the CRC of the leading bits."""
    bits_with_crc = np.asarray(bits_with_crc, dtype=np.uint8)
    if bits_with_crc.size <= CRC_LEN:
        return False
    data, tail = bits_with_crc[:-CRC_LEN], bits_with_crc[-CRC_LEN:]
    value = crc24(data, variant)
    expect = (value >> np.arange(CRC_LEN - 1, -1, -1)) & 1
    return bool(np.array_equal(tail, expect.astype(np.uint8)))
