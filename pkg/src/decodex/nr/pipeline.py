"""Transport-block chain: CRC attachment, descriptor fan-out, reassembly."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..backends.descriptor import DecodeDescriptor
from .crc import CB_CRC_VARIANT, TB_CRC_VARIANT, attach_crc, check_crc
from .mcs import compute_tb_size, mcs_lookup, num_coded_bits
from .segment import SegmentationPlan, TB_CRC_LEN, segment, select_base_graph


@dataclass(frozen=True)
class TransportBlock:
    """One MAC-scheduled data unit: payload plus its allocation."""

    payload_bits: np.ndarray
    mcs: int
    prb: int

    def __post_init__(self):
        n = len(self.payload_bits)
        if n == 0 or n % 8 != 0:
            raise ValueError("payload length must be a positive multiple of 8")

    @property
    def b(self) -> int:
        return len(self.payload_bits)


def make_transport_block(payload_bits: np.ndarray, mcs: int, prb: int) -> TransportBlock:
    return TransportBlock(
        payload_bits=np.asarray(payload_bits, dtype=np.uint8), mcs=mcs, prb=prb
    )


def random_transport_block(mcs: int, prb: int, rng: np.random.Generator) -> TransportBlock:
    entry = mcs_lookup(mcs)
    b = compute_tb_size(prb, entry)
    return make_transport_block(rng.integers(0, 2, b, dtype=np.uint8), mcs, prb)


def plan_transport_block(tb: TransportBlock) -> SegmentationPlan:
    entry = mcs_lookup(tb.mcs)
    bg = select_base_graph(tb.b, entry.rate)
    return segment(tb.b, bg)


def split_coded_bits(total_e: int, c: int) -> list[int]:
    """Even E split across code blocks, remainder to the last one."""
    base = total_e // c
    return [base] * (c - 1) + [total_e - base * (c - 1)]


def build_tb_descriptors(
    tb: TransportBlock, max_iterations: int = 20, tb_id: int = 0
) -> list[DecodeDescriptor]:
    """One decode descriptor per code block, with E and output offsets set."""
    plan = plan_transport_block(tb)
    entry = mcs_lookup(tb.mcs)
    e_split = split_coded_bits(num_coded_bits(tb.prb, entry), plan.c)
    chunk = plan.bits_per_chunk
    return [
        DecodeDescriptor(
            cb_params=replace(plan.params[i], e=e_split[i]),
            max_iterations=max_iterations,
            output_slot=i * chunk,
            tb_id=tb_id,
            cb_id=i,
        )
        for i in range(plan.c)
    ]


def code_block_bits(tb: TransportBlock, plan: SegmentationPlan) -> list[np.ndarray]:
    """Systematic bit blocks per CB: chunk (+CB CRC when C>1) + filler zeros.

    The TB CRC is appended first; the tail chunk is zero-padded up to the
    chunk size before its CB CRC when the split does not divide evenly.
    """
    stream = attach_crc(tb.payload_bits, TB_CRC_VARIANT)
    chunk = plan.bits_per_chunk
    blocks = []
    for i in range(plan.c):
        part = stream[i * chunk:(i + 1) * chunk]
        if part.size < chunk:
            part = np.concatenate([part, np.zeros(chunk - part.size, dtype=np.uint8)])
        if plan.c > 1:
            part = attach_crc(part, CB_CRC_VARIANT)
        block = np.zeros(plan.params[i].k, dtype=np.uint8)
        block[: part.size] = part
        blocks.append(block)
    return blocks


@dataclass(frozen=True)
class ReassembledBlock:
    """Outcome of putting decoded CB bits back together."""

    payload_bits: np.ndarray
    tb_crc_ok: bool
    cb_crc_ok: tuple[bool, ...]

    @property
    def ok(self) -> bool:
        return self.tb_crc_ok and all(self.cb_crc_ok)


def reassemble(decoded_blocks: list[np.ndarray], tb: TransportBlock) -> ReassembledBlock:
    """Check CB CRCs (when segmented), strip them, and check the TB CRC."""
    plan = plan_transport_block(tb)
    if len(decoded_blocks) != plan.c:
        raise ValueError(f"expected {plan.c} decoded blocks, got {len(decoded_blocks)}")
    chunk = plan.bits_per_chunk
    cb_ok = []
    parts = []
    for i, bits in enumerate(decoded_blocks):
        data = np.asarray(bits, dtype=np.uint8)[: plan.k_prime]
        if plan.c > 1:
            cb_ok.append(check_crc(data, CB_CRC_VARIANT))
            parts.append(data[:chunk])
        else:
            cb_ok.append(True)
            parts.append(data[:chunk])
    stream = np.concatenate(parts)[: tb.b + TB_CRC_LEN]
    tb_ok = check_crc(stream, TB_CRC_VARIANT)
    return ReassembledBlock(
        payload_bits=stream[: tb.b], tb_crc_ok=tb_ok, cb_crc_ok=tuple(cb_ok)
    )
