"""Offload operation descriptors, one per code block."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..ldpc.params import CodeBlockParams


@dataclass
class DecodeDescriptor:
    """One decode operation: soft input, coding parameters, placement.

    llr is the post-dematch soft block (n_full int8 values); it stays None
    until the vector-generation pipeline fills it in.  output_slot is the
    bit offset of this CB's chunk in the reassembled TB stream.
    """

    cb_params: CodeBlockParams
    max_iterations: int
    output_slot: int
    tb_id: int
    cb_id: int
    llr: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.llr is not None and self.llr.shape != (self.cb_params.n_full,):
            raise ValueError("llr length must equal n_full")

    @property
    def input_bytes(self) -> int:
        """Modeled host-to-device payload: one byte per rate-matched LLR."""
        return self.cb_params.e

    @property
    def output_bytes(self) -> int:
        """Modeled device-to-host payload: packed decoded info bits."""
        return (self.cb_params.k + 7) // 8
