"""Vector generation: QAM modem, AWGN channel, max-log demapper."""

from .channel import ChannelConfig, transmit
from .modem import LLR_QUANT_GAIN, bits_to_llrs, constellation, demap_llr, modulate
from .vectors import TbVectors, dump_golden_vectors, generate_cell_vectors, prepare_tb_vectors

__all__ = [
    "ChannelConfig",
    "LLR_QUANT_GAIN",
    "TbVectors",
    "bits_to_llrs",
    "constellation",
    "demap_llr",
    "dump_golden_vectors",
    "generate_cell_vectors",
    "modulate",
    "prepare_tb_vectors",
    "transmit",
]
