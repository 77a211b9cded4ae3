"""Quasi-cyclic LDPC core: base graphs, encoding, syndrome, min-sum decoding."""

from .basegraph import (
    ALL_LIFTING_SIZES,
    BG_DIMS,
    LIFTING_SETS,
    BaseGraph,
    ConfigurationError,
    ParityCheckMatrix,
    expand_base_graph,
    get_base_graph,
    load_base_graph_file,
    set_index_for_zc,
)
from .decode import LLR_MAX, DecodeResult, decode_layered_minsum, syndrome_check
from .encode import encode
from .params import CodeBlockParams, make_params

__all__ = [
    "ALL_LIFTING_SIZES",
    "BG_DIMS",
    "LIFTING_SETS",
    "BaseGraph",
    "CodeBlockParams",
    "ConfigurationError",
    "DecodeResult",
    "LLR_MAX",
    "ParityCheckMatrix",
    "decode_layered_minsum",
    "encode",
    "expand_base_graph",
    "get_base_graph",
    "load_base_graph_file",
    "make_params",
    "set_index_for_zc",
    "syndrome_check",
]
