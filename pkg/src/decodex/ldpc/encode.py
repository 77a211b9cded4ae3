"""Systematic QC-LDPC encoding on the lifted parity-check matrix.

The first four base rows together with the first four parity block-columns
form a double-diagonal core whose first column has odd-multiplicity shift q;
summing the four core rows over GF(2) cancels everything else and leaves
I(q) * p1 = sum of the systematic contributions, which pins p1.  The
remaining core parities follow by back-substitution, and every extension row
determines its own parity block directly.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

import numpy as np

from .basegraph import ConfigurationError, get_base_graph
from .params import CodeBlockParams

N_CORE_ROWS = 4
N_CORE_PARITY = 4


@lru_cache(maxsize=64)
def _encoder_plan(bg_id: int, set_index: int):
    """Split a base graph into the row/column structure the encoder walks."""
    bg = get_base_graph(bg_id)
    shifts = bg.shifts_for_set(set_index)
    n_sys = bg.kb
    first_parity = n_sys

    rows: list[list[tuple[int, int]]] = [[] for _ in range(bg.rows)]
    for (r, c), s in sorted(shifts.items()):
        rows[r].append((c, s))

    core_first_col = [(r, s) for r in range(N_CORE_ROWS) for c, s in rows[r] if c == first_parity]
    parity = Counter(s for _, s in core_first_col)
    odd = [s for s, n in parity.items() if n % 2 == 1]
    if len(odd) != 1:
        raise ConfigurationError(
            f"BG{bg_id}: first parity column does not reduce to a single circulant"
        )
    agg_shift = odd[0]

    for r in range(N_CORE_ROWS, bg.rows):
        ext_cols = [c for c, _ in rows[r] if c >= first_parity + N_CORE_PARITY]
        if ext_cols != [first_parity + N_CORE_PARITY + (r - N_CORE_ROWS)]:
            raise ConfigurationError(f"BG{bg_id}: row {r} lacks its extension diagonal")
    return bg, rows, agg_shift


def encode(info_bits: np.ndarray, params: CodeBlockParams) -> np.ndarray:
    """Encode ``params.k`` systematic bits into the full n_full codeword.

    Filler positions inside info_bits must already be zero.  Systematic base
    columns beyond params.kb (short payloads on BG2) are encoded as zeros.
    """
    info_bits = np.asarray(info_bits, dtype=np.uint8)
    if info_bits.ndim != 1 or len(info_bits) != params.k:
        raise ValueError(f"expected {params.k} info bits, got {len(info_bits)}")

    bg, rows, agg_shift = _encoder_plan(params.bg, params.set_index)
    z = params.zc
    n_sys = bg.kb
    first_parity = n_sys

    blocks = np.zeros((bg.cols, z), dtype=np.uint8)
    blocks[: n_sys].flat[: params.k] = info_bits

    def row_sum(r: int, upto: int) -> np.ndarray:
        acc = np.zeros(z, dtype=np.uint8)
        for c, s in rows[r]:
            if c < upto:
                acc ^= np.roll(blocks[c], -(s % z))
        return acc

    # p1 from the GF(2) sum of the four core rows.
    agg = np.zeros(z, dtype=np.uint8)
    for r in range(N_CORE_ROWS):
        agg ^= row_sum(r, first_parity)
    blocks[first_parity] = np.roll(agg, agg_shift % z)

    # Remaining core parities by substitution: repeatedly take any core row
    # with a single unknown parity column left.
    solved = {first_parity}
    while len(solved) < N_CORE_PARITY:
        progressed = False
        for r in range(N_CORE_ROWS):
            unknown = [
                (c, s)
                for c, s in rows[r]
                if first_parity <= c < first_parity + N_CORE_PARITY and c not in solved
            ]
            if len(unknown) != 1:
                continue
            acc = np.zeros(z, dtype=np.uint8)
            for c, s in rows[r]:
                if c < first_parity + N_CORE_PARITY and (c < first_parity or c in solved):
                    acc ^= np.roll(blocks[c], -(s % z))
            c_u, s_u = unknown[0]
            blocks[c_u] = np.roll(acc, s_u % z)
            solved.add(c_u)
            progressed = True
        if not progressed:
            raise ConfigurationError(f"BG{params.bg}: core back-substitution stalled")

    # Extension rows: each determines the parity block on its own diagonal.
    for r in range(N_CORE_ROWS, bg.rows):
        c_diag = first_parity + N_CORE_PARITY + (r - N_CORE_ROWS)
        acc = np.zeros(z, dtype=np.uint8)
        s_diag = 0
        for c, s in rows[r]:
            if c == c_diag:
                s_diag = s
            else:
                acc ^= np.roll(blocks[c], -(s % z))
        blocks[c_diag] = np.roll(acc, s_diag % z)

    return blocks.reshape(-1)
