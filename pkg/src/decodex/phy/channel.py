"""Seeded complex AWGN channel."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ChannelConfig:
    """Per-symbol Es/N0 in dB plus a 64-bit seed; snr_db=inf disables noise."""

    snr_db: float
    seed: int

    @property
    def sigma2(self) -> float:
        return 0.0 if math.isinf(self.snr_db) else 10.0 ** (-self.snr_db / 10.0)


def transmit(symbols: np.ndarray, channel: ChannelConfig) -> np.ndarray:
    """y = x + n with n ~ CN(0, sigma2), variance split evenly across I/Q.

    Identical (symbols, channel) always produce identical output.
    """
    symbols = np.asarray(symbols, dtype=np.complex128)
    if channel.sigma2 == 0.0:
        return symbols.copy()
    rng = np.random.default_rng(channel.seed)
    scale = math.sqrt(channel.sigma2 / 2.0)
    noise = rng.normal(0.0, scale, symbols.shape) + 1j * rng.normal(0.0, scale, symbols.shape)
    return symbols + noise
