"""5G NR LDPC codec, offload-model backends, and benchmark harness."""

__version__ = "0.1.0"
