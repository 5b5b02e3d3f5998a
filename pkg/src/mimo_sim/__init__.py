"""Multi-cell massive MIMO uplink spectral-efficiency simulator."""

__version__ = "0.1.0"
