"""Invariant cohomology of pure braid groups under Young subgroups S_{n-q} x S_q."""

__version__ = "0.1.0"
