#!/usr/bin/env python3
"""
Error types for multiset_gray
Library code raises these; the CLI and the web API translate them
into exit codes and JSON error responses.
"""


class MultisetGrayError(Exception):
    """Base class for every error raised by the package."""


class InvalidSpec(MultisetGrayError, ValueError):
    """A multiplicity vector is empty or holds a non-positive entry."""


class InvalidArgs(MultisetGrayError, ValueError):
    """Arguments outside the domain of a reference generator (k < 0, k > n, ...)."""


class CapExceeded(MultisetGrayError):
    """A materialization or search would exceed the configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: {size:,} exceeds cap {cap:,}")


class IndexOutOfRange(MultisetGrayError, IndexError):
    """A transposition refers to positions outside 1..n or has i >= j."""


class NoOrientedSymbol(MultisetGrayError, ValueError):
    """An oriented state without any '<' or '>' cell."""


class LengthMismatch(MultisetGrayError, ValueError):
    """Two states of different lengths were compared."""


class UnpairableShape(MultisetGrayError, ValueError):
    """A partition whose rows do not come in equal-length pairs."""


class Exhausted(MultisetGrayError):
    """Normal termination of a generator: every permutation was emitted."""
