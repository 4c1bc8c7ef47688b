"""Exceptions raised when a guarantee fails."""

from __future__ import annotations


class PreconditionViolation(Exception):
    """The input does not meet a threshold the construction relies on.

    ``witness`` is usually a :class:`~bipconn.connectivity.SeparatorWitness`
    proving the graph is less connected than assumed.
    """

    def __init__(self, message: str, witness=None, guarantee: str = ""):
        super().__init__(message)
        self.witness = witness
        self.guarantee = guarantee


class InternalConsistencyError(RuntimeError):
    """A step that is correct by construction failed its runtime check."""

    def __init__(self, message: str, dump: dict | None = None):
        super().__init__(message)
        self.dump = dump or {}


class RetryExhausted(RuntimeError):
    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts
