"""Shared exception types."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class OutOfRangeError(DomainError):
    """Argument outside the supported numerical range (caller must switch method)."""


class SingularPointError(DomainError):
    """Evaluation requested exactly at a flagged weight singularity."""


class TailDivergenceError(RuntimeError):
    """Half-line integrand failed to decay within the truncation window."""
