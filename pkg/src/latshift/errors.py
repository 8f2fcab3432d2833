"""Exception types shared across the package."""

from __future__ import annotations


class LatshiftError(Exception):
    """Base class for all domain errors raised by this package."""


class PosetError(LatshiftError):
    """A document or structure fails ranked-meet-semi-lattice validation.

    `code` is a stable machine-readable tag, `witnesses` names the offending
    elements (ids) so callers can report exactly what broke.
    """

    def __init__(self, code: str, message: str, witnesses: tuple = ()):
        super().__init__(message)
        self.code = code
        self.witnesses = witnesses


class PreconditionError(LatshiftError):
    """An operation was called on input that fails its structural hypothesis."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class GenericityError(LatshiftError):
    """Two independently seeded generic bases disagreed; the field sample

    was not generic enough for this input."""


class InfeasibleError(LatshiftError):
    """A brute-force search was asked for more objects than the universe holds."""
