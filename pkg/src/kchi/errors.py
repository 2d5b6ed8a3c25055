"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Malformed graph input: bad vertex index, loop, forbidden parallel edge."""


class SizeGuardError(ValueError):
    """A brute-force oracle was asked to exceed its documented size guard."""


class PremiseError(ValueError):
    """A documented precondition of an operation does not hold for the input."""


class CertificateError(RuntimeError):
    """An internal contract was violated while building a certificate.

    Carries a ``dump`` dict with enough context (edge list, stage, message)
    to reproduce the failure as a standalone counterexample.
    """

    def __init__(self, message: str, dump: dict | None = None):
        super().__init__(message)
        self.dump = dump or {}
