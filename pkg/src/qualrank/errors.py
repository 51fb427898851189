"""Exception types shared across the package.

Validation findings are data, not exceptions; these errors are raised when an
operation cannot sensibly proceed (bad inputs, violated preconditions).
"""

from __future__ import annotations


class QualrankError(Exception):
    """Base class for all errors raised by qualrank."""


class DomainMismatchError(QualrankError):
    """A value's variant does not match the attribute's declared domain."""


class ProblemValidationError(QualrankError):
    """An operation received a problem whose validation reports errors."""

    def __init__(self, findings):
        self.findings = list(findings)
        lines = "; ".join(f.message for f in self.findings)
        super().__init__(f"invalid problem: {lines}")


class ParseError(QualrankError):
    """A document failed to parse against the strict problem schema."""

    def __init__(self, findings):
        self.findings = list(findings)
        lines = "; ".join(
            f"{f.path}: {f.message}" if f.path else f.message for f in self.findings
        )
        super().__init__(f"parse failed: {lines}")


class UnknownAlternativeError(QualrankError):
    """An alternative id is not part of the problem."""


class NotPartialOrderError(QualrankError):
    """An operation that requires a strict partial order got something else."""

    def __init__(self, check, what="relation"):
        self.check = check
        super().__init__(
            f"{what} is not a strict partial order: "
            f"{check.axiom} fails at {check.counterexample}"
        )


class WeightsError(QualrankError):
    """A weight vector is malformed (negative, unnormalized, wrong keys)."""


class ScalarizationError(QualrankError):
    """Weighted scoring was asked to scalarize a domain it cannot."""
