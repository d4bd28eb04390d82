"""Exception hierarchy.

Mathematical *violations* found by the verification routines are data
(collected into reports), not exceptions.  Exceptions are reserved for
malformed inputs and for preconditions of constructions.
"""

from __future__ import annotations


class HopfPiError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(HopfPiError):
    """Shapes of matrices/vectors are incompatible."""


class SingularMatrix(HopfPiError):
    """A matrix required to be invertible is not."""


class NotAGroup(HopfPiError):
    """A multiplication table fails the group axioms.

    `witness` carries the offending element or triple.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class GradingMismatch(HopfPiError):
    """A graded map was applied to an element of the wrong grading."""


class NotInKernelOfCounit(HopfPiError):
    """A proposed ideal generator has nonzero counit."""


class NotARightIdeal(HopfPiError):
    """A subspace is not closed under right multiplication."""


class CodomainViolation(HopfPiError):
    """An image vector falls outside the asserted codomain subspace."""


class NotCovariant(HopfPiError):
    """A calculus lacks the covariance needed for the requested map."""


class NotBicovariant(HopfPiError):
    """Bicovariance is required but does not hold."""


class InternalMismatch(HopfPiError):
    """Two independent computations of the same map disagree (a bug)."""


class MissingCoaction(HopfPiError):
    """The bimodule carries no coaction of the requested side."""


class MissingPsi(HopfPiError):
    """f_ij extraction needs the grading-collapse maps, none present."""


class StructureInconsistent(HopfPiError):
    """Extracted structure data fails one of its defining identities."""


class DimensionVariesAcrossGrading(HopfPiError):
    """Invariant subspaces have different dimensions at different gradings."""


class IncompatibleData(HopfPiError):
    """Reconstruction input violates one of its required relations."""


class UnknownIdeal(HopfPiError):
    """A named ideal is absent from the definition document."""


class TooLarge(HopfPiError):
    """Enumeration bounds exceeded."""


class UnsupportedField(HopfPiError):
    """The operation needs a small prime field."""


class VerificationFailed(HopfPiError):
    """A construction requires a verified structure and got violations.

    `report` carries the failing VerificationReport.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ParseError(HopfPiError):
    """A definition document is malformed.

    `context` names the offending field (or carries the JSON error).
    """

    def __init__(self, message: str, context: str | None = None):
        super().__init__(message if context is None else f"{context}: {message}")
        self.context = context
