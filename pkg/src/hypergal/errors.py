"""Shared exception types.

The CLI maps these onto exit codes: parse errors exit 2, domain errors
exit 3, unsupported logic fragments exit 4.
"""


class HypergalError(Exception):
    """Base class for all package errors."""


class PolyParseError(HypergalError):
    """Malformed polynomial or formula text; carries the offending position."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class ZeroPolynomialError(HypergalError):
    """An operation that requires a nonzero polynomial got the zero polynomial."""


class PolynomialDivisionError(ZeroPolynomialError):
    """Division by the zero polynomial."""


class ArityMismatchError(HypergalError):
    """Evaluation got fewer arguments than the polynomial has variables."""


class FieldMismatchError(HypergalError):
    """Operands belong to different fields."""


class NotEmbeddableError(HypergalError):
    """Value cannot be embedded coherently into the carrier family."""


class NotGaloisError(HypergalError):
    """The field is not Galois over the rationals."""


class NonRationalCoefficientError(HypergalError):
    """An orbit product produced a non-rational coefficient (broken group)."""


class TooLargeError(HypergalError):
    """Exhaustive enumeration was requested above the configured bound."""


class NonInvariantError(HypergalError):
    """An automorphism moved a supposedly invariant subfield off itself."""


class StageCapError(HypergalError):
    """A tower stage beyond the configured cap was requested."""

    def __init__(self, stage, cap, tier="stage"):
        super().__init__(f"{tier} {stage} is beyond the configured cap {cap}")
        self.stage = stage
        self.cap = cap


class OrderError(HypergalError):
    """Quotient endpoints out of order (need target stage below source stage)."""


class DepthMismatchError(HypergalError):
    """Profinite families of unequal depth."""


class CarrierMismatchError(HypergalError):
    """Indexed elements over different carrier families."""


class ZeroInversionError(HypergalError):
    """Termwise inversion of an element that is zero almost everywhere."""


class InconclusiveError(HypergalError):
    """A precondition verdict came back UNDETERMINED; carries the verdict."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class ValueOutsideSetError(HypergalError):
    """A sampled value fell outside the declared finite value set."""


class UnsupportedCarrierError(HypergalError):
    """The requested witness construction does not apply to this carrier."""


class EntryRangeError(HypergalError):
    """Tuple entry index is out of range almost everywhere."""


class FragmentError(HypergalError):
    """Formula fragment outside the supported transfer directions."""
