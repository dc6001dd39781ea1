"""Exception types shared across the package."""


class DuomapError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DuomapError):
    """An instance or weight specification failed validation."""


class LengthMismatchError(ValidationError):
    """The two input strings have different lengths."""


class NotPermutationError(ValidationError):
    """The second string is not a character permutation of the first."""


class NonPositiveWeightError(ValidationError):
    """A weight table entry or default is zero or negative."""


class InstanceFormatError(ValidationError):
    """An instance file or weight specification is malformed."""


class IterationLimitError(DuomapError):
    """The LP solver exhausted its pivot budget (indicates a solver bug)."""


class TooLargeError(DuomapError):
    """The input exceeds an exact oracle's size limit."""


class InconsistentSelectionError(DuomapError):
    """A selected duo-pair set is not conflict-free and cannot be extended."""
