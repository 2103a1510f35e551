"""Exception taxonomy shared across the package."""


class ShiftGraphError(Exception):
    """Base class for all domain errors."""


class InvalidCharacterError(ShiftGraphError):
    pass


class UnbalancedTypeError(ShiftGraphError):
    pass


class EmptyTypeError(ShiftGraphError):
    pass


class WidthMismatchError(ShiftGraphError):
    pass


class NotSortedError(ShiftGraphError):
    pass


class OrdinalSyntaxError(ShiftGraphError):
    pass


class NonCanonicalError(ShiftGraphError):
    pass


class OutOfRangeError(ShiftGraphError):
    pass


class BudgetExceededError(ShiftGraphError):
    pass


class WidthTooLargeError(ShiftGraphError):
    pass


class ElementOutOfGroundError(ShiftGraphError):
    pass


class UnsupportedError(ShiftGraphError):
    pass


class AmbiguousCensusError(ShiftGraphError):
    pass


class NotAShiftGraphError(ShiftGraphError):
    pass


class WrongTypeError(ShiftGraphError):
    pass


class OutOfStatedRangeError(ShiftGraphError):
    pass


class UsageError(ShiftGraphError):
    pass
