"""Exception hierarchy shared by every module."""


class FormalDualityError(Exception):
    """Base class for all errors raised by fdpairs."""


class InvalidOrderError(FormalDualityError, ValueError):
    pass


class GroupMismatchError(FormalDualityError, ValueError):
    pass


class SizeLimitError(FormalDualityError, ValueError):
    pass


class EmptySetError(FormalDualityError, ValueError):
    pass


class InvalidConductorError(FormalDualityError, ValueError):
    pass


class ConductorMismatchError(FormalDualityError, ValueError):
    pass


class NotGroupRingElementError(FormalDualityError, ValueError):
    """Fourier inversion produced a non-integral coefficient."""


class NotAPartitionError(FormalDualityError, ValueError):
    pass


class ConditionViolatedError(FormalDualityError, ValueError):
    """The recursive combination was refused because neither side has real squared character sums."""


class ParameterError(FormalDualityError, ValueError):
    pass


class PairFileError(FormalDualityError, ValueError):
    """Malformed pair file; the message names the offending field or line."""
