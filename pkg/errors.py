"""
Exceptions raised by the Weyl-cells toolkit
The CLI maps every WeylCellsError to exit code 2
"""


class WeylCellsError(ValueError):
    """Base class for all toolkit errors"""


class PermutationParseError(WeylCellsError):
    def __init__(self, message, position=None, token=None):
        self.position = position
        self.token = token
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class InvalidPermutationError(WeylCellsError):
    pass


class RankMismatchError(WeylCellsError):
    pass


class InvalidShapeError(WeylCellsError):
    pass


class InvalidTableauError(WeylCellsError):
    pass


class DuplicateEntryError(InvalidTableauError):
    pass


class EnumerationBoundError(WeylCellsError):
    def __init__(self, what, size, bound):
        self.size = size
        self.bound = bound
        super().__init__(
            f"{what}: size {size} exceeds enumeration bound {bound} "
            f"(set WEYL_CELLS_MAX_N to raise it)"
        )


class DominanceError(WeylCellsError):
    pass


class ParameterRangeError(WeylCellsError):
    pass


class UnknownCheckError(WeylCellsError):
    pass


class CertificateError(RuntimeError):
    """A certificate failed its own re-validation (internal inconsistency)"""
