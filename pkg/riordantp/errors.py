from typing import Optional


class RiordanTPError(Exception):
    """Base class for every error raised by riordantp."""


class DimensionError(RiordanTPError, ValueError):
    pass


class ArgumentError(RiordanTPError, ValueError):
    pass


class UndefinedInputError(RiordanTPError, ValueError):
    pass


class DomainError(RiordanTPError, ValueError):
    pass


class PropernessError(RiordanTPError, ValueError):
    pass


class SingularityError(RiordanTPError, ValueError):
    pass


class NotRiordanError(RiordanTPError, ValueError):
    def __init__(self, row: int, col: int, expected=None, actual=None):
        self.row = row
        self.col = col
        self.expected = expected
        self.actual = actual
        detail = f"not a Riordan array: entry ({row},{col})"
        if expected is not None:
            detail += f" is {actual}, the A-sequence forces {expected}"
        super().__init__(detail)


class SizeCapExceeded(RiordanTPError, ValueError):
    def __init__(self, rows: int, cols: int, cap: int, hint: Optional[str] = None):
        self.rows = rows
        self.cols = cols
        self.cap = cap
        message = f"{rows}x{cols} matrix exceeds the all-orders size cap of {cap}"
        if hint:
            message += f" ({hint})"
        super().__init__(message)
