"""Exception hierarchy shared by the library and the calculator."""


class J3Error(Exception):
    """Base class for every error raised by :mod:`j3`."""

    code = "j3_error"


class NotInvertible(J3Error, ZeroDivisionError):
    code = "not_invertible"

    def __init__(self, value, cls):
        self.value = value
        self.cls = cls
        super().__init__(f"{value} is not invertible ({cls.value})")


class PatternViolation(J3Error, ValueError):
    code = "pattern_violation"


class Singular(J3Error, ZeroDivisionError):
    code = "singular"


class ZeroLHS(J3Error, ValueError):
    code = "zero_lhs"


class Unsupported(J3Error):
    code = "unsupported"


class ZeroInput(J3Error, ValueError):
    code = "zero_input"


class DomainError(J3Error, ValueError):
    code = "domain_error"


class J3Overflow(J3Error, OverflowError):
    code = "overflow"
