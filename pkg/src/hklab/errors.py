"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: configuration problems exit 1,
budget exhaustion exits 2, domain violations (e.g. an ideal pair that is not
primary to the irrelevant maximal ideal) exit 3, verification failures exit 4.
"""


class HkError(Exception):
    """Base class for all library errors."""


class ConfigError(HkError):
    """Invalid user-supplied configuration (bad prime, bad grammar, ...)."""


class PolynomialParseError(ConfigError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExponentOverflowError(HkError):
    """An exponent left the checked 64-bit range; inputs are too large."""


class CountOverflowError(HkError):
    """A lattice-point count left the 64-bit interface range."""


class BudgetExceededError(HkError):
    """A Groebner or ideal-power computation exceeded its resource budget."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DomainError(HkError):
    """Mathematically invalid request for the given ring/ideal data."""


class NotMPrimaryError(DomainError):
    """A computation required a finite-colength ideal and got an infinite one."""


class NotBoundedError(DomainError):
    """No power of I lands in the Frobenius power: I is not inside radical(J)."""


class VerificationError(HkError):
    """The built-in invariant suite found a violation."""
