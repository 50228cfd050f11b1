"""Exception types shared across the package."""


class CfdimError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CfdimError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class InsufficientPrecision(CfdimError):
    """A sample interval straddles a cylinder boundary; caller should
    resample the same point at higher precision."""


class BudgetExceeded(CfdimError):
    """An enumeration or summation would exceed the configured budget."""


class ConvergenceError(CfdimError):
    """An iterative scheme stagnated or exhausted its schedule."""


class NoRoot(CfdimError):
    """The bisection sign condition failed at both interval ends."""


class FeasibilityError(CfdimError, ValueError):
    """A parameter chain violates its ordering/feasibility constraints."""


class InfeasibleParameters(CfdimError, ValueError):
    """Requested construction parameters admit no valid schedule."""


class EmptyDigitRange(CfdimError):
    """An integer digit range [ceil(a), floor(2a)] came out empty."""


class NotInTree(CfdimError, ValueError):
    """A digit prefix violates the constraints of the construction tree."""


class UndefinedLevel(CfdimError):
    """The mass table pins no exact value at this order (strict mode)."""


class LengthError(CfdimError, ValueError):
    """A digit sequence is too short for the requested indices."""


class PrecisionBudgetExceeded(CfdimError):
    """A sample could not be certified within the precision cap."""
