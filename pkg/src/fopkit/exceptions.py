class FopkitException(Exception):
    """Base exception for fopkit errors"""

    def __init__(self, message: str = "Computation failed", name: str = "FopkitException"):
        self.message = message
        self.name = name
        self.code = self.__class__.__name__
        super().__init__(self.message, self.name)


class InvalidInputError(FopkitException):
    """Raised when an argument violates an operation precondition"""


class BudgetExceededError(FopkitException):
    """Raised when the continued-fraction expansion exceeds its step budget"""


class DecompositionError(FopkitException):
    """Raised when a unit is not a power of the fundamental unit"""


class FamilyValidationError(FopkitException):
    """Raised when a polynomial family or McLaughlin base is invalid"""


class ConfigError(FopkitException):
    """Raised when command-line options are inconsistent"""
