# src/errors.py


class VestError(Exception):
    """Base class for every error raised by this package."""


class MixedFieldError(VestError):
    pass


class DivisionByZero(VestError, ZeroDivisionError):
    pass


class InfiniteFieldError(VestError):
    pass


class NotPrimeError(VestError):
    pass


class ShapeError(VestError):
    pass


class VariantError(VestError):
    pass


class FieldError(VestError):
    """A construction is not sound over the field it was given."""


class AlphabetError(VestError):
    pass


class MalformedInputError(VestError):
    pass


class BudgetExceeded(VestError):
    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        super().__init__(f"{what} needs {needed} steps but the budget is {budget}")
        self.needed = needed
        self.budget = budget
