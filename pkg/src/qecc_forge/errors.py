"""Exception types raised across the package."""

from __future__ import annotations


class QeccError(Exception):
    """Base class for all library errors."""


class NotPrime(QeccError, ValueError):
    def __init__(self, p: int) -> None:
        super().__init__(f"modulus {p} is not an odd prime")
        self.p = p


class NotPrimitive(QeccError, ValueError):
    def __init__(self, gamma: int, p: int, order: int) -> None:
        super().__init__(f"{gamma} has multiplicative order {order} in GF({p}), not {p - 1}")
        self.gamma = gamma
        self.p = p
        self.order = order


class DivisionByZero(QeccError, ZeroDivisionError):
    pass


class NotSquare(QeccError, ValueError):
    pass


class DimensionMismatch(QeccError, ValueError):
    pass


class OutOfRange(QeccError, ValueError):
    pass


class NotStandardForm(QeccError, ValueError):
    pass


class NotMDS(QeccError, ValueError):
    pass


class BudgetExceeded(QeccError, RuntimeError):
    """An enumeration would exceed the configured size ceiling.

    Raised up front instead of silently truncating a sweep.
    """

    def __init__(self, what: str, needed: int, budget: int) -> None:
        super().__init__(f"{what}: needs {needed} items, budget is {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget
