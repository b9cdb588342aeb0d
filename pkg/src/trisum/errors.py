class TrisumError(Exception):
    """Base class for all errors raised by trisum."""


class NonUnitConstantTerm(TrisumError, ValueError):
    pass


class InsufficientTable(TrisumError, ValueError):
    pass


class NonIntegerResult(TrisumError, ArithmeticError):
    pass


class UnknownCheck(TrisumError, KeyError):
    def __str__(self):
        return f"unknown check: {self.args[0]!r}"
