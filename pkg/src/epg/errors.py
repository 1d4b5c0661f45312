"""Exception types shared across the package."""


class OrderMismatchError(ValueError):
    """Operands live in different cyclotomic fields / exponent lattices."""


class SingularLeadingTermError(ArithmeticError):
    """A series (or theta factor) cannot be inverted: its leading part vanishes."""

    def __init__(self, message, sector=None):
        super().__init__(message)
        self.sector = sector


class NotHolomorphicAtCuspError(ValueError):
    """q_limit was asked of a series with negative q-exponents."""


class RingMismatchError(ValueError):
    """A cohomology-valued series was evaluated against the wrong ring."""


class NonCalabiYauError(ValueError):
    """A weight system that must satisfy sum(w) == D does not."""


class KernelOverflow(OverflowError):
    """The int64 expansion kernel would overflow; callers retry with Python ints."""
