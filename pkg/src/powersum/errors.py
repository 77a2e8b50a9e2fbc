"""Exception types raised by the pipeline."""


class InvalidOrderError(ValueError):
    """Matrix order below 1."""


class OrderCapError(ValueError):
    """Requested order exceeds the configured safety cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(
            f"order {order} exceeds the configured cap of {cap}; "
            "raise it with --max-order-cap or POWERSUM_MAX_ORDER_CAP"
        )
        self.order = order
        self.cap = cap


class DimensionError(ValueError):
    """Two matrices of different order were combined."""


class PowerError(ValueError):
    """Exponent outside the range a matrix or generating function supports."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class IntegralityError(ArithmeticError):
    """A power sum evaluated to a non-integer. Always a pipeline bug."""
