"""Exception types shared across the package."""


class ArithmeticOverflowError(OverflowError):
    """A combinatorial count does not fit in a signed 64-bit integer."""


class ValidationError(ValueError):
    """An input violates a documented precondition."""


class SymmetryError(ValidationError):
    """A dense tensor failed a symmetry check.

    Carries the worst offending index tuple and its canonical (sorted)
    representative.
    """

    def __init__(self, message: str, index=None, canonical=None):
        super().__init__(message)
        self.index = index
        self.canonical = canonical


class CapacityError(ValidationError):
    """Materializing a dense tensor would exceed the configured entry cap."""


class UnsupportedOrderError(ValidationError):
    """The requested order lies outside the range a formula covers."""


class NotApplicableError(ValidationError):
    """The requested quantity is undefined for these inputs."""


class DegeneratePencilError(RuntimeError):
    """The 2x2x2 slice pencil has no two distinct eigendirections.

    Carries the detected condition as a short string.
    """

    def __init__(self, condition: str):
        super().__init__(f"degenerate pencil: {condition}")
        self.condition = condition
