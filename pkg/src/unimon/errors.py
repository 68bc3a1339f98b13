"""Exception types shared across the package."""


class UnimonError(Exception):
    """Base class for all library errors."""


class PositionError(UnimonError, ValueError):
    """A matrix position (i, j) is not strictly upper triangular or out of range."""


class SizeMismatch(UnimonError, ValueError):
    pass


class InvalidPattern(UnimonError, ValueError):
    """The zero pattern is not closed under multiplication."""

    def __init__(self, witness):
        self.witness = witness
        i, l, j = witness
        super().__init__(
            f"zero pattern not closed: ({i},{j}) forced to zero but neither "
            f"({i},{l}) nor ({l},{j}) is"
        )


class HoleOutsideAmbient(UnimonError, ValueError):
    def __init__(self, hole):
        self.hole = hole
        super().__init__(f"hole {hole} does not lie in the ambient monoid (or is the identity)")


class ClosureViolation(UnimonError, ValueError):
    """Two members multiply to a hole: y, z in S but y*z is not."""

    def __init__(self, y, z, product):
        self.y = y
        self.z = z
        self.product = product
        super().__init__(f"members {y} and {z} multiply to the hole {product}")


class GeneratorOutsideAmbient(UnimonError, ValueError):
    def __init__(self, gen):
        self.gen = gen
        super().__init__(f"generator {gen} does not lie in the ambient monoid")


class WrongAmbient(UnimonError, ValueError):
    """Operation is only defined for the commutative ambients P(n, N)."""


class NotThin(UnimonError, ValueError):
    pass


class BudgetExceeded(UnimonError, RuntimeError):
    """Enumeration or oracle ran past its configured budget.

    ``frontier`` holds the unexpanded nodes (for checkpointing) and
    ``partial`` the statistics accumulated so far, when available.
    """

    def __init__(self, message, frontier=None, partial=None):
        super().__init__(message)
        self.frontier = frontier or []
        self.partial = partial


class ConjectureCounterexample(UnimonError, RuntimeError):
    """A conjecture inequality failed. This is a finding, not a bug."""

    def __init__(self, name, monoid, record):
        self.name = name
        self.monoid = monoid
        self.record = record
        super().__init__(f"counterexample to {name}: holes={sorted(monoid.holes)} record={record}")


class ParseError(UnimonError, ValueError):
    """Input document is not valid JSON or does not have the expected shape."""
