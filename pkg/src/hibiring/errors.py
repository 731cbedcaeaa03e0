"""Exception hierarchy and warning categories."""


class HibiringError(Exception):
    """Base class for all library errors."""


class PosetInputError(HibiringError):
    """Invalid data handed to a poset constructor."""


class DuplicateLabel(PosetInputError):
    pass


class UnknownLabel(PosetInputError):
    pass


class EmptyPoset(PosetInputError):
    pass


class CycleDetected(PosetInputError):
    pass


class UnknownElement(HibiringError):
    """Element query against a poset that does not contain it."""


class DecompositionMismatch(HibiringError):
    """A chain decomposition does not belong to the given poset."""


class NotHyperPlanar(HibiringError):
    """Operation requires at least one canonical chain decomposition."""


class NotPlanar(HibiringError):
    """Operation requires a two-chain canonical decomposition."""


class ParameterOutOfRange(HibiringError):
    """Parametric constructor called with out-of-range sizes."""


class NotStrictlyOrderReversing(HibiringError):
    """A graded function fails the strict order-reversal requirement."""


class TooLarge(HibiringError):
    """Ideal lattice exceeds the configured enumeration cap."""


class BudgetExceeded(HibiringError):
    """An enumeration ran past its configured budget.

    Raised instead of returning a partial (and therefore wrong) answer;
    callers may retry with a larger ``budget``.
    """


class ConsistencyFailure(HibiringError):
    """Two independently computed routes disagree.

    This always signals a bug in the library, never bad user input.
    """


class ParseError(HibiringError):
    """A poset document could not be parsed; message carries context."""


class ImpliedCoverWarning(UserWarning):
    """An input cover pair was transitively implied and has been dropped."""
