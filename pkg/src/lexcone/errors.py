"""Exception types shared across the package."""


class LexconeError(Exception):
    """Base class for all domain errors raised by lexcone."""


class CycleError(LexconeError):
    """The input relation is not a partial order (its closure has a cycle)."""


class UnknownLabel(LexconeError):
    """A label was referenced that is not an element of the poset."""


class PosetMismatch(LexconeError):
    """Two vectors (or a vector and an operation) live on different posets."""


class NotApplicable(LexconeError):
    """The operation's precondition on the chosen element fails."""


class NotAForest(LexconeError):
    """Lattice operation requested on a poset that is not a forest."""


class IsAForest(LexconeError):
    """Non-forest witness requested on a poset that is a forest."""


class NotAnUpperBound(LexconeError):
    """A vector claimed to be an upper bound fails the order checks."""


class NotPositive(LexconeError):
    """The vector is not in the positive cone."""


class NotInCone(LexconeError):
    """The vector is not a member of the cone in question."""


class NotAProductPoset(LexconeError):
    """The vector does not live on the product of the two given posets."""


class DimensionMismatch(LexconeError):
    """Vector or matrix dimensions do not agree."""


class NoHalfSpace(LexconeError):
    """The wedge spans the whole space, so no nontrivial half-space contains it."""


class NotPointed(LexconeError):
    """The cone operation requires a pointed cone."""


class VerificationError(LexconeError):
    """A runtime self-check of a constructed certificate failed.

    Raised instead of returning silently wrong data; seeing this means a bug,
    not bad input.
    """
