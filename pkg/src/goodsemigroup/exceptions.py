"""Exception hierarchy.

Every error raised on purpose by this package derives from
:class:`GoodSemigroupError`, so callers (and the CLI) can separate domain
failures from programming mistakes.
"""


class GoodSemigroupError(Exception):
    """Base class for all package errors."""


class UsageError(GoodSemigroupError, ValueError):
    """Bad arguments: dimension mismatch, infinite coordinate where a finite
    point is required, malformed text, and so on."""


class AxiomViolation(GoodSemigroupError):
    """A candidate semigroup or ideal fails one of its defining axioms.

    ``witness`` holds the offending points (and index, for G2), in the
    order the checker found them.
    """

    axiom = "axiom"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MissingZero(AxiomViolation):
    axiom = "zero"


class NoUniqueMaximum(AxiomViolation):
    axiom = "maximum"


class NotAMonoid(AxiomViolation):
    axiom = "closure"


class G1Violation(AxiomViolation):
    axiom = "G1"


class G2Violation(AxiomViolation):
    axiom = "G2"


class ConductorNotMinimal(AxiomViolation):
    axiom = "conductor"


class NotGoodIdeal(AxiomViolation):
    axiom = "ideal"


class NotProper(GoodSemigroupError):
    pass


class NotInSemigroup(GoodSemigroupError):
    pass


class ZeroGenerator(GoodSemigroupError):
    pass


class NotInComplement(GoodSemigroupError):
    pass


class PreconditionViolated(GoodSemigroupError):
    pass


class InternalInconsistency(GoodSemigroupError):
    pass


class MixedU(GoodSemigroupError):
    pass


class IndexNotInU(GoodSemigroupError):
    pass


class GridTooLarge(GoodSemigroupError):
    pass


class InvalidNumericalSemigroup(GoodSemigroupError):
    pass


class GenerationExhausted(GoodSemigroupError):
    pass
