"""Exception types raised across the package."""


class ZeonError(Exception):
    """Base class for every error raised by zeonlap."""


# algebra
class NotNilpotent(ZeonError, ArithmeticError):
    pass


class NotInvertible(ZeonError, ArithmeticError):
    pass


# polynomials
class DegreeZero(ZeonError, ValueError):
    pass


class NotSimpleRoot(ZeonError, ArithmeticError):
    pass


class NoConvergence(ZeonError, ArithmeticError):
    pass


# matrices
class DimMismatch(ZeonError, ValueError):
    pass


class Singular(ZeonError, ArithmeticError):
    pass


class InconsistentSystem(ZeonError, ArithmeticError):
    pass


class NullVector(ZeonError, ArithmeticError):
    pass


class DeficientSpan(ZeonError, ArithmeticError):
    pass


class NotSelfAdjoint(ZeonError, ValueError):
    pass


class DegenerateSpectrum(ZeonError, ArithmeticError):
    pass


# graphs
class TooLarge(ZeonError, ValueError):
    pass


class GraphFormatError(ZeonError, ValueError):
    pass


class DuplicateLabels(ZeonError, ValueError):
    pass


class NotUniqueLabel(ZeonError, ValueError):
    pass


class NonIntegerCount(ZeonError, ArithmeticError):
    pass


class TheoremViolation(ZeonError, AssertionError):
    """An identity that must hold by theory failed; always indicates a bug."""

    def __init__(self, identity, detail=""):
        self.identity = identity
        self.detail = detail
        msg = identity if not detail else f"{identity}: {detail}"
        super().__init__(msg)


# matrix representation
class GeneratorOutOfRange(ZeonError, ValueError):
    pass


class NotInImage(ZeonError, ValueError):
    pass
