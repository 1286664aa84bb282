"""Exception hierarchy.

Domain errors (bad input, unsupported branch) map to CLI exit code 2,
numerical errors (non-convergence, lost precision) map to exit code 3.
"""


class CaputoEITError(Exception):
    pass


class DomainError(CaputoEITError, ValueError):
    pass


class PoleError(DomainError):
    pass


class LowerParamPole(PoleError):
    pass


class IntegerB(DomainError):
    pass


class InvalidAlpha(DomainError):
    pass


class XiZero(DomainError):
    pass


class UnknownFigure(DomainError):
    pass


class UnsupportedComparison(DomainError):
    pass


class OscillatoryRejected(DomainError):
    pass


class NumericalError(CaputoEITError, ArithmeticError):
    pass


class NoConvergence(NumericalError):
    pass


class QuadratureDivergence(NumericalError):
    pass


class PrecisionInsufficient(NumericalError):
    pass
