"""Exception hierarchy shared by all cpplab modules."""


class CppLabError(Exception):
    """Base class for every error raised deliberately by cpplab."""


class NotPrime(CppLabError, ValueError):
    pass


class ReducibleModulus(CppLabError, ValueError):
    pass


class UnsupportedSize(CppLabError, ValueError):
    pass


class DivisionByZero(CppLabError, ZeroDivisionError):
    pass


class InternalInvariant(CppLabError, AssertionError):
    """An arithmetic result violated a structural guarantee (a bug, not bad input)."""


class NotInvertible(CppLabError, ValueError):
    pass


class HypothesisViolated(CppLabError, ValueError):
    pass


class InadmissibleCoefficient(CppLabError, ValueError):
    pass


class ZeroGamma(CppLabError, ValueError):
    pass


class BadDivisor(CppLabError, ValueError):
    pass


class ZeroCoefficient(CppLabError, ValueError):
    pass
