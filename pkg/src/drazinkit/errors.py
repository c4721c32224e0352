class DrazinKitError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(DrazinKitError, ValueError):
    pass


class SingularMatrix(DrazinKitError, ArithmeticError):
    pass


class MatrixParseError(DrazinKitError, ValueError):
    pass


class IndexTooLarge(DrazinKitError, ValueError):
    """Raised when a group inverse is requested for a matrix of index >= 2."""


class NotAOneInverse(DrazinKitError, ValueError):
    """The supplied matrix X does not satisfy A X A = A."""


class OrthogonalityViolated(DrazinKitError, ValueError):
    pass


class HypothesisViolated(DrazinKitError, ValueError):
    """A closed-form branch was invoked on blocks outside its hypotheses."""


class VerificationFailed(DrazinKitError, AssertionError):
    """A computed Drazin inverse failed its defining equations (internal error)."""


class ZeroPolynomial(DrazinKitError, ValueError):
    pass


class ParseError(DrazinKitError, ValueError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


class DuplicateArc(ParseError):
    pass


class ZeroWeight(ParseError):
    pass


class NotBipartiteForPartition(DrazinKitError, ValueError):
    pass


class UnequalParts(DrazinKitError, ValueError):
    pass


class NonPositiveVector(DrazinKitError, ValueError):
    pass


class ZeroInnerProduct(DrazinKitError, ValueError):
    pass


class InvalidPermutation(DrazinKitError, ValueError):
    pass


class ZeroEntryVector(DrazinKitError, ValueError):
    pass


class InvalidDigraph(DrazinKitError, ValueError):
    pass
