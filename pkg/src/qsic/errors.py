"""Exception taxonomy for the quadric intersection classifier.

Every failure mode that a caller can meaningfully react to gets its own
class; the CLI maps the input/geometry errors to distinct exit codes.
"""


class QsicError(Exception):
    """Base class for all errors raised by this package."""


class ZeroPolynomial(QsicError):
    """An operation that needs a nonzero polynomial received the zero one."""


class DegreeTooLow(QsicError):
    """Polynomial degree is below what the operation requires."""


class ZeroForm(QsicError):
    """A quadric input has all ten coefficients equal to zero."""


class ProportionalForms(QsicError):
    """The two quadrics are nonzero scalar multiples of each other."""


class DegeneratePencil(QsicError):
    """det(lambda*A - B) vanishes identically; the pencil has no
    characteristic roots and the classification does not apply."""


class NotARoot(QsicError):
    """A per-root query was made at a point that is not a root of the
    characteristic polynomial."""


class ParseError(QsicError):
    """Input text could not be parsed as a pair of quadrics."""


class NonRationalCoefficient(ParseError):
    """A coefficient token is not an integer or a p/q rational
    (floating-point literals are rejected on purpose)."""


class TableMiss(QsicError):
    """Internal consistency failure: a computed canonical key has no entry
    in the classification table."""
