"""Exception types shared across the package."""


class LcmkitError(Exception):
    """Base class for all lcmkit errors."""


class ParseError(LcmkitError):
    """A facet/poset/module file could not be parsed."""


class VoidComplexError(LcmkitError):
    """Operation requires a nonvoid complex (the void complex has no faces at all)."""


class InvalidFaceError(LcmkitError):
    """The given vertex set is not a face of the complex."""


class ZeroModuleError(LcmkitError):
    """Operation requires a nonzero squarefree module."""


class InvalidModuleError(LcmkitError):
    """The multiplication maps of a squarefree module are inconsistent."""


class RequiresCohenMacaulayError(LcmkitError):
    """Operation is only defined for Cohen-Macaulay input."""


class PosetValidationError(LcmkitError):
    """Raw poset data does not describe a simplicial poset."""


class MultipleMinimalError(PosetValidationError):
    """The poset has more than one minimal element (or the declared bottom is wrong)."""


class NonBooleanIntervalError(PosetValidationError):
    """Some lower interval [bottom, x] is not a boolean algebra."""


class RankMismatchError(PosetValidationError):
    """Cover relations do not define a grading, or rank != number of atoms below."""


class TooLargeError(LcmkitError):
    """Exhaustive enumeration was requested beyond its size cap."""
