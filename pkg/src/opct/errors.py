"""Exception taxonomy shared by all opct modules."""


class OpctError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(OpctError, ValueError):
    """An argument is outside the documented domain (bad exponent, bad shape, bad count)."""


class UnsupportedRegimeError(OpctError):
    """The requested quantity has no implemented formula in this regime."""


class DegenerateInputError(OpctError, ValueError):
    """A quotient or ratio was requested with a vanishing denominator."""


class ResourceBudgetError(OpctError):
    """The computation would exceed an explicit enumeration or memory budget."""


class DataError(OpctError, ValueError):
    """Input data is structurally valid but unusable (e.g. nonpositive value on a log scale)."""


class SvdConvergenceError(OpctError, RuntimeError):
    """The SVD backend failed to converge; the message names the matrix size."""
