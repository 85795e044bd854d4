"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes, so raise the most specific one.
"""


class MregError(Exception):
    """Base class for all package errors."""


class InputError(MregError):
    """Malformed input: ragged matrices, bad schema, unparseable text."""


class GradingError(MregError):
    """The grading is not positive, or a vector is not a positive coarsening."""


class HomogeneityError(MregError):
    """A polynomial or module element is not homogeneous in the multigrading."""


class ResourceLimitError(MregError):
    """A configured degree/box/length cap was exceeded."""


class ZeroModuleError(MregError):
    """An operation that needs a nonzero module received the zero module."""


class InsufficientBoxError(ResourceLimitError):
    """A truncation box was too small to certify the answer; enlarge it."""
