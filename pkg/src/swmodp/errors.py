"""Exception types shared across the package."""


class DataError(ValueError):
    """Input data is malformed or mutually inconsistent."""


class SpecError(DataError):
    """A spec document violates the schema or a declared invariant.

    ``path`` is a dotted/indexed location such as
    ``fixed_components[2].w1``; it is empty for document-level problems.
    """

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class IntegralityError(DataError):
    """A quantity that must be a rational integer is not one."""


class UnsupportedError(DataError):
    """The configuration needs data the library will not guess.

    Raised e.g. when a signature defect or a p = 2 sign is not determined
    by the available formulas; the remedy is an explicit override.
    """


class PreconditionError(ValueError):
    """A theorem's standing hypotheses are not met by the input."""
