"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed flag shape, coset text, or out-of-range argument."""


class InvariantError(RuntimeError):
    """An internal consistency check failed.

    This signals a bug in the library rather than bad user input.
    """


class OracleSizeError(ValueError):
    """The shape has too many cosets for an exhaustive oracle sweep."""
