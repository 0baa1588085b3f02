"""Exception hierarchy shared by the whole package.

The four concrete classes map one-to-one onto the CLI exit codes, so library
callers and shell scripts see the same failure taxonomy.
"""


class SubsemigroupError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SubsemigroupError):
    """Malformed input: bad alphabet, bad word, bad system file, unknown name."""

    exit_code = 1


class PreconditionError(SubsemigroupError):
    """Structurally valid input that violates an operation's precondition."""

    exit_code = 2


class EnumerationCapError(SubsemigroupError):
    """An enumeration would exceed the configured composition-word cap."""

    exit_code = 3


class ResolutionError(SubsemigroupError):
    """The requested prefix resolution is not reachable at the given depth."""

    exit_code = 4
