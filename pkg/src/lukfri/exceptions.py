"""Exception hierarchy shared by the solver modules and the CLI."""


class FRIError(Exception):
    """Base class for every error raised by :mod:`lukfri`."""


class InputError(FRIError, ValueError):
    """Malformed input: bad ranges, ragged matrices, dimension mismatches."""


class PreconditionError(FRIError, ValueError):
    """An operation that needs a solution of the system was given a non-solution."""


class InfeasibleError(FRIError):
    """The inequality system (or one of its rows) has no solution."""


class ResourceError(FRIError):
    """A brute-force search would exceed its configured budget."""


class InternalError(FRIError):
    """Two routes that must agree did not; indicates a bug or a false assumption."""
