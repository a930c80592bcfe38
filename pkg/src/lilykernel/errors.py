"""Shared exception types. Exit-code mapping lives in the CLI."""


class LilyKernelError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LilyKernelError):
    """Malformed input: bad vertex ids, unparsable files, invalid parameters."""


class InfeasibleError(LilyKernelError):
    """The requested constraint system cannot be satisfied on this graph."""


class ClosureDivergedError(LilyKernelError):
    """Projection closure exceeded its iteration cap; threshold too small."""


class SizeGuardError(LilyKernelError):
    """An exhaustive solver was asked to run above its instance-size guard."""


class InternalCheckError(LilyKernelError):
    """A runtime self-check failed; indicates a bug, not bad input."""
