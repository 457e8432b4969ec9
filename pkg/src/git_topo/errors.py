"""Exception hierarchy shared across the package.

Everything raised deliberately by this package derives from GitTopoError,
so callers can catch one type at the boundary (the CLI does exactly that
and maps it to exit status 2).
"""

from __future__ import annotations


class GitTopoError(Exception):
    """Base class for all errors raised by git_topo."""


class ShapeError(GitTopoError):
    """Operands have incompatible shapes (matrix sizes, weight counts, ...)."""


class DomainError(GitTopoError):
    """Input is structurally valid but outside the operation's domain."""


class SizeLimitError(GitTopoError):
    """An exhaustive search was refused because the instance is too large."""


class SchemaError(GitTopoError):
    """Serialized data does not match the documented JSON schema."""


class PreconditionError(GitTopoError):
    """A documented precondition of the operation does not hold."""


class SamplingError(GitTopoError):
    """Rejection sampling failed to produce a valid point."""
