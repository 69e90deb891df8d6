"""Error taxonomy shared across the package.

All of these derive from ValueError so callers that do not care about the
distinction can catch one thing.  The CLI maps them to exit code 1;
"no such object exists / budget exhausted" is never an exception, it is a
``None`` result (CLI exit code 2).
"""


class ConfigurationError(ValueError):
    """A parameter set is invalid or infeasible (bad p, impossible sizes)."""


class DomainError(ValueError):
    """An operation was called outside its domain (empty graph, u == v, ...)."""


class PreconditionError(ValueError):
    """A documented precondition of an algorithm does not hold."""


class SizeGuardError(ValueError):
    """An exact/exponential routine was asked to exceed its size guard."""


class InternalCheckError(RuntimeError):
    """A runtime structural check failed; aborting instead of proceeding."""
