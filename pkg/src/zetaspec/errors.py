"""Exception hierarchy shared by all modules."""


class ZetaSpecError(Exception):
    """Base class for library errors."""


class DomainError(ZetaSpecError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class BranchError(DomainError):
    """Argument lies on the branch cut of a multivalued function."""


class SingularityError(DomainError):
    """Argument lies on (or too close to) a singular point of a closed form."""


class ConvergenceError(ZetaSpecError, ArithmeticError):
    """A series or quadrature failed to reach its target accuracy."""


class DivergenceError(ConvergenceError):
    """An asymptotic series grows from its first terms, so no truncation is useful."""


class PreconditionError(DomainError):
    """An operation was asked to act outside the regime where it converges."""
