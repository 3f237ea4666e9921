"""Exception hierarchy shared by all archzeta modules."""


class ArchZetaError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(ArchZetaError):
    pass


class NonPositiveArgument(ArchZetaError):
    """Gamma evaluated at a pole or non-positive point.

    Reaching this from a high-level routine means the parameter set does not
    satisfy the criticality/positivity conditions it was supposed to.
    """


class Overflow(ArchZetaError):
    pass


class NotInRing(ArchZetaError):
    """A value left the monomial ring (e.g. i raised to a non-integer power)."""


class IrreducibleGammaContent(ArchZetaError):
    """Net Gamma exponents do not cancel; the ratio is not elementary."""


class NotConstant(ArchZetaError):
    """A reduction expected to be constant retained genuine s-dependence."""


class ConditionViolated(ArchZetaError):
    pass


class BoundExceeded(ArchZetaError):
    pass


class AuditStructuralFailure(ArchZetaError):
    """An audit ratio carried pi or non-unit rational content."""


class DegenerateDenominator(ArchZetaError):
    pass


class ValidationError(ArchZetaError):
    """User-facing parameter validation failure (CLI exit code 1)."""
