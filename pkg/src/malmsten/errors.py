"""Exception hierarchy shared by every module of the package."""


class MalmstenError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MalmstenError, ValueError):
    """An argument lies outside the domain of the function."""


class InvalidArgumentError(MalmstenError, ValueError):
    """An argument is malformed (bad hint, bad tolerance, bad coefficients)."""


class NonFiniteIntegrandError(MalmstenError, ArithmeticError):
    """The integrand returned NaN or an infinity at an interior node."""


class NonFiniteTermError(MalmstenError, ArithmeticError):
    """A series term evaluated to NaN or an infinity."""


class PreconditionError(MalmstenError, ValueError):
    """The input does not satisfy the assumptions of the algorithm."""


class SingularPrefactorError(MalmstenError, ArithmeticError):
    """A trigonometric prefactor of a functional equation vanishes."""


class BranchMismatchError(MalmstenError, ValueError):
    """A relation was requested for an angle of the wrong parity."""


class SingularArgumentError(MalmstenError, ArithmeticError):
    """A relation was requested at a point where it degenerates to 0*inf."""


class UnknownIdentityError(MalmstenError, KeyError):
    """No catalog record has the requested id."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown identity"


class BindingDomainError(MalmstenError, ValueError):
    """A parameter binding falls outside the declared domain of a record."""
