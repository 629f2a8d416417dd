"""Exception hierarchy shared by every module."""


class CyclordError(Exception):
    """Base class for all library errors."""


class InputError(CyclordError, ValueError):
    """Raised for malformed or inconsistent input."""


class MalformedTriple(InputError):
    pass


class NotDistinct(InputError):
    pass


class UnknownElement(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class EndpointsEqual(InputError):
    pass


class NotDisjoint(InputError):
    pass


class NotConvex(InputError):
    pass


class EmptyHost(InputError):
    pass


class DomainMismatch(InputError):
    pass


class NotValidated(InputError):
    pass


class FiberMismatch(InputError):
    pass


class NotInvariant(InputError):
    pass


class NotInjective(InputError):
    pass


class CutsEqual(InputError):
    pass


class NotDirected(InputError):
    pass


class NotCofinal(InputError):
    pass


class SupportsNotClosed(InputError):
    pass


class EmptySequence(InputError):
    pass


class NotBoundedVariation(InputError):
    """A function exceeds the declared variation bound."""


class ParseError(InputError):
    pass


class BudgetExceeded(CyclordError):
    """A search or refinement ran past its configured budget.

    This never signals a mathematical answer (in particular never equality);
    it only says the computation was cut off.
    """
