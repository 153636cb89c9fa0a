"""Exception hierarchy shared by every module."""


class GaussMigError(Exception):
    """Base class for all library errors."""


class Inconsistent(GaussMigError, ValueError):
    """A system of congruences has no solution."""


class EmptySystem(GaussMigError, ValueError):
    pass


class TooManyParticipants(GaussMigError, ValueError):
    pass


class InvalidParams(GaussMigError, ValueError):
    pass


class InvalidSecret(GaussMigError, ValueError):
    pass


class DegenerateStructure(GaussMigError, ValueError):
    """Structure lacks an authorized or a nonempty unauthorized coalition."""


class SearchExhausted(GaussMigError, RuntimeError):
    pass


class NotPairwiseCoprime(GaussMigError, ValueError):
    pass


class EnumerationTooLarge(GaussMigError, ValueError):
    pass
