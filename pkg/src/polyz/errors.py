"""Exception hierarchy for polyz.

Every structured failure mode raised by the library derives from PolyzError so
callers (and the CLI) can separate input problems from resource caps.
"""


class PolyzError(Exception):
    pass


class InputError(PolyzError):
    """Malformed or inconsistent input (maps to CLI exit code 2)."""


class ResourceLimit(PolyzError):
    """A configured resource cap was exceeded (maps to CLI exit code 3)."""


class Zero(InputError):
    """An argument that must be nonzero was zero."""


class NotPrime(InputError):
    pass


class NotCoprime(InputError):
    pass


class NoVariables(InputError):
    """Operation needs at least one variable (N = 0 supplied)."""


class NonConstantLeading(InputError):
    """Pseudo-division divisor lacks a constant leading coefficient in X_N."""


class ExponentBlowup(ResourceLimit):
    """Kronecker-substitution exponent would exceed the configured cap."""


class ZeroMatrix(InputError):
    pass


class SingularMinor(InputError):
    pass


class CombinatorialLimit(ResourceLimit):
    """Minor enumeration beyond the configured cap (strict mode only)."""


class MixedSystems(InputError):
    """Generator sets that do not verify against the same system."""


class ParseError(InputError):
    """Polynomial text that does not match the grammar.

    Carries the character position and a short expectation message.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SchemaError(InputError):
    """Problem or certificate JSON does not match the documented schema."""


class InvariantViolation(PolyzError):
    """An internal certified-by-construction assertion failed.

    These are never expected to fire; the test suite counts occurrences.
    """
