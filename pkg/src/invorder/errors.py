"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes):

* :class:`InputError` -- the arguments are malformed or violate a caller-side
  precondition (wrong universe, not a partial order, cap exceeded, ...).
* :class:`MathematicalFailure` -- the inputs are fine but the requested object
  does not exist; the exception carries a verifiable ``witness``.
"""

from __future__ import annotations

from typing import Any


class InvorderError(Exception):
    pass


class InputError(InvorderError, ValueError):
    pass


class UniverseMismatch(InputError):
    pass


class NotABijection(InputError):
    pass


class NonAbelianError(InputError):
    pass


class NotInvariantError(InputError):
    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class InvalidRelation(InputError):
    pass


class CapExceeded(InputError):
    pass


class WellDefinednessError(InputError):
    pass


class MathematicalFailure(InvorderError):
    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class OrbitConditionError(MathematicalFailure):
    """Some group element has a finite orbit with more than one point."""


class InadmissiblePair(MathematicalFailure):
    """Requested ``x <= y`` although ``y <=_G x`` already holds."""


class NotPointedError(MathematicalFailure):
    """Cone order is not antisymmetric; ``witness`` is a ZeroCombo."""


class NotSeparable(MathematicalFailure):
    """``y <=_G x`` holds in the cone order; ``witness`` is a Combo."""
