"""
Errors raised by the turnwkb numerics.

All errors inherit from TurnwkbError so that the CLI excepthook can dispatch on
them. Errors which describe bad input (rather than numerical failure) also
inherit from ValueError.
"""
import typing


class TurnwkbError(Exception):
    """Base class for all errors raised by turnwkb"""


class DomainError(TurnwkbError, ValueError):
    """An argument lies outside the domain on which a function is defined"""


class AssumptionError(TurnwkbError, ValueError):
    """
    A coefficient (or coefficient + eps pair) violates one or more of the
    standing assumptions under which the solver is valid.

    ``failures`` names each violated assumption in plain words.
    """

    def __init__(self, failures: typing.Sequence[str]):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class PrecisionError(TurnwkbError):
    """The arbitrary-precision path could not meet its tolerance"""

    def __init__(self, message: str, required_digits: int, budget: int):
        self.required_digits = required_digits
        self.budget = budget
        super().__init__(
            f"{message} (required {required_digits} digits, budget {budget})"
        )


class UnsupportedExact(TurnwkbError):
    """An exact phase was requested for a body with no closed form"""


class RealityError(TurnwkbError):
    """A back-transformed W vector has a non-negligible imaginary part"""

    def __init__(self, residue: float, norm: float, node_index: int):
        self.residue = residue
        self.norm = norm
        self.node_index = node_index
        super().__init__(
            f"imaginary residue {residue:.3e} at node {node_index} "
            f"exceeds tolerance for |w|={norm:.3e}"
        )


class SingularAlpha(TurnwkbError):
    """The transparent boundary condition cannot be met by scaling"""


class SingularMatch(TurnwkbError):
    """The C1 matching system between two analytic pieces is singular"""


class StepUnderflow(TurnwkbError):
    """The adaptive controller drove the step size below the floor"""

    def __init__(self, x: float, step: float):
        self.x = x
        self.step = step
        super().__init__(f"step size {step:.3e} underflow at x={x:.15g}")
