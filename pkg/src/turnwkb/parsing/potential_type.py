import dataclasses
import typing

import click

from turnwkb.coefficient import Coefficient, airy_linear, pcf_quadratic
from turnwkb.config import load_potential
from turnwkb.exc import AssumptionError
from turnwkb.hybrid import AIRY_LINEAR, PCF_QUADRATIC

BUILTIN_POTENTIALS = {AIRY_LINEAR: airy_linear, PCF_QUADRATIC: pcf_quadratic}
FILE_PREFIX = "file:"
DEFAULT_X1 = 0.1


class PotentialSelector(typing.NamedTuple):
    label: str
    # set for potentials loaded from a file
    coefficient: typing.Optional[Coefficient] = None

    def build(self, x1: typing.Optional[float] = None) -> Coefficient:
        """the coefficient, with ``x1`` overriding the file's switching point"""
        if self.coefficient is None:
            return BUILTIN_POTENTIALS[self.label](DEFAULT_X1 if x1 is None else x1)
        if x1 is None:
            return self.coefficient
        return dataclasses.replace(self.coefficient, x1=float(x1))


def potential_from_file(path, fail):
    try:
        return PotentialSelector(f"{FILE_PREFIX}{path}", load_potential(path))
    except AssumptionError as err:
        fail(f"bad potential file {path}: {err}")


class PotentialType(click.ParamType):
    """``airy-linear``, ``pcf-quadratic`` or ``file:<path>``"""

    name = "airy-linear|pcf-quadratic|file:PATH"

    def convert(self, value, param, ctx):
        if isinstance(value, PotentialSelector):
            return value
        value = value.strip()
        if value.lower() in BUILTIN_POTENTIALS:
            return PotentialSelector(value.lower())
        if value.startswith(FILE_PREFIX) and len(value) > len(FILE_PREFIX):
            return potential_from_file(
                value[len(FILE_PREFIX) :], lambda msg: self.fail(msg, param, ctx)
            )
        self.fail(
            f"{value} is not one of {', '.join(BUILTIN_POTENTIALS)} "
            f"or {FILE_PREFIX}<path>",
            param,
            ctx,
        )
