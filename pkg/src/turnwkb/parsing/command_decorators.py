"""
Decorators for the top-level `turnwkb` group and its subcommands.
"""
import click

from turnwkb.parsing.custom_classes import TopLevelGroup, TurnwkbCommand
from turnwkb.parsing.shared_options import common_options


def main_group(f):
    f = click.group("turnwkb", cls=TopLevelGroup, help=f.__doc__)(f)
    return common_options(f)


def command(name, *, disable_options=(), **kwargs):
    """
    Like `click.command`, but takes the help string from the function
    docstring, uses TurnwkbCommand and applies the common options, minus any
    named in ``disable_options``.
    """

    def decorator(func):
        kwargs.setdefault("help", func.__doc__)
        kwargs.setdefault("cls", TurnwkbCommand)
        cmd = click.command(name, **kwargs)(func)
        return common_options(disable_options=list(disable_options))(cmd)

    return decorator
