"""
Read the output settings of the running command. Only valid inside a click
context.
"""
import click

from turnwkb.parsing.command_state import CommandState


def _state() -> CommandState:
    return click.get_current_context().ensure_object(CommandState)


def outformat_is_json() -> bool:
    return _state().outformat_is_json()


def outformat_is_csv() -> bool:
    return _state().outformat_is_csv()


def get_jmespath_expression():
    return _state().jmespath_expr


def verbosity() -> int:
    return _state().verbosity
