"""
Custom handling for exceptions which escape a subcommand.

Outside of debug mode, errors from the numerics are reduced to a short
report on stderr and a documented exit status. Each error type which needs
special treatment gets a hook, registered in order with a condition; the
first hook whose condition matches handles the error and exits.
"""
import functools
import sys

import click
import click.exceptions

from turnwkb.exc import AssumptionError, PrecisionError, TurnwkbError
from turnwkb.parsing.command_state import CommandState
from turnwkb.safeio import PrintableErrorField, write_error_info

ASSUMPTION_EXIT = 2
PRECISION_EXIT = 3
FAILURE_EXIT = 1

_REGISTERED_HOOKS = []


def turnwkb_excepthook(condition, exit_code=FAILURE_EXIT):
    """register a hook for errors matching ``condition``, exiting with exit_code"""

    def inner_decorator(fn):
        @functools.wraps(fn)
        def wrapped(exception):
            fn(exception)
            sys.exit(exit_code)

        _REGISTERED_HOOKS.append((wrapped, condition))
        return wrapped

    return inner_decorator


@turnwkb_excepthook(lambda err: isinstance(err, AssumptionError), ASSUMPTION_EXIT)
def assumption_hook(exception):
    write_error_info(
        "Assumption Violated",
        [
            PrintableErrorField("error_type", exception.__class__.__name__),
            PrintableErrorField(
                "failures", "\n".join(exception.failures), multiline=True
            ),
        ],
    )


@turnwkb_excepthook(lambda err: isinstance(err, PrecisionError), PRECISION_EXIT)
def precision_hook(exception):
    write_error_info(
        "Precision Budget Exceeded",
        [
            PrintableErrorField("required_digits", exception.required_digits),
            PrintableErrorField("budget", exception.budget),
            PrintableErrorField("message", str(exception), multiline=True),
        ],
        message=(
            f"{PrintableErrorField.TEXT_PREFIX} parabolic cylinder evaluation "
            f"needs {exception.required_digits} digits but the budget is "
            f"{exception.budget}. Raise pcf_max_digits in the [numerics] "
            "section of the config file or use a larger eps."
        ),
    )


@turnwkb_excepthook(lambda err: True)  # catch-all
def turnwkb_hook(exception):
    write_error_info(
        "Numerics Error",
        [
            PrintableErrorField("error_type", exception.__class__.__name__),
            PrintableErrorField("message", str(exception), multiline=True),
        ],
    )


def custom_except_hook(exc_info):
    """
    Present errors raised under the CLI without a stacktrace. With --debug
    (or -vvv) the real excepthook prints the traceback first.
    """
    exception_type, exception, traceback = exc_info

    ctx = click.get_current_context()
    state = ctx.ensure_object(CommandState)
    if state.debug:
        sys.excepthook(exception_type, exception, traceback)

    if isinstance(exception, TurnwkbError):
        for (handler, condition) in _REGISTERED_HOOKS:
            if not condition(exception):
                continue
            handler(exception)

    # click formats its own exceptions
    if isinstance(
        exception, (click.ClickException, click.exceptions.Abort, click.exceptions.Exit)
    ):
        raise exception.with_traceback(traceback)

    # anything else, e.g. a ValueError from numpy, is printed plainly
    click.echo(
        "{}: {}".format(
            click.style(exception_type.__name__, bold=True, fg="red"), exception
        ),
        err=True,
    )
    sys.exit(FAILURE_EXIT)
