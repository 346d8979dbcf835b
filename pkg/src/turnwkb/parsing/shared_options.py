import functools

import click

from turnwkb.parsing.command_state import debug_option, format_option, verbose_option
from turnwkb.parsing.detect_and_decorate import detect_and_decorate
from turnwkb.parsing.float_list import FloatListType
from turnwkb.parsing.mutex_group import mutex_option_group
from turnwkb.parsing.phase_method_type import PhaseMethodType
from turnwkb.parsing.potential_type import (
    PotentialSelector,
    PotentialType,
    potential_from_file,
)


def common_options(*args, **kwargs):
    """
    ``--debug``, ``-v``, ``-h`` and the output options ``-F``/``--jq``, shared
    by every command. ``disable_options=["format"]`` leaves the output
    options out for commands which print nothing machine-readable.
    """

    def decorate(f, disable_options=()):
        f = debug_option(f)
        f = verbose_option(f)
        f = click.help_option("-h", "--help")(f)
        if "format" not in disable_options:
            f = format_option(f)
        return f

    return detect_and_decorate(decorate, args, kwargs)


def potential_options(*args, **kwargs):
    """
    Adds ``--potential``, ``--config-potential`` and ``--x1`` and hands the
    command a ``coefficient`` built from them, plus the ``potential`` label.

    ``default`` names the built-in potential used when neither selector is
    given.
    """

    def decorate(f, default="airy-linear"):
        @functools.wraps(f)
        def wrapped(*args, **kwargs):
            selector = kwargs.pop("potential")
            config_potential = kwargs.pop("config_potential")
            x1 = kwargs.pop("x1")
            if config_potential is not None:
                selector = potential_from_file(config_potential, _usage_fail)
            elif selector is None:
                selector = PotentialSelector(default)
            kwargs["potential"] = selector.label
            kwargs["coefficient"] = selector.build(x1)
            return f(*args, **kwargs)

        cmd = mutex_option_group("--potential", "--config-potential")(wrapped)
        cmd = click.option(
            "--x1",
            type=FloatListType(max_length=1),
            callback=_single,
            help=(
                "Switching point between the analytic turning-point solution "
                "and the WKB grid. Defaults to 0.1, or to the value in the "
                "potential file"
            ),
        )(cmd)
        cmd = click.option(
            "--config-potential",
            type=click.Path(exists=True, dir_okay=False),
            help="An INI file with a [potential] section describing a(x)",
        )(cmd)
        cmd = click.option(
            "--potential",
            type=PotentialType(),
            help=f"The coefficient a(x). Defaults to {default}",
        )(cmd)
        return cmd

    return detect_and_decorate(decorate, args, kwargs)


def _usage_fail(message):
    raise click.UsageError(message)


def _single(ctx, param, value):
    return None if value is None else value[0]


def eps_option(*args, **kwargs):
    """``--eps``, a list of positive values; ``single=True`` allows just one"""

    def decorate(f, default="2^-4..2^-10", single=False):
        return click.option(
            "--eps",
            type=FloatListType(max_length=1 if single else None),
            default=default,
            show_default=True,
            callback=_single if single else None,
            help="The semiclassical parameter. Accepts 2^-k and 2^-a..2^-b",
        )(f)

    return detect_and_decorate(decorate, args, kwargs)


def h_option(*args, **kwargs):
    def decorate(f, default="1e-3", single=False):
        return click.option(
            "--h",
            "h",
            type=FloatListType(max_length=1 if single else None),
            default=default,
            show_default=True,
            callback=_single if single else None,
            help="Nominal uniform step size of the grid on [x1, 1]",
        )(f)

    return detect_and_decorate(decorate, args, kwargs)


def phase_option(*args, **kwargs):
    def decorate(f, default="exact"):
        return click.option(
            "--phase",
            type=PhaseMethodType(),
            default=default,
            show_default=True,
            help=(
                "Phase integration: exact, simpson:<panels> or adaptive:<tol>. "
                "'exact' falls back to adaptive:1e-12 for bodies without a "
                "closed-form phase"
            ),
        )(f)

    return detect_and_decorate(decorate, args, kwargs)


def out_option(f):
    return click.option(
        "--out",
        type=click.Path(dir_okay=False, writable=True, allow_dash=True),
        help=(
            "Write the machine-readable output (CSV, or JSON with "
            "--format json) to this file instead of stdout"
        ),
    )(f)


def repeats_option(f):
    return click.option(
        "--repeats",
        type=click.IntRange(min=1),
        default=5,
        show_default=True,
        help="Timed repetitions per run; the median is reported",
    )(f)


def jobs_option(f):
    return click.option(
        "--jobs",
        "-j",
        type=click.IntRange(min=1),
        help="Worker processes for the sweep. Overrides the config file",
    )(f)
