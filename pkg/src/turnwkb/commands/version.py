import platform
import sys
from importlib import metadata

import click

from turnwkb.parsing import command
from turnwkb.safeio import colon_formatted_print, verbosity
from turnwkb.version import __version__

NUMERICS_STACK = ("numpy", "scipy", "mpmath")
CLI_STACK = ("click", "jmespath")


def _installed(dist):
    try:
        return metadata.version(dist)
    except metadata.PackageNotFoundError:
        return "[not installed]"


def _mpmath_backend():
    # gmpy makes the parabolic cylinder series much faster at high precision
    try:
        import mpmath.libmp
    except ImportError:
        return "[import failed]"
    return mpmath.libmp.BACKEND


@command("version", disable_options=["format"], short_help="Show the version and exit")
def version_command():
    """
    Displays the installed version of turnwkb.

    With -v, also shows platform details, the versions of the numerics
    stack and the mpmath integer backend; -vv adds the CLI libraries.
    """
    click.echo(f"Installed version:  {__version__}")
    if verbosity() == 0:
        return

    click.echo("\nplatform:")
    colon_formatted_print(
        {
            "platform": platform.platform(),
            "python": f"{platform.python_implementation()} "
            f"{platform.python_version()}",
            "executable": sys.executable,
        },
        ["platform", "python", "executable"],
    )

    modules = NUMERICS_STACK + (CLI_STACK if verbosity() >= 2 else ())
    click.echo("\nmodules:")
    colon_formatted_print(
        dict({m: _installed(m) for m in modules}, mpmath_backend=_mpmath_backend()),
        list(modules) + ["mpmath_backend"],
    )
