import sys

import click

from turnwkb.parsing.excepthook import custom_except_hook

EXIT_STATUS_HELPTEXT = (
    "Exit status is 0 on success, 2 when the potential or eps violates a "
    "standing assumption (or on a usage error), 3 when the parabolic "
    "cylinder evaluation exceeds its digit budget, and 1 on any other "
    "failure."
)


class TurnwkbCommand(click.Command):
    """A click.Command whose helptext may hold an "{EXIT_STATUS}" block."""

    def __init__(self, *args, **kwargs):
        helptext = kwargs.pop("help", None)
        if helptext:
            kwargs["help"] = helptext.replace("{EXIT_STATUS}", EXIT_STATUS_HELPTEXT)
        super().__init__(*args, **kwargs)


class TopLevelGroup(click.Group):
    """
    The `turnwkb` group. Errors escaping a study are reported by the custom
    excepthook rather than as a traceback.
    """

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except Exception:
            custom_except_hook(sys.exc_info())
