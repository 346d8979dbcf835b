import dataclasses
import typing
import warnings

import click
import jmespath

from turnwkb import config

TEXT_FORMAT = "text"
JSON_FORMAT = "json"
CSV_FORMAT = "csv"
OUTPUT_FORMATS = (TEXT_FORMAT, JSON_FORMAT, CSV_FORMAT)

# -v count -> (log level, warnings action); silent runs drop numpy and
# quadrature chatter
VERBOSITY_LEVELS = {
    0: (None, "ignore"),
    1: ("ERROR", "once"),
    2: ("INFO", "default"),
    3: ("DEBUG", "always"),
}
DEBUG_VERBOSITY = 3


@dataclasses.dataclass
class CommandState:
    """Per-invocation settings collected by the eager common options."""

    output_format: str = TEXT_FORMAT
    jmespath_expr: typing.Optional[typing.Any] = None
    debug: bool = False
    verbosity: int = 0

    def outformat_is_json(self) -> bool:
        return self.output_format == JSON_FORMAT

    def outformat_is_csv(self) -> bool:
        return self.output_format == CSV_FORMAT

    def set_verbosity(self, count: int) -> None:
        self.verbosity = count
        level, action = VERBOSITY_LEVELS[min(count, DEBUG_VERBOSITY)]
        warnings.simplefilter(action)
        if level is not None:
            config.setup_logging(level=level)
        if count >= DEBUG_VERBOSITY:
            self.debug = True


def _state(ctx) -> CommandState:
    return ctx.ensure_object(CommandState)


def format_option(f):
    def format_callback(ctx, param, value):
        if not value:
            return
        state = _state(ctx)
        # --jq already forced json
        if state.jmespath_expr is None:
            state.output_format = value.lower()

    def jmespath_callback(ctx, param, value):
        if value is None:
            return
        try:
            expr = jmespath.compile(value)
        except jmespath.exceptions.ParseError as err:
            raise click.BadParameter(str(err), ctx=ctx, param=param)
        state = _state(ctx)
        state.jmespath_expr = expr
        state.output_format = JSON_FORMAT

    f = click.option(
        "-F",
        "--format",
        type=click.Choice(OUTPUT_FORMATS, case_sensitive=False),
        help="Output format for stdout and --out files. Defaults to text",
        expose_value=False,
        callback=format_callback,
    )(f)
    return click.option(
        "--jmespath",
        "--jq",
        help=(
            "A JMESPath expression applied to the JSON form of the results, "
            "e.g. 'header.alpha_re' or 'h_slopes[].slope'. Implies -F json"
        ),
        expose_value=False,
        callback=jmespath_callback,
    )(f)


def debug_option(f):
    def callback(ctx, param, value):
        if not value or ctx.resilient_parsing:
            return
        _state(ctx).set_verbosity(DEBUG_VERBOSITY)

    return click.option(
        "--debug",
        is_flag=True,
        hidden=True,
        expose_value=False,
        callback=callback,
        is_eager=True,
    )(f)


def verbose_option(f):
    def callback(ctx, param, value):
        state = _state(ctx)
        # --debug was seen first
        if state.debug and value < DEBUG_VERBOSITY:
            return
        state.set_verbosity(value)

    return click.option(
        "--verbose",
        "-v",
        count=True,
        expose_value=False,
        callback=callback,
        is_eager=True,
        help=(
            "Log to stderr: -v errors, -vv sweep progress, -vvv grid sizes "
            "and digit budgets"
        ),
    )(f)
