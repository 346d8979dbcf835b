import re

import click

_POWER_RE = re.compile(r"^(?P<base>[0-9.]+)\s*(?:\^|\*\*)\s*(?P<exp>[+-]?\d+)$")
_RANGE_RE = re.compile(
    r"^2\s*\^\s*(?P<lo>[+-]?\d+)\s*\.\.\s*2\s*\^\s*(?P<hi>[+-]?\d+)$"
)


def parse_float(token):
    """a float, also accepting powers such as 2^-4 or 2**-4"""
    token = token.strip()
    match = _POWER_RE.match(token)
    if match:
        return float(match.group("base")) ** int(match.group("exp"))
    return float(token)


def _expand(token):
    match = _RANGE_RE.match(token.strip())
    if not match:
        return [parse_float(token)]
    lo, hi = int(match.group("lo")), int(match.group("hi"))
    step = 1 if hi >= lo else -1
    return [2.0**k for k in range(lo, hi + step, step)]


class FloatListType(click.ParamType):
    """
    Comma separated floats. Each item may be a plain float, a power
    (``2^-7``) or an inclusive dyadic range (``2^-4..2^-10``).
    """

    name = "FLOAT[,FLOAT...]"

    def __init__(self, positive=True, max_length=None):
        self.positive = positive
        self.max_length = max_length

    def get_metavar(self, param, *args, **kwargs):
        if self.max_length == 1:
            return "FLOAT"
        return self.name

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            values = [
                v for token in value.split(",") if token.strip() for v in _expand(token)
            ]
        except (ValueError, OverflowError):
            self.fail(f"{value} is not a comma separated list of floats", param, ctx)

        if not values:
            self.fail("expected at least one value", param, ctx)
        if self.max_length is not None and len(values) > self.max_length:
            self.fail(
                f"expected at most {self.max_length} value(s), got {len(values)}",
                param,
                ctx,
            )
        if self.positive and any(not v > 0 for v in values):
            self.fail(f"{value} contains a value which is not positive", param, ctx)
        return tuple(values)
