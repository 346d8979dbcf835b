import click

from turnwkb.phase import PhaseMethod, parse_phase_method


class PhaseMethodType(click.ParamType):
    """
    How the WKB phase is integrated: ``exact``, ``simpson:<panels>`` or
    ``adaptive:<tol>``
    """

    name = "exact|simpson:M|adaptive:TOL"

    def convert(self, value, param, ctx):
        if isinstance(value, PhaseMethod):
            return value
        try:
            return parse_phase_method(value)
        except ValueError as err:
            self.fail(f"{value} is not a phase method ({err})", param, ctx)
