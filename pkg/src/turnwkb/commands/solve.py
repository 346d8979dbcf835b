import click

from turnwkb.config import get_settings
from turnwkb.hybrid import solve
from turnwkb.parsing import (
    command,
    eps_option,
    h_option,
    out_option,
    phase_option,
    potential_options,
)
from turnwkb.safeio import colon_formatted_print, formatted_print, print_table
from turnwkb.services import (
    SOLUTION_COLUMNS,
    effective_phase,
    solution_header,
    solution_rows,
    sup_grid,
    uniform_grid,
)

HEADER_FIELDS = (
    "potential",
    "kind",
    "eps",
    "h",
    "x1",
    "phase",
    "alpha_re",
    "alpha_im",
    "robin_residual",
    "transparent_residual",
    "reflection_modulus",
)


@command("solve", short_help="Solve one scattering problem and export psi")
@potential_options
@eps_option(default="2^-6", single=True)
@h_option(single=True)
@phase_option
@out_option
def solve_command(coefficient, potential, eps, h, phase, out):
    """
    Solve the scattering problem for a single eps on a uniform grid of step
    h over [x1, 1], with the analytic turning-point solution on [0, x1].

    Output rows hold x, psi, eps psi', the density n = |psi|^2 and the
    current j = eps Im(conj(psi) psi'): analytic samples of [0, x1) first,
    then the grid nodes. JSON output adds a header with alpha and the
    boundary condition residuals.

    {EXIT_STATUS}
    """
    settings = get_settings()
    grid = uniform_grid(coefficient.x1, h)
    sol = solve(
        coefficient,
        eps,
        grid.nodes,
        effective_phase(coefficient, phase),
        max_digits=settings.pcf_max_digits,
    )
    header = dict(solution_header(sol, h), potential=potential)
    doc = {
        "header": header,
        "rows": solution_rows(sol, sup_grid(coefficient, eps, settings)),
    }

    def _print_text(rows):
        colon_formatted_print(header, [(name, name) for name in HEADER_FIELDS])
        click.echo("")
        print_table(rows, [(name, name) for name in SOLUTION_COLUMNS])

    formatted_print(
        doc,
        fields=SOLUTION_COLUMNS,
        response_key="rows",
        text_format=_print_text,
        out=out,
    )
