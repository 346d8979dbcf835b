import click

from turnwkb.coefficient import pcf_quadratic
from turnwkb.config import get_settings
from turnwkb.parsing import FloatListType, command, eps_option, jobs_option, out_option
from turnwkb.safeio import formatted_print, print_table, print_titled_table
from turnwkb.services import (
    APPROX,
    DEFAULT_X1_VALUES,
    StudyConfig,
    fit_rows,
    run_approx_study,
)

ROW_FIELDS = ("eps", "x1", "max_error")
FIT_FIELDS = ("slope", "ci_low", "ci_high", "stderr", "n_points")


@command("approx", short_help="Error of the tangent-line approximation near x = 0")
@eps_option(default="2^-4..2^-7")
@click.option(
    "--x1",
    "x1_values",
    type=FloatListType(),
    default=",".join(str(x) for x in DEFAULT_X1_VALUES),
    show_default=True,
    help="Points up to which a(x) is replaced by its tangent line x",
)
@jobs_option
@out_option
def approx_command(eps, x1_values, jobs, out):
    """
    Model error of linearising the coefficient at the turning point.

    The reference potential is a = x left of 0 and a = x - x^2/2 on [0, 1].
    Its approximation keeps a = x up to x1 and switches to x - x^2/2 beyond.
    Both problems are solved exactly with Airy and parabolic cylinder
    functions glued C1 at the interface; the table holds max |psi - psi_x1|
    over [0, 1]. No grid is involved, so the error is purely due to the
    model. Exponents are fitted in x1 for each eps and in eps for each x1.

    {EXIT_STATUS}
    """
    cfg = StudyConfig(
        APPROX,
        pcf_quadratic(min(x1_values)),
        eps,
        x1_values=x1_values,
        potential="pcf-quadratic",
        settings=get_settings(jobs=jobs),
    )
    report = run_approx_study(cfg)
    doc = {
        "x0": cfg.x0,
        "rows": [r._asdict() for r in report.rows],
        "x1_slopes": fit_rows(report.x1_slopes, "eps"),
        "eps_slopes": fit_rows(report.eps_slopes, "x1"),
    }

    def _print_text(rows):
        print_table(rows, ROW_FIELDS)
        print_titled_table("exponent in x1", doc["x1_slopes"], ("eps",) + FIT_FIELDS)
        print_titled_table("exponent in eps", doc["eps_slopes"], ("x1",) + FIT_FIELDS)

    formatted_print(
        doc,
        fields=ROW_FIELDS,
        response_key="rows",
        text_format=_print_text,
        out=out,
    )
