from turnwkb.config import get_settings
from turnwkb.parsing import (
    command,
    eps_option,
    h_option,
    jobs_option,
    out_option,
    phase_option,
    potential_options,
)
from turnwkb.safeio import formatted_print, print_table, print_titled_table
from turnwkb.services import BLOWUP, StudyConfig, run_blowup

ROW_FIELDS = ("eps", "sup_psi", "sup_eps_dpsi")
FIT_FIELDS = ("quantity", "slope", "ci_low", "ci_high", "stderr", "n_points")


@command("blowup", short_help="Fit the growth of sup|psi| as eps shrinks")
@potential_options
@eps_option
@h_option
@phase_option
@jobs_option
@out_option
def blowup_command(coefficient, potential, eps, h, phase, jobs, out):
    """
    Measure max |psi| and max |eps psi'| over [0, 1] for each eps and fit
    both against eps on a log-log scale. The solution peaks in the turning
    layer, where |psi| grows like eps^(-1/6) while eps psi' stays bounded.

    Needs at least five eps values; runs on the finest h given.

    {EXIT_STATUS}
    """
    cfg = StudyConfig(
        BLOWUP,
        coefficient,
        eps,
        h=h,
        phase=phase,
        potential=potential,
        settings=get_settings(jobs=jobs),
    )
    report = run_blowup(cfg)
    doc = {
        "potential": potential,
        "x1": cfg.x1,
        "rows": [r._asdict() for r in report.rows],
        "fits": [
            dict(quantity="sup_psi", **report.psi_fit.to_row()),
            dict(quantity="sup_eps_dpsi", **report.eps_dpsi_fit.to_row()),
        ],
    }

    def _print_text(rows):
        print_table(rows, ROW_FIELDS)
        print_titled_table("exponents in eps", doc["fits"], FIT_FIELDS)

    formatted_print(
        doc,
        fields=ROW_FIELDS,
        response_key="rows",
        text_format=_print_text,
        out=out,
    )
