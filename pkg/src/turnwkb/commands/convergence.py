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
from turnwkb.services import CONVERGENCE, StudyConfig, fit_rows, run_convergence

RECORD_FIELDS = (
    "kind",
    "eps",
    "h",
    "h_effective",
    "phase_method",
    "err_psi_inf",
    "err_eps_dpsi_inf",
    "err_total",
    "runtime_s",
)
FIT_FIELDS = ("slope", "ci_low", "ci_high", "stderr", "n_points")


@command("convergence", short_help="Errors over an (eps, h) grid with fitted orders")
@potential_options
@eps_option
@h_option(default="2^-4..2^-10")
@phase_option
@jobs_option
@out_option
def convergence_command(coefficient, potential, eps, h, phase, jobs, out):
    """
    Solve on a uniform grid for every (eps, h) pair and compare against the
    closed-form exact solution of the potential. Errors are sup-norms of psi
    and eps psi' over [0, 1].

    The order in h is fitted for each eps and the order in eps for each h,
    by least squares on log-log data, leaving out errors at or below the
    round-off floor of 1e-11. Fits appear in text and JSON output; CSV
    output holds the error records only.

    {EXIT_STATUS}
    """
    cfg = StudyConfig(
        CONVERGENCE,
        coefficient,
        eps,
        h=h,
        phase=phase,
        potential=potential,
        settings=get_settings(jobs=jobs),
    )
    report = run_convergence(cfg)
    doc = {
        "potential": potential,
        "x1": cfg.x1,
        "records": [r.to_row() for r in report.records],
        "h_slopes": fit_rows(report.h_slopes, "eps"),
        "eps_slopes": fit_rows(report.eps_slopes, "h"),
    }

    def _print_text(records):
        print_table(records, RECORD_FIELDS)
        print_titled_table("order in h", doc["h_slopes"], ("eps",) + FIT_FIELDS)
        print_titled_table("order in eps", doc["eps_slopes"], ("h",) + FIT_FIELDS)

    formatted_print(
        doc,
        fields=RECORD_FIELDS,
        response_key="records",
        text_format=_print_text,
        out=out,
    )
