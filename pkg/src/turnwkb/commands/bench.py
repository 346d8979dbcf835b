from turnwkb.config import get_settings
from turnwkb.parsing import (
    command,
    eps_option,
    h_option,
    out_option,
    phase_option,
    potential_options,
    repeats_option,
)
from turnwkb.safeio import formatted_print, print_table, print_titled_table
from turnwkb.services import BENCH, StudyConfig, run_bench

ROW_FIELDS = (
    "eps",
    "marcher_runtime_s",
    "marcher_error",
    "dp45_runtime_s",
    "dp45_error",
    "dp45_tol",
    "dp45_steps",
    "runtime_ratio",
)
FIT_FIELDS = ("slope", "ci_low", "ci_high", "stderr", "n_points")


def _bench_row(row):
    return dict(row._asdict(), runtime_ratio=row.runtime_ratio)


@command("bench", short_help="Time the marcher against Dormand-Prince 4(5)")
@potential_options
@eps_option
@h_option(single=True)
@phase_option
@repeats_option
@out_option
def bench_command(coefficient, potential, eps, h, phase, repeats, out):
    """
    For each eps, time the WKB marcher at step h and an adaptive
    Dormand-Prince 4(5) integrator whose tolerance is bisected until its
    error matches the marcher's. Runtimes are the median of --repeats timed
    runs after one warm-up run; timing runs are sequential.

    Absolute runtimes depend on the machine; the ratio column and the growth
    of the dp45 step count with 1/eps are what carry over.

    Needs the airy-linear potential and the exact phase.

    {EXIT_STATUS}
    """
    cfg = StudyConfig(
        BENCH,
        coefficient,
        eps,
        h=(h,),
        phase=phase,
        potential=potential,
        repeats=repeats,
        settings=get_settings(),
    )
    report = run_bench(cfg)
    doc = {
        "potential": potential,
        "h": h,
        "repeats": repeats,
        "rows": [_bench_row(r) for r in report.rows],
        "steps_fit": report.steps_fit.to_row() if report.steps_fit else None,
    }

    def _print_text(rows):
        print_table(rows, ROW_FIELDS)
        if doc["steps_fit"] is not None:
            print_titled_table(
                "dp45 steps against 1/eps", [doc["steps_fit"]], FIT_FIELDS
            )

    formatted_print(
        doc,
        fields=ROW_FIELDS,
        response_key="rows",
        text_format=_print_text,
        out=out,
    )
