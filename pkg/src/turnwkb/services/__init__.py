from turnwkb.services.export import (
    SOLUTION_COLUMNS,
    fit_rows,
    solution_header,
    solution_rows,
)
from turnwkb.services.fitting import ROUNDOFF_FLOOR, SlopeFit, fit_slope
from turnwkb.services.grids import UniformGrid, sup_grid, uniform_grid
from turnwkb.services.studies import (
    APPROX,
    BENCH,
    BLOWUP,
    CONVERGENCE,
    DEFAULT_X1_VALUES,
    SOLVE,
    StudyConfig,
    approximation_error,
    effective_phase,
    run_approx_study,
    run_bench,
    run_blowup,
    run_convergence,
)
from turnwkb.services.sweep import run_sweep

__all__ = (
    "SOLUTION_COLUMNS",
    "fit_rows",
    "solution_header",
    "solution_rows",
    "ROUNDOFF_FLOOR",
    "SlopeFit",
    "fit_slope",
    "UniformGrid",
    "sup_grid",
    "uniform_grid",
    "APPROX",
    "BENCH",
    "BLOWUP",
    "CONVERGENCE",
    "DEFAULT_X1_VALUES",
    "SOLVE",
    "StudyConfig",
    "approximation_error",
    "effective_phase",
    "run_approx_study",
    "run_bench",
    "run_blowup",
    "run_convergence",
    "run_sweep",
)
